#pragma once

#include <complex>
#include <span>

#include "nlc/grid.hpp"

namespace nlc {

// Serialized front end to FFTW's complex-to-complex transforms.
// Plans are cached per (dim, size) and executed under a lock; callers see
// plain value semantics. forward() applies the 1/N scaling so that a
// constant field transforms to a single k=0 coefficient with that value.
namespace fft {

void forward(const Grid& g, std::span<const std::complex<double>> in, std::span<std::complex<double>> out);
void backward(const Grid& g, std::span<const std::complex<double>> in, std::span<std::complex<double>> out);

}  // namespace fft
}  // namespace nlc
