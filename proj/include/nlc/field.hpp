#pragma once

#include <complex>
#include <span>
#include <vector>

#include "nlc/grid.hpp"

namespace nlc {

// One scalar field stored as complex Fourier coefficients on a periodic
// grid. Normalization: a constant field c has the single coefficient c at
// k = 0, so Parseval reads  mean(|f|^2) = sum_k |c_k|^2  with the averaged
// measure on the torus. Fields representing real data keep Hermitian
// symmetry c(-k) = conj(c(k)); the Nyquist coefficient is always zero.
struct SpectralField {
    Grid grid;
    std::vector<std::complex<double>> coeff;

    SpectralField() = default;
    explicit SpectralField(const Grid& g) : grid(g), coeff(g.modes()) {}

    std::complex<double>& operator[](std::size_t i) { return coeff[i]; }
    const std::complex<double>& operator[](std::size_t i) const { return coeff[i]; }

    SpectralField& operator+=(const SpectralField& other);
    SpectralField& operator-=(const SpectralField& other);
    SpectralField& operator*=(double s);
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double s, SpectralField f);

// Physical <-> spectral transforms. `values` must have grid.modes() entries
// (row-major); a size mismatch raises ShapeError. The forward transform
// zeroes the Nyquist modes.
SpectralField to_spectral(const Grid& g, std::span<const double> values);
std::vector<double> to_physical(const SpectralField& f);

void zero_nyquist(SpectralField& f);
void remove_mean(SpectralField& f);

double max_abs_coeff(const SpectralField& f);

// Largest |c(-k) - conj(c(k))| over all modes (absolute).
double hermitian_defect(const SpectralField& f);

// L2 norm / inner product with the averaged measure, computed spectrally
// (exact by Parseval).
double l2_norm(const SpectralField& f);
double l2_inner(const SpectralField& a, const SpectralField& b);

// Lp norm with the averaged measure: ( mean |f|^p )^{1/p}, p = inf -> grid max.
// p == 2 is evaluated spectrally; other p by grid quadrature.
double lp_norm(const SpectralField& f, double p);

bool has_nonfinite(const SpectralField& f);

}  // namespace nlc
