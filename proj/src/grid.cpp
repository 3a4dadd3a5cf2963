#include "nlc/grid.hpp"

#include <stdexcept>
#include <string>

namespace nlc {

namespace {
bool power_of_two(int m) { return m > 0 && (m & (m - 1)) == 0; }
}  // namespace

Grid::Grid(int dim, int size, double length) : dim_(dim), size_(size), length_(length) {
    if (dim != 2 && dim != 3)
        throw std::invalid_argument("grid dimension must be 2 or 3, got " + std::to_string(dim));
    if (!power_of_two(size) || size < 8)
        throw std::invalid_argument("grid size must be a power of two >= 8, got " + std::to_string(size));
    if (!(length > 0.0))
        throw std::invalid_argument("grid period must be positive");
    modes_ = 1;
    for (int d = 0; d < dim; ++d) modes_ *= static_cast<std::size_t>(size);
}

double Grid::max_wavenumber_sq() const {
    const double kmax = (size_ / 2 - 1) * wavenumber_unit();
    return dim_ * kmax * kmax;
}

std::size_t reflected_index(const Grid& g, std::size_t flat) {
    const auto m = static_cast<std::size_t>(g.size());
    std::size_t out = 0;
    std::size_t stride = 1;
    for (int d = 0; d < g.dim(); ++d) {
        const std::size_t i = (flat / stride) % m;
        const std::size_t r = i == 0 ? 0 : m - i;
        out += r * stride;
        stride *= m;
    }
    return out;
}

}  // namespace nlc
