#pragma once

#include <array>
#include <cstddef>
#include <numbers>

namespace nlc {

// Periodic n-dimensional grid, n in {2,3}, with `size` points per axis
// (power of two, >= 8) and period `length`. Spectral coefficients live in
// standard DFT frequency order per axis: 0, 1, ..., size/2-1, -size/2, ..., -1.
// The Nyquist index size/2 is kept in the layout but its coefficient is
// forced to zero on all fields so derivative multipliers stay skew-symmetric.
class Grid {
  public:
    Grid() = default;
    Grid(int dim, int size, double length = 2.0 * std::numbers::pi);

    int dim() const { return dim_; }
    int size() const { return size_; }
    double length() const { return length_; }

    std::size_t modes() const { return modes_; }
    double spacing() const { return length_ / size_; }

    // Physical wavenumber unit: one integer mode corresponds to 2*pi/L.
    double wavenumber_unit() const { return 2.0 * std::numbers::pi / length_; }

    // Integer wavenumber of array index i along one axis.
    int freq(int i) const { return i <= size_ / 2 ? i : i - size_; }
    bool is_nyquist(int i) const { return i == size_ / 2; }

    // Largest |xi|^2 representable with the Nyquist mode excluded.
    double max_wavenumber_sq() const;

    bool operator==(const Grid& other) const = default;

  private:
    int dim_ = 2;
    int size_ = 64;
    double length_ = 2.0 * std::numbers::pi;
    std::size_t modes_ = 64 * 64;
};

// Calls fn(flat_index, k) for every mode, with k the integer wavenumber
// vector (unused axes zero). Layout is row-major: axis 0 is slowest.
template <class Fn>
void for_each_mode(const Grid& g, Fn&& fn) {
    const int m = g.size();
    std::array<int, 3> k{0, 0, 0};
    std::size_t flat = 0;
    if (g.dim() == 2) {
        for (int i0 = 0; i0 < m; ++i0) {
            k[0] = g.freq(i0);
            for (int i1 = 0; i1 < m; ++i1, ++flat) {
                k[1] = g.freq(i1);
                fn(flat, k);
            }
        }
    } else {
        for (int i0 = 0; i0 < m; ++i0) {
            k[0] = g.freq(i0);
            for (int i1 = 0; i1 < m; ++i1) {
                k[1] = g.freq(i1);
                for (int i2 = 0; i2 < m; ++i2, ++flat) {
                    k[2] = g.freq(i2);
                    fn(flat, k);
                }
            }
        }
    }
}

// Flat index of the reflected mode -k (per-axis index m - i mod m).
std::size_t reflected_index(const Grid& g, std::size_t flat);

}  // namespace nlc
