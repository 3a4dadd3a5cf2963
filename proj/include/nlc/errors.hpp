#pragma once

#include <stdexcept>
#include <string>

namespace nlc {

// Field/grid shape mismatches (array sizes, incompatible grids).
class ShapeError : public std::invalid_argument {
  public:
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

// A time integration produced NaN/Inf; carries the time of failure.
class DivergenceError : public std::runtime_error {
  public:
    DivergenceError(const std::string& what, double t) : std::runtime_error(what), time_of_failure(t) {}
    double time_of_failure;
};

// Trajectory has too few snapshots for the requested quadrature/differencing.
class InsufficientDataError : public std::invalid_argument {
  public:
    explicit InsufficientDataError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace nlc
