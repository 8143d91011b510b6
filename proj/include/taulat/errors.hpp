#pragma once

#include <stdexcept>
#include <string>

namespace taulat {

// A required divisor evaluated to exactly zero (a lattice value, a leading
// coefficient, ...).  Carries the site description so drivers can report
// where the degeneracy occurred.
class DegenerateEvaluation : public std::runtime_error {
public:
    explicit DegenerateEvaluation(const std::string& site)
        : std::runtime_error("degenerate evaluation: " + site) {}
};

// A propagation target whose stencil is not fully present in the grid.
class MissingValue : public std::runtime_error {
public:
    explicit MissingValue(const std::string& what)
        : std::runtime_error("missing value: " + what) {}
};

// A coordinate map was queried for a label it does not hold.
class MissingCoordinate : public std::runtime_error {
public:
    explicit MissingCoordinate(const std::string& label)
        : std::runtime_error("missing coordinate: " + label) {}
};

} // namespace taulat
