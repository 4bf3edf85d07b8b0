#ifndef HKDV_LINSOLVE_HPP
#define HKDV_LINSOLVE_HPP

#include <stdexcept>
#include <vector>

#include "hkdv/rational.hpp"

namespace hkdv {

class InconsistentSystem : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

struct LinearSolution {
    std::vector<Rational> x;
    // Columns that received a pivot, in elimination order.
    std::vector<int> pivot_columns;
    int rank() const { return static_cast<int>(pivot_columns.size()); }
};

// Solves a x = b exactly by fraction-free (Bareiss) elimination over the integers
// after clearing denominators row by row. Pivot columns are taken left to right,
// so the caller controls tie-breaking through the column order; free variables
// are set to zero. Throws InconsistentSystem if no solution exists.
LinearSolution solve_linear_system(const RationalMatrix& a, const std::vector<Rational>& b);

int matrix_rank(const RationalMatrix& a);

} // namespace hkdv

#endif
