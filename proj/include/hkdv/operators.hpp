#ifndef HKDV_OPERATORS_HPP
#define HKDV_OPERATORS_HPP

#include <map>
#include <string>

#include "hkdv/localfunc.hpp"

namespace hkdv {

// sum_j a_j d_x^j with coefficients on the left. Parameters (hbar, eps, mu) live
// inside the coefficients.
class DiffOperator {
public:
    using Coefficients = std::map<int, DiffPoly>;

    DiffOperator() = default;
    explicit DiffOperator(Coefficients c);
    static DiffOperator dx(int power = 1);
    static DiffOperator multiplication(const DiffPoly& a);

    const Coefficients& coefficients() const { return c_; }
    DiffPoly coefficient(int j) const;
    bool is_zero() const { return c_.empty(); }
    void add(int j, const DiffPoly& a);

    DiffOperator truncated(const Truncation& t) const;
    DiffOperator operator-() const;
    DiffOperator& operator+=(const DiffOperator& o);
    friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
    friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a += -b; }
    friend bool operator==(const DiffOperator&, const DiffOperator&) = default;

    // Entries grouped by hbar power: "(f)*hbar^i*dx^j" sorted by (i, j).
    std::string to_string() const;

private:
    Coefficients c_;
};

// A Poisson operator is stored in the same shape; the grading invariant is
// deg_dif f_{i,j} + j = 2i + 1.
using PoissonOperator = DiffOperator;
bool satisfies_poisson_grading(const PoissonOperator& k);

DiffPoly apply(const DiffOperator& k, const DiffPoly& f, const Truncation& t);
// a ∘ b with d_x^i ∘ f = sum_k C(i,k) (d_x^k f) d_x^{i-k}.
DiffOperator compose(const DiffOperator& a, const DiffOperator& b, const Truncation& t);
// Formal adjoint: sum_j (-d_x)^j ∘ a_j.
DiffOperator adjoint(const DiffOperator& a, const Truncation& t);

// {g, h}_K = int δg/δu K(δh/δu) dx, reported in ibp normal form.
LocalFunctional poisson_bracket(const LocalFunctional& g, const LocalFunctional& h, const PoissonOperator& k,
                                const Truncation& t);

} // namespace hkdv

#endif
