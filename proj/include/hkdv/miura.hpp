#ifndef HKDV_MIURA_HPP
#define HKDV_MIURA_HPP

#include "hkdv/operators.hpp"

namespace hkdv {

// u -> u~ = u + sum_{k>=1} hbar^k f_k with deg_dif f_k = 2k.
class MiuraTransformation {
public:
    MiuraTransformation() : image_(DiffPoly::u()) {}
    // Throws std::invalid_argument unless image has the required shape.
    explicit MiuraTransformation(DiffPoly image);

    const DiffPoly& image() const { return image_; }
    bool is_identity() const { return image_ == DiffPoly::u(); }

    friend bool operator==(const MiuraTransformation&, const MiuraTransformation&) = default;

private:
    DiffPoly image_;
};

// f(u~) written in the variables u.
DiffPoly miura_apply(const MiuraTransformation& t, const DiffPoly& f, const Truncation& tr);

// Composite "first a, then b": u -> b(a(u)).
MiuraTransformation miura_compose(const MiuraTransformation& b, const MiuraTransformation& a, int hbar_order);

// Inverse up to hbar^G, by the fixed point S = u - sum_k hbar^k f_k[S].
MiuraTransformation miura_invert(const MiuraTransformation& t, int hbar_order);

// L ∘ K ∘ L* with L = sum_p du~/du_p d_x^p, coefficients rewritten in the new variable.
PoissonOperator miura_apply_operator(const MiuraTransformation& t, const PoissonOperator& k, int hbar_order);

// The same functional expressed in the new variable u~.
LocalFunctional miura_apply_functional(const MiuraTransformation& t, const LocalFunctional& h, int hbar_order);

} // namespace hkdv

#endif
