#include "hkdv/miura.hpp"

#include <stdexcept>

namespace hkdv {

MiuraTransformation::MiuraTransformation(DiffPoly image) : image_(std::move(image))
{
    const DiffPoly tail = image_ - DiffPoly::u();
    for (const auto& [key, c] : tail.terms()) {
        if (key.params.hbar < 1)
            throw std::invalid_argument("MiuraTransformation: correction without a positive power of hbar");
        if (key.mono.weight() != 2 * key.params.hbar)
            throw std::invalid_argument("MiuraTransformation: hbar^k coefficient is not of differential degree 2k");
    }
}

DiffPoly miura_apply(const MiuraTransformation& t, const DiffPoly& f, const Truncation& tr)
{
    return substitute(f, t.image(), tr);
}

MiuraTransformation miura_compose(const MiuraTransformation& b, const MiuraTransformation& a, int hbar_order)
{
    return MiuraTransformation(substitute(b.image(), a.image(), Truncation::hbar_order(hbar_order)));
}

MiuraTransformation miura_invert(const MiuraTransformation& t, int hbar_order)
{
    const Truncation tr = Truncation::hbar_order(hbar_order);
    const DiffPoly tail = (t.image() - DiffPoly::u()).truncated(tr);
    DiffPoly s = DiffPoly::u();
    // Each pass fixes one more power of hbar.
    for (int k = 0; k < hbar_order; ++k)
        s = DiffPoly::u() - substitute(tail, s, tr);
    return MiuraTransformation(s);
}

PoissonOperator miura_apply_operator(const MiuraTransformation& t, const PoissonOperator& k, int hbar_order)
{
    const Truncation tr = Truncation::hbar_order(hbar_order);
    DiffOperator l;
    for (int p = 0; p <= t.image().max_index(); ++p)
        l.add(p, partial_u(t.image(), p).truncated(tr));
    const DiffOperator full = compose(compose(l, k, tr), adjoint(l, tr), tr);
    if (t.is_identity())
        return full;
    const DiffPoly back = miura_invert(t, hbar_order).image();
    DiffOperator out;
    for (const auto& [j, a] : full.coefficients())
        out.add(j, substitute(a, back, tr));
    return out;
}

LocalFunctional miura_apply_functional(const MiuraTransformation& t, const LocalFunctional& h, int hbar_order)
{
    const Truncation tr = Truncation::hbar_order(hbar_order);
    return LocalFunctional(substitute(h.integrand(), miura_invert(t, hbar_order).image(), tr));
}

} // namespace hkdv
