#include "hkdv/series_identities.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hkdv {

namespace {

std::string mismatch(const TruncSeries& lhs, const TruncSeries& rhs, int k)
{
    return "z^" + std::to_string(k) + ": lhs " + lhs[k].to_string() + ", rhs " + rhs[k].to_string();
}

void compare(VerificationReport& report, std::string name, const TruncSeries& lhs, const TruncSeries& rhs)
{
    const int k = first_difference(lhs, rhs);
    if (k < 0)
        report.add(std::move(name), true);
    else
        report.add(std::move(name), false, mismatch(lhs, rhs, k));
}

Rational delta0(int k) { return k == 0 ? Rational(1) : Rational(0); }

} // namespace

TruncSeries bernoulli_phi(int order, const BernoulliSource& b)
{
    TruncSeries phi("z", order);
    for (int i = 0; 2 * i <= order; ++i)
        phi.set(2 * i, b(2 * i) / factorial(2 * i));
    return phi;
}

VerificationReport series_identity_suite(int z_order, int k_max, const BernoulliSource& b)
{
    if (z_order < 0)
        throw std::invalid_argument("series_identity_suite: negative z_order");
    if (k_max >= 0 && z_order < 2 * k_max + 4)
        throw std::invalid_argument("series_identity_suite: z_order must be >= 2*k_max + 4");

    VerificationReport report;
    const int work = z_order + 2 * std::max(k_max, 0) + 4;
    const TruncSeries phi = bernoulli_phi(work, b);
    const TruncSeries z = TruncSeries::monomial("z", work, 1);

    {
        const TruncSeries lhs = (phi.derivative().shifted(1)).with_order(z_order);
        TruncSeries rhs = phi - phi * phi + TruncSeries::monomial("z", work, 2, Rational(1, 4));
        compare(report, "phi: z*phi' = -phi^2 + phi + z^2/4", lhs, rhs.with_order(z_order));
    }

    for (int k = 0; k <= k_max; ++k) {
        // phi*phi^{(2k)}/(2k)! = B_{2k} phi/(2k)! - sum_i B_{2i} phi^{(2k-2i+1)} z/((2i)!(2k-2i+1)!) + [k=0] z^2/4
        TruncSeries lhs = phi * phi.derivative(2 * k) * factorial(2 * k).inverse();
        TruncSeries rhs = phi * (b(2 * k) / factorial(2 * k));
        for (int i = 0; i <= k; ++i)
            rhs -= (phi.derivative(2 * k - 2 * i + 1) * z) * (b(2 * i) / (factorial(2 * i) * factorial(2 * k - 2 * i + 1)));
        rhs += TruncSeries::monomial("z", work, 2, delta0(k) / Rational(4));
        compare(report, "phi derivative identity (even), k=" + std::to_string(k), lhs.with_order(z_order),
                rhs.with_order(z_order));
    }

    for (int k = 0; k <= k_max; ++k) {
        // phi^{(2k+1)} phi/(2k+1)! = -sum_i B_{2i} phi^{(2k+2-2i)} z/((2i)!(2k+2-2i)!) + [k=0] z/4
        TruncSeries lhs = phi.derivative(2 * k + 1) * phi * factorial(2 * k + 1).inverse();
        TruncSeries rhs = TruncSeries::monomial("z", work, 1, delta0(k) / Rational(4));
        for (int i = 0; i <= k; ++i)
            rhs -= (phi.derivative(2 * k + 2 - 2 * i) * z) * (b(2 * i) / (factorial(2 * i) * factorial(2 * k + 2 - 2 * i)));
        compare(report, "phi derivative identity (odd), k=" + std::to_string(k), lhs.with_order(z_order),
                rhs.with_order(z_order));
    }

    {
        TruncSeries left("z", z_order);
        TruncSeries right("z", z_order);
        left.set(0, Rational(1));
        right.set(0, Rational(1));
        for (int g = 1; 2 * g <= z_order; ++g) {
            const Rational two_pow = power(Rational(2), 2 * g - 1);
            left.set(2 * g, (two_pow - Rational(1)) / two_pow * b(2 * g).abs() / factorial(2 * g));
            const Rational sign = g % 2 == 0 ? Rational(1) : Rational(-1);
            right.set(2 * g, sign / (power(Rational(2), 2 * g) * factorial(2 * g + 1)));
        }
        compare(report, "Miura product identity", left * right, TruncSeries::monomial("z", z_order, 0));
    }

    {
        bool ok = true;
        std::string detail;
        for (int m = 2; 2 * m <= z_order; ++m) {
            Rational lhs;
            for (int m1 = 1; m1 < m; ++m1)
                lhs += b(2 * m1).abs() * b(2 * (m - m1)).abs() / (factorial(2 * m1) * factorial(2 * (m - m1)));
            const Rational rhs = Rational(2 * m + 1) * b(2 * m).abs() / factorial(2 * m);
            if (lhs != rhs) {
                ok = false;
                detail = "m=" + std::to_string(m) + ": lhs " + lhs.to_string() + ", rhs " + rhs.to_string();
                break;
            }
        }
        report.add("Bernoulli convolution sum", ok, detail);
    }
    return report;
}

} // namespace hkdv
