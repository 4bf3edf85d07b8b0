#include <gtest/gtest.h>

#include "hkdv/ilw.hpp"

using namespace hkdv;

namespace {

DiffPoly P(const char* s) { return DiffPoly::parse(s); }

// sigma_n from the logarithmic-derivative form of e^sigma = 1 + F:
// n E_n = n sigma_n + sum_{m<n} m sigma_m E_{n-m}.
std::vector<DiffPoly> sigma_oracle(int n_max, int mu_order)
{
    const Truncation t = Truncation::mu_order(mu_order);
    std::vector<DiffPoly> sigma, e;
    for (int n = 1; n <= n_max; ++n) {
        DiffPoly en;
        if (n == 1) {
            en = P("2*u0");
        } else {
            const DiffPoly& prev = sigma.back();
            en = mul(P("2*eps^-1"), prev, t) - mul(P("im*eps^(-1/2)*mu"), partial_x(prev), t) -
                 mul(P("2*mu"), op_R(partial_x(prev), mu_order), t);
        }
        e.push_back(en);
        DiffPoly acc;
        for (int m = 1; m < n; ++m)
            acc += mul(sigma[static_cast<std::size_t>(m - 1)], e[static_cast<std::size_t>(n - m - 1)], t) *
                   GaussianRational(m);
        sigma.push_back(en - acc * GaussianRational(Rational(1, n)));
    }
    return sigma;
}

} // namespace

TEST(IlwOperators, R)
{
    EXPECT_EQ(op_R(P("u1"), 3), P("1/12*mu*u2 + 1/720*eps*mu^3*u4"));
    EXPECT_TRUE(op_R(DiffPoly(), 5).is_zero());
    EXPECT_TRUE(is_homogeneous(op_R(P("u1"), 7), 1, DegreeConvention::mu_extended));
}

TEST(IlwOperators, T)
{
    const auto t = op_T(P("u2"), 1);
    ASSERT_EQ(t.size(), 1u);
    EXPECT_EQ(t.at(1), P("1/3*u3"));
    EXPECT_TRUE(op_T(DiffPoly(), 5).empty());
}

TEST(IlwOperators, RescalingGivesFirstFlow)
{
    for (int m : {2, 4, 6, 8})
        EXPECT_EQ(rescaled_ilw_flow(m), ilw_first_flow(m)) << m;
}

TEST(Sigma, FirstTerms)
{
    const SigmaExpansion s = sigma_sequence(2, 5);
    EXPECT_EQ(s.sigma(1), P("2*u0"));
    const DiffPoly expected = P("-2*u0^2 + 4*eps^-1*u0") - mul(P("2*im*eps^(-1/2)*mu"), P("u1"), Truncation::none()) -
                              mul(P("4*mu"), op_R(P("u1"), 4), Truncation::none());
    EXPECT_EQ(s.sigma(2), expected);
}

TEST(Sigma, AgreesWithLogDerivativeOracle)
{
    const int n = 6, m = 5;
    const SigmaExpansion s = sigma_sequence(n, m);
    const auto oracle = sigma_oracle(n, m);
    for (int k = 1; k <= n; ++k)
        EXPECT_EQ(s.sigma(k), oracle[static_cast<std::size_t>(k - 1)]) << k;
}

TEST(Sigma, GradingAndPrefixes)
{
    const SigmaExpansion big = sigma_sequence(5, 6);
    const SigmaExpansion small = sigma_sequence(5, 3);
    for (int k = 1; k <= 5; ++k) {
        EXPECT_TRUE(is_homogeneous(big.sigma(k), 0, DegreeConvention::mu_extended)) << k;
        EXPECT_EQ(big.sigma(k).truncated(Truncation::mu_order(3)), small.sigma(k)) << k;
    }
}

TEST(Sigma, Conservation)
{
    const SigmaExpansion s = sigma_sequence(4, 4);
    for (int n = 1; n <= 4; ++n)
        EXPECT_TRUE(conservation_check(s, n)) << n;
}

TEST(Sigma, ConservationDetectsBrokenDensity)
{
    SigmaExpansion s = sigma_sequence(3, 4);
    s.terms[2] += P("mu^2*u0*u1^2");
    EXPECT_FALSE(conservation_check(s, 3));
}

TEST(Decomposition, LowOrders)
{
    const HierarchyContext ctx(3);
    const SigmaExpansion s = sigma_sequence(5, 6);
    const auto d1 = decompose_in_hamiltonians(s, 1, ctx);
    EXPECT_EQ(d1.to_text(), "-1\t2\nresidual: 0\n");
    const auto d2 = decompose_in_hamiltonians(s, 2, ctx);
    EXPECT_EQ(d2.to_text(), "0\t-4\n-1\t4*eps^-1\nresidual: 0\n");
    const auto d3 = decompose_in_hamiltonians(s, 3, ctx);
    EXPECT_EQ(d3.coefficients.at(1), ScalarPoly(16));
    for (int n = 1; n <= 5; ++n) {
        const auto d = decompose_in_hamiltonians(s, n, ctx);
        EXPECT_TRUE(d.residual_is_zero()) << n << ": " << d.residual.to_string();
        EXPECT_TRUE(d.leading_matches) << n;
        EXPECT_TRUE(d.all_real) << n << "\n" << d.to_text();
    }
}
