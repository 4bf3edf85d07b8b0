#include <gtest/gtest.h>

#include <random>

#include "hkdv/bernoulli.hpp"
#include "hkdv/scalar.hpp"
#include "hkdv/series_identities.hpp"

using namespace hkdv;

namespace {

// Akiyama-Tanigawa algorithm; yields B_m with B_1 = +1/2, so only even m are compared.
Rational akiyama_tanigawa(int m)
{
    std::vector<Rational> a(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) {
        a[static_cast<std::size_t>(j)] = Rational(1, j + 1);
        for (int k = j; k >= 1; --k)
            a[static_cast<std::size_t>(k - 1)] =
                Rational(k) * (a[static_cast<std::size_t>(k - 1)] - a[static_cast<std::size_t>(k)]);
    }
    return a[0];
}

} // namespace

TEST(Rational, CanonicalForm)
{
    EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
    EXPECT_EQ(Rational(8, 4).to_string(), "2");
    EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
    EXPECT_THROW(Rational(0).inverse(), std::domain_error);
}

TEST(Rational, FieldAxiomsOnRandomSample)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-50, 50);
    auto draw = [&] {
        long den = 0;
        while (den == 0)
            den = d(rng);
        return Rational(d(rng), den);
    };
    for (int i = 0; i < 200; ++i) {
        const Rational a = draw(), b = draw(), c = draw();
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ(a - a, Rational(0));
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), Rational(1));
        }
    }
}

TEST(Rational, FactorialBinomial)
{
    EXPECT_EQ(factorial(10), Rational(3628800));
    EXPECT_EQ(binomial(10, 3), Rational(120));
    EXPECT_EQ(binomial(3, 5), Rational(0));
    EXPECT_EQ(power(Rational(2, 3), -2), Rational(9, 4));
}

TEST(Bernoulli, KnownValues)
{
    EXPECT_EQ(bernoulli(0), Rational(1));
    EXPECT_EQ(bernoulli(1), Rational(-1, 2));
    EXPECT_EQ(bernoulli(2), Rational(1, 6));
    EXPECT_EQ(bernoulli(4), Rational(-1, 30));
    EXPECT_EQ(bernoulli(12), Rational(-691, 2730));
    EXPECT_EQ(bernoulli(7), Rational(0));
    EXPECT_EQ(bernoulli_weight(1), Rational(1, 12));
    EXPECT_EQ(bernoulli_weight(2), Rational(1, 720));
}

TEST(Bernoulli, AgreesWithAkiyamaTanigawa)
{
    for (int m = 2; m <= 40; m += 2)
        EXPECT_EQ(bernoulli(m), akiyama_tanigawa(m)) << "m=" << m;
}

TEST(GaussianRational, Arithmetic)
{
    const GaussianRational i = GaussianRational::i();
    EXPECT_EQ(i * i, GaussianRational(-1));
    const GaussianRational z(Rational(3), Rational(4));
    EXPECT_EQ(z * z.inverse(), GaussianRational(1));
    EXPECT_EQ(z * z.conj(), GaussianRational(25));
    EXPECT_THROW(GaussianRational().inverse(), std::domain_error);
}

TEST(ScalarPoly, TextRoundTrip)
{
    const ScalarPoly p = ScalarPoly::hbar(2) * ScalarPoly::eps_half(-1) * ScalarPoly(Rational(-3, 4)) +
                         ScalarPoly::mu(3) * ScalarPoly::i() + ScalarPoly(5);
    EXPECT_EQ(ScalarPoly::parse(p.to_string()), p);
    EXPECT_EQ(ScalarPoly::parse("eps^-1").terms().begin()->first.eps2, -2);
    EXPECT_EQ(ScalarPoly().to_string(), "0");
}

TEST(ScalarPoly, TruncatedProductMatchesProductThenTruncate)
{
    const ScalarPoly a = ScalarPoly(1) + ScalarPoly::hbar() + ScalarPoly::mu(2);
    const ScalarPoly b = ScalarPoly::hbar(2) + ScalarPoly::mu();
    const Truncation t{2, 2};
    EXPECT_EQ(mul(a, b, t), (a * b).truncated(t));
}

TEST(SeriesIdentities, AllHold)
{
    const auto report = series_identity_suite(16, 6);
    for (const auto& c : report.checks)
        EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(SeriesIdentities, CorruptedBernoulliFails)
{
    auto corrupted = [](int m) { return m == 4 ? Rational(1, 30) : bernoulli(m); };
    EXPECT_FALSE(series_identity_suite(16, 6, corrupted).all_passed());
}

TEST(SeriesIdentities, RejectsTooSmallOrder)
{
    EXPECT_THROW(series_identity_suite(6, 3), std::invalid_argument);
}

TEST(TruncSeries, ProductKnownOnlyToMinOrder)
{
    const TruncSeries a("z", 5, {Rational(1), Rational(1)});
    const TruncSeries b("z", 3, {Rational(1), Rational(-1)});
    const TruncSeries p = a * b;
    EXPECT_EQ(p.order(), 3);
    EXPECT_EQ(p[2], Rational(-1));
    EXPECT_THROW(a.with_order(7), std::invalid_argument);
}
