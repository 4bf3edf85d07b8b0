#include <gtest/gtest.h>

#include <functional>
#include <map>

#include "hkdv/bernoulli.hpp"
#include "hkdv/hodge.hpp"

using namespace hkdv;

namespace {

Rational double_factorial(int n)
{
    Rational r(1);
    for (int i = n; i > 1; i -= 2)
        r *= Rational(i);
    return r;
}

// Witten-Kontsevich numbers <tau_k1 ... tau_kn>_g by the DVV recursion,
// peeling off the first insertion.
class WittenKontsevich {
public:
    Rational operator()(int g, std::vector<int> k)
    {
        std::sort(k.begin(), k.end());
        const int n = static_cast<int>(k.size());
        if (g < 0 || 2 * g - 2 + n <= 0)
            return Rational(0);
        int sum = 0;
        for (int x : k) {
            if (x < 0)
                return Rational(0);
            sum += x;
        }
        if (sum != 3 * g - 3 + n)
            return Rational(0);
        if (g == 0 && k == std::vector<int>{0, 0, 0})
            return Rational(1);
        if (g == 1 && k == std::vector<int>{1})
            return Rational(1, 24);
        auto key = std::make_pair(g, k);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        // Peel the largest index so that the base cases are reached.
        const int a = k.back() - 1;
        std::vector<int> s(k.begin(), k.end() - 1);
        Rational total(0);
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::vector<int> rest = s;
            const int ki = rest[i];
            rest.erase(rest.begin() + static_cast<long>(i));
            rest.push_back(a + ki);
            total += double_factorial(2 * a + 2 * ki + 1) / double_factorial(2 * ki - 1) * (*this)(g, rest);
        }
        for (int r = 0; r <= a - 1; ++r) {
            const int q = a - 1 - r;
            const Rational w = double_factorial(2 * r + 1) * double_factorial(2 * q + 1) / Rational(2);
            std::vector<int> both = s;
            both.push_back(r);
            both.push_back(q);
            total += w * (*this)(g - 1, both);
            const std::size_t m = s.size();
            for (unsigned mask = 0; mask < (1u << m); ++mask)
                for (int g1 = 0; g1 <= g; ++g1) {
                    std::vector<int> left{r}, right{q};
                    for (std::size_t i = 0; i < m; ++i)
                        ((mask >> i) & 1u ? left : right).push_back(s[i]);
                    total += w * (*this)(g1, left) * (*this)(g - g1, right);
                }
        }
        total /= double_factorial(2 * a + 3);
        memo_.emplace(key, total);
        return total;
    }

private:
    std::map<std::pair<int, std::vector<int>>, Rational> memo_;
};

TSeries::Key key_of(int hbar, int eps, std::initializer_list<int> t)
{
    TSeries::Key k{};
    k[0] = static_cast<std::uint8_t>(hbar);
    k[1] = static_cast<std::uint8_t>(eps);
    std::size_t i = 2;
    for (int e : t)
        k[i++] = static_cast<std::uint8_t>(e);
    return k;
}

const HodgeRun& default_run()
{
    static const HierarchyContext ctx(3);
    static const HodgeRun run = run_hodge_pipeline(ctx, CompletionBounds{});
    return run;
}

} // namespace

TEST(WittenKontsevichOracle, KnownValues)
{
    WittenKontsevich wk;
    EXPECT_EQ(wk(0, {0, 0, 0, 1}), Rational(1));
    EXPECT_EQ(wk(1, {0, 2}), Rational(1, 24));
    EXPECT_EQ(wk(2, {4}), Rational(1, 1152));
    EXPECT_EQ(wk(3, {7}), Rational(1, 82944));
    EXPECT_EQ(wk(2, {2, 3}), Rational(29, 5760));
}

TEST(LambdaG, Values)
{
    EXPECT_EQ(lambda_g_value(1, {0}), Rational(1, 24));
    EXPECT_EQ(lambda_g_value(2, {2}), Rational(7, 5760));
    EXPECT_THROW(lambda_g_value(2, {3}), std::invalid_argument);
    EXPECT_THROW(lambda_g_value(0, {0, 0, 0}), std::invalid_argument);
}

TEST(TSeries, TruncationAndCalculus)
{
    const TSeries t0 = TSeries::t0(2, 4, 1);
    TSeries t1(2, 4, 1), t2(2, 4, 1);
    t1.add_term(key_of(0, 0, {0, 1}), Rational(1));
    t2.add_term(key_of(0, 0, {0, 0, 1}), Rational(1));
    EXPECT_TRUE((t2 * t2 * t2).is_zero());
    EXPECT_EQ((t2 * t2).coefficient(key_of(0, 0, {0, 0, 2})), Rational(1));
    EXPECT_EQ((t0 * t0 * t1).derivative_t(0).coefficient(key_of(0, 0, {1, 1})), Rational(2));
    EXPECT_EQ(t1.integral_t(1).coefficient(key_of(0, 0, {0, 2})), Rational(1, 2));
    EXPECT_TRUE(t2.integral_t(2).integral_t(2).is_zero());
    EXPECT_TRUE(t1.scaled(Rational(1), 2).is_zero());
}

TEST(Transformation, InverseCorrectionAndRoundTrip)
{
    const TSeries t0 = TSeries::t0(1, 4, 3);
    EXPECT_EQ(apply_inverse_transformation(t0), t0);

    TSeries cube(1, 4, 3);
    cube.add_term(key_of(0, 0, {3}), Rational(1, 6));
    const TSeries u = apply_inverse_transformation(cube);
    EXPECT_EQ(u.coefficient(key_of(1, 1, {1})), Rational(1, 24));

    const HierarchyContext ctx(3);
    const TSeries ut = solve_hierarchy(ctx, 3, 6);
    EXPECT_EQ(apply_forward_transformation(apply_inverse_transformation(ut)), ut);
    EXPECT_EQ(apply_inverse_transformation(apply_forward_transformation(ut)), ut);
}

TEST(SolveHierarchy, LeadingCoefficients)
{
    const HierarchyContext ctx(2);
    const TSeries u = solve_hierarchy(ctx, 2, 6);
    EXPECT_EQ(u.coefficient(key_of(0, 0, {1})), Rational(1));
    EXPECT_EQ(u.coefficient(key_of(0, 0, {1, 1})), Rational(1));
    EXPECT_EQ(first_flow_violation(ctx, u), 0);

    // Mixed partials: d/dt_2 of the t_1 flow equals d/dt_1 of the t_2 flow on the solution.
    const TSeries a = evaluate(ctx.flow(1), u).derivative_t(2);
    const TSeries b = evaluate(ctx.flow(2), u).derivative_t(1);
    TSeries ac(2, 3, 2), bc(2, 3, 2);
    for (const auto& [k, c] : a.terms())
        ac.add_term(k, c);
    for (const auto& [k, c] : b.terms())
        bc.add_term(k, c);
    EXPECT_EQ(ac, bc);
    EXPECT_FALSE(ac.is_zero());
}

TEST(SolveHierarchy, BrokenSeriesIsDetected)
{
    const HierarchyContext ctx(1);
    TSeries u = solve_hierarchy(ctx, 2, 4);
    u.add_term(key_of(1, 0, {1, 2}), Rational(1));
    EXPECT_NE(first_flow_violation(ctx, u), 0);
}

TEST(Extraction, BaseEntries)
{
    TSeries u(2, 4, 1);
    u.add_term(key_of(0, 0, {1}), Rational(1));
    u.add_term(key_of(1, 0, {2, 0, 1}), Rational(1, 3));
    const CorrelatorTable t = extract_base_correlators(u);
    EXPECT_EQ(t.get(make_correlator(0, 0, {0, 0, 0})), Rational(1));
    EXPECT_EQ(t.get(make_correlator(1, 0, {2, 0, 0, 0, 0})), Rational(2, 3));
    EXPECT_EQ(t.size(), 2u);
}

TEST(StringCompletion, OutOfBoundsIsReported)
{
    CorrelatorTable base;
    // With descendant bound 1, <lambda_1 tau_0>_1 needs <lambda_1 tau_0 tau_1>_1, which lies outside.
    EXPECT_THROW(string_complete(base, CompletionBounds{1, 1, 4}), std::runtime_error);
}

TEST(HodgePipeline, DefaultBoundsValues)
{
    const HodgeRun& run = default_run();
    for (const auto& c : run.checks.checks)
        EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
    const CorrelatorTable& t = run.table;
    EXPECT_EQ(t.get(make_correlator(0, 0, {0, 0, 0})), Rational(1));
    EXPECT_EQ(t.get(make_correlator(1, 1, {0})), Rational(1, 24));
    EXPECT_EQ(t.get(make_correlator(1, 0, {1})), Rational(1, 24));
    EXPECT_EQ(t.get(make_correlator(2, 2, {2})), Rational(7, 5760));
    EXPECT_EQ(t.get(make_correlator(0, 0, {0, 0, 0, 0})), Rational(0));
    EXPECT_FALSE(t.contains(make_correlator(1, 1, {0, 0, 0})));
}

TEST(HodgePipeline, EpsZeroPartIsWittenKontsevich)
{
    WittenKontsevich wk;
    const HodgeRun& run = default_run();
    int compared = 0;
    for (const auto& [key, v] : run.table.entries())
        if (key.j == 0) {
            EXPECT_EQ(v, wk(key.g, key.k)) << key.g;
            ++compared;
        }
    EXPECT_GT(compared, 20);
    // The other direction: every nonzero WK number in the base range is present.
    for (int g = 0; g <= 3; ++g)
        for (int a = 0; a <= 6; ++a)
            for (int b = a; b <= 6; ++b) {
                const std::vector<int> k{0, 0, a, b};
                if (a + b <= 8)
                    EXPECT_EQ(run.table.get(make_correlator(g, 0, k)), wk(g, k));
            }
}

TEST(HodgePipeline, LambdaGOracleIndependentOfCompletion)
{
    const HodgeRun& run = default_run();
    for (const auto& [key, v] : run.table.entries())
        if (key.j == key.g && key.g >= 1)
            EXPECT_EQ(v, lambda_g_value(key.g, key.k));
}

TEST(HodgePipeline, ExportIsDeterministic)
{
    const HierarchyContext ctx(2);
    const CompletionBounds b{2, 4, 5};
    const std::string a = run_hodge_pipeline(ctx, b).table.export_text();
    EXPECT_EQ(a, run_hodge_pipeline(ctx, b).table.export_text());
    EXPECT_NE(a.find("0\t0\t0,0,0\t1\n"), std::string::npos);
    EXPECT_NE(a.find("1\t1\t0\t1/24\n"), std::string::npos);
    EXPECT_THROW(run_hodge_pipeline(ctx, CompletionBounds{3, 4, 5}), std::invalid_argument);
}
