#include "hkdv/hodge.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "hkdv/bernoulli.hpp"

namespace hkdv {
namespace {

constexpr int kHbar = 0;
constexpr int kEps = 1;
constexpr int kT0 = 2;

Rational inverse_coefficient(int g)
{
    const Rational p = power(Rational(2), 2 * g - 1);
    return (p - Rational(1)) / p * bernoulli_weight(g);
}

Rational forward_coefficient(int g)
{
    return Rational(g % 2 == 0 ? 1 : -1) / (power(Rational(2), 2 * g) * factorial(2 * g + 1));
}

TSeries below_weight(const TSeries& s, int w)
{
    TSeries r(s.times(), s.degree_bound(), s.hbar_order());
    for (const auto& [k, c] : s.terms())
        if (TSeries::weight(k) <= w)
            r.add_term(k, c);
    return r;
}

} // namespace

TSeries::TSeries(int times, int degree_bound, int hbar_order) : n_(times), d_(degree_bound), g_(hbar_order)
{
    if (times < 0 || times >= kMaxTimes)
        throw std::invalid_argument("TSeries: number of times out of range");
    if (degree_bound < 0 || hbar_order < 0)
        throw std::invalid_argument("TSeries: negative bound");
}

TSeries TSeries::t0(int times, int degree_bound, int hbar_order)
{
    TSeries s(times, degree_bound, hbar_order);
    Key k{};
    k[kT0] = 1;
    s.add_term(k, Rational(1));
    return s;
}

int TSeries::weight(const Key& k)
{
    int w = 0;
    for (int i = 1; i < kMaxTimes; ++i)
        w += i * k[static_cast<std::size_t>(kT0 + i)];
    return w;
}

bool TSeries::keeps(const Key& k) const { return k[kHbar] <= g_ && weight(k) <= d_; }

void TSeries::add_term(const Key& k, const Rational& c)
{
    if (c.is_zero() || !keeps(k))
        return;
    auto [it, inserted] = c_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            c_.erase(it);
    }
}

Rational TSeries::coefficient(const Key& k) const
{
    auto it = c_.find(k);
    return it == c_.end() ? Rational(0) : it->second;
}

TSeries TSeries::derivative_t(int i) const
{
    TSeries r(n_, d_, g_);
    const auto slot = static_cast<std::size_t>(kT0 + i);
    for (const auto& [k, c] : c_) {
        if (k[slot] == 0)
            continue;
        Key nk = k;
        --nk[slot];
        r.c_.emplace(nk, c * Rational(k[slot]));
    }
    return r;
}

TSeries TSeries::integral_t(int i) const
{
    TSeries r(n_, d_, g_);
    const auto slot = static_cast<std::size_t>(kT0 + i);
    for (const auto& [k, c] : c_) {
        Key nk = k;
        ++nk[slot];
        if (r.keeps(nk))
            r.c_.emplace(nk, c / Rational(nk[slot]));
    }
    return r;
}

TSeries TSeries::restrict_zero(int i) const
{
    TSeries r(n_, d_, g_);
    const auto slot = static_cast<std::size_t>(kT0 + i);
    for (const auto& [k, c] : c_)
        if (k[slot] == 0)
            r.c_.emplace(k, c);
    return r;
}

TSeries TSeries::scaled(const Rational& s, int hbar, int eps) const
{
    TSeries r(n_, d_, g_);
    for (const auto& [k, c] : c_) {
        Key nk = k;
        nk[kHbar] = static_cast<std::uint8_t>(nk[kHbar] + hbar);
        nk[kEps] = static_cast<std::uint8_t>(nk[kEps] + eps);
        r.add_term(nk, c * s);
    }
    return r;
}

TSeries& TSeries::operator+=(const TSeries& o)
{
    for (const auto& [k, c] : o.c_)
        add_term(k, c);
    return *this;
}

TSeries& TSeries::operator-=(const TSeries& o)
{
    for (const auto& [k, c] : o.c_)
        add_term(k, -c);
    return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b)
{
    TSeries r(a.n_, std::min(a.d_, b.d_), std::min(a.g_, b.g_));
    struct Entry {
        const TSeries::Key* key;
        const Rational* c;
        int w;
    };
    auto flatten = [](const TSeries& s) {
        std::vector<Entry> v;
        v.reserve(s.c_.size());
        for (const auto& [k, c] : s.c_)
            v.push_back({&k, &c, TSeries::weight(k)});
        std::sort(v.begin(), v.end(), [](const Entry& x, const Entry& y) { return x.w < y.w; });
        return v;
    };
    const auto ea = flatten(a), eb = flatten(b);
    for (const Entry& x : ea)
        for (const Entry& y : eb) {
            if (x.w + y.w > r.d_)
                break;
            if ((*x.key)[kHbar] + (*y.key)[kHbar] > r.g_)
                continue;
            TSeries::Key k;
            for (std::size_t i = 0; i < k.size(); ++i)
                k[i] = static_cast<std::uint8_t>((*x.key)[i] + (*y.key)[i]);
            r.add_term(k, *x.c * *y.c);
        }
    return r;
}

std::string TSeries::to_string() const
{
    std::vector<std::string> out;
    for (const auto& [k, c] : c_) {
        std::vector<std::string> factors;
        detail::append_param_factors(ParamExp{k[kHbar], 2 * k[kEps], 0}, factors);
        for (int i = 0; i <= n_; ++i) {
            const int e = k[static_cast<std::size_t>(kT0 + i)];
            if (e == 0)
                continue;
            std::string f = "t" + std::to_string(i);
            if (e != 1)
                f += "^" + std::to_string(e);
            factors.push_back(std::move(f));
        }
        out.push_back(detail::format_term(c, false, factors));
    }
    return detail::join_terms(out);
}

TSeries evaluate(const DiffPoly& p, const TSeries& v)
{
    std::vector<TSeries> derivs{v};
    for (int k = 1; k <= p.max_index(); ++k)
        derivs.push_back(derivs.back().derivative_t(0));
    std::map<std::pair<int, int>, TSeries> powers;
    auto power_of = [&](int k, int e) -> const TSeries& {
        auto key = std::make_pair(k, e);
        auto it = powers.find(key);
        if (it != powers.end())
            return it->second;
        const TSeries& d = derivs[static_cast<std::size_t>(k)];
        TSeries s = d;
        for (int i = 1; i < e; ++i)
            s = s * d;
        return powers.emplace(key, std::move(s)).first->second;
    };

    TSeries out(v.times(), v.degree_bound(), v.hbar_order());
    for (const Monomial& m : p.monomials()) {
        const ScalarPoly coeff = p.scalar_coefficient(m);
        TSeries prod(v.times(), v.degree_bound(), v.hbar_order());
        bool first = true;
        const auto& e = m.exponents();
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0)
                continue;
            const TSeries& f = power_of(static_cast<int>(k), e[k]);
            prod = first ? f : prod * f;
            first = false;
        }
        if (first) {
            TSeries::Key one{};
            prod.add_term(one, Rational(1));
        }
        for (const auto& [pe, c] : coeff.terms()) {
            if (!c.is_real() || pe.mu != 0 || pe.eps2 < 0 || pe.eps2 % 2 != 0)
                throw std::domain_error("evaluate: coefficient outside Q[hbar, eps]");
            out += prod.scaled(c.re(), pe.hbar, pe.eps2 / 2);
        }
    }
    return out;
}

TSeries solve_hierarchy(const HierarchyContext& ctx, int times, int degree_bound)
{
    TSeries u = TSeries::t0(times, degree_bound, ctx.hbar_order());
    for (int n = 1; n <= times; ++n) {
        const DiffPoly p = ctx.flow(n);
        const TSeries base = u;
        // Each pass fixes all terms of weight below (pass + 1) * n.
        for (int pass = 0; pass <= degree_bound / n; ++pass) {
            TSeries next = base + evaluate(p, u).integral_t(n);
            if (next == u)
                break;
            u = std::move(next);
        }
    }
    return u;
}

int first_flow_violation(const HierarchyContext& ctx, const TSeries& u)
{
    for (int n = 1; n <= u.times(); ++n) {
        const int w = u.degree_bound() - n;
        if (below_weight(u.derivative_t(n), w) != below_weight(evaluate(ctx.flow(n), u), w))
            return n;
    }
    return 0;
}

TSeries apply_inverse_transformation(const TSeries& u_tilde)
{
    TSeries out = u_tilde;
    TSeries d = u_tilde;
    for (int g = 1; g <= u_tilde.hbar_order(); ++g) {
        d = d.derivative_t(0).derivative_t(0);
        out += d.scaled(inverse_coefficient(g), g, g);
    }
    return out;
}

TSeries apply_forward_transformation(const TSeries& u)
{
    TSeries out = u;
    TSeries d = u;
    for (int g = 1; g <= u.hbar_order(); ++g) {
        d = d.derivative_t(0).derivative_t(0);
        out += d.scaled(forward_coefficient(g), g, g);
    }
    return out;
}

CorrelatorKey make_correlator(int g, int j, std::vector<int> k)
{
    std::sort(k.begin(), k.end());
    return {g, j, std::move(k)};
}

void CorrelatorTable::set(const CorrelatorKey& key, const Rational& value)
{
    if (value.is_zero())
        v_.erase(key);
    else
        v_.insert_or_assign(key, value);
}

Rational CorrelatorTable::get(const CorrelatorKey& key) const
{
    auto it = v_.find(key);
    return it == v_.end() ? Rational(0) : it->second;
}

std::string CorrelatorTable::export_text() const
{
    std::string s;
    for (const auto& [key, value] : v_) {
        s += std::to_string(key.g) + '\t' + std::to_string(key.j) + '\t';
        for (std::size_t i = 0; i < key.k.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(key.k[i]);
        }
        s += '\t' + value.to_string() + '\n';
    }
    return s;
}

bool satisfies_dimension(const CorrelatorKey& key)
{
    const int n = static_cast<int>(key.k.size());
    int sum = 0;
    for (int k : key.k)
        sum += k;
    return 2 * key.g - 2 + n > 0 && key.j >= 0 && key.j <= key.g && sum + key.j == 3 * key.g - 3 + n;
}

CorrelatorTable extract_base_correlators(const TSeries& u)
{
    CorrelatorTable t;
    for (const auto& [key, c] : u.terms()) {
        std::vector<int> ks(static_cast<std::size_t>(key[kT0]) + 2, 0);
        Rational value = c * factorial(key[kT0]);
        for (int i = 1; i <= u.times(); ++i) {
            const int d = key[static_cast<std::size_t>(kT0 + i)];
            ks.insert(ks.end(), static_cast<std::size_t>(d), i);
            value *= factorial(d);
        }
        t.set(make_correlator(key[kHbar], key[kEps], std::move(ks)), value);
    }
    return t;
}

namespace {

struct Domain {
    CompletionBounds b;

    int limit() const { return std::min(b.descendants, b.degree); }

    // Entries with at least two tau_0 come from the series.
    bool in_base(const CorrelatorKey& key) const
    {
        int sum = 0, top = 0;
        for (int k : key.k) {
            sum += k;
            top = std::max(top, k);
        }
        return key.g <= b.genus && sum <= b.degree && top <= b.descendants;
    }

    // Entries with fewer than two tau_0 filled by the completion.
    bool in_targets(const CorrelatorKey& key) const
    {
        int sum = 0, zeros = 0;
        for (int k : key.k) {
            sum += k;
            zeros += k == 0;
        }
        return key.g <= b.genus && sum + 2 - zeros <= limit();
    }
};

int tau0_count(const std::vector<int>& k) { return static_cast<int>(std::count(k.begin(), k.end(), 0)); }

// Multisets of indices >= 1 with sum <= max_sum and entries <= max_index, sorted ascending.
void positive_multisets(int max_sum, int max_index, int min_part, std::vector<int>& cur,
                        const std::function<void(const std::vector<int>&)>& visit)
{
    visit(cur);
    for (int k = min_part; k <= std::min(max_index, max_sum); ++k) {
        cur.push_back(k);
        positive_multisets(max_sum - k, max_index, k, cur, visit);
        cur.pop_back();
    }
}

// Stable dimension-consistent keys of genus g, class lambda_j, with the number of
// tau_0 insertions fixed by the dimension constraint.
std::vector<CorrelatorKey> keys_with(int g, int j, const CompletionBounds& b)
{
    std::vector<CorrelatorKey> out;
    std::vector<int> cur;
    positive_multisets(b.degree, b.descendants, 1, cur, [&](const std::vector<int>& ks) {
        int s = 0;
        for (int k : ks)
            s += k - 1;
        const int m = s - 3 * g + 3 + j;
        if (m < 0)
            return;
        std::vector<int> full(static_cast<std::size_t>(m), 0);
        full.insert(full.end(), ks.begin(), ks.end());
        const CorrelatorKey key = make_correlator(g, j, full);
        if (!satisfies_dimension(key))
            return;
        int sum = 0;
        for (int k : ks)
            sum += k;
        if (m >= 2 || sum + 2 - m <= std::min(b.descendants, b.degree))
            out.push_back(key);
    });
    return out;
}

} // namespace

CorrelatorTable string_complete(const CorrelatorTable& base, const CompletionBounds& bounds)
{
    const Domain dom{bounds};
    CorrelatorTable table = base;
    auto lookup = [&](const CorrelatorKey& key, bool from_base) {
        if (from_base ? !dom.in_base(key) : !dom.in_targets(key))
            throw std::runtime_error("string_complete: needed correlator outside the series bounds");
        return table.get(key);
    };
    for (int g = 0; g <= bounds.genus; ++g)
        for (int j = 0; j <= g; ++j)
            for (int m : {1, 0}) {
                std::vector<CorrelatorKey> targets;
                for (auto& key : keys_with(g, j, bounds))
                    if (tau0_count(key.k) == m)
                        targets.push_back(std::move(key));
                // Larger top index first: the string relation for a target refers to
                // targets with a larger top index and the same number of tau_0.
                std::stable_sort(targets.begin(), targets.end(), [](const CorrelatorKey& x, const CorrelatorKey& y) {
                    const int tx = x.k.empty() ? -1 : x.k.back();
                    const int ty = y.k.empty() ? -1 : y.k.back();
                    return tx > ty;
                });
                for (const CorrelatorKey& t : targets) {
                    std::vector<int> rest(t.k.begin() + m, t.k.end());
                    if (rest.empty()) {
                        // Only <lambda_1 tau_0>_1; the string equation on <lambda_1 tau_0 tau_1>_1.
                        table.set(t, lookup(make_correlator(g, j, {0, 1}), false));
                        continue;
                    }
                    const int top = rest.back();
                    rest.pop_back();
                    std::vector<int> s_idx(static_cast<std::size_t>(m) + 1, 0);
                    s_idx.push_back(top + 1);
                    s_idx.insert(s_idx.end(), rest.begin(), rest.end());
                    Rational value = lookup(make_correlator(g, j, s_idx), m + 1 >= 2);
                    for (std::size_t i = 0; i < rest.size(); ++i) {
                        std::vector<int> ti(static_cast<std::size_t>(m), 0);
                        ti.push_back(top + 1);
                        for (std::size_t r = 0; r < rest.size(); ++r)
                            ti.push_back(r == i ? rest[r] - 1 : rest[r]);
                        const CorrelatorKey tk = make_correlator(g, j, ti);
                        value -= lookup(tk, tau0_count(tk.k) >= 2);
                    }
                    table.set(t, value);
                }
            }
    return table;
}

Rational lambda_g_value(int g, const std::vector<int>& d)
{
    const int n = static_cast<int>(d.size());
    int sum = 0;
    Rational denom(1);
    for (int x : d) {
        if (x < 0)
            throw std::invalid_argument("lambda_g_value: negative descendant index");
        sum += x;
        denom *= factorial(x);
    }
    if (g < 1 || sum != 2 * g - 3 + n)
        throw std::invalid_argument("lambda_g_value: dimension mismatch");
    return inverse_coefficient(g) * factorial(2 * g - 3 + n) / denom;
}

HodgeRun run_hodge_pipeline(const HierarchyContext& ctx, const CompletionBounds& bounds)
{
    if (bounds.genus > ctx.hbar_order())
        throw std::invalid_argument("genus bound exceeds the hbar order");
    if (bounds.descendants < 1 || bounds.degree < 1 || bounds.genus < 0)
        throw std::invalid_argument("bounds must be positive");
    HodgeRun run;
    const TSeries u_tilde = solve_hierarchy(ctx, bounds.descendants, bounds.degree);
    const int bad_flow = first_flow_violation(ctx, u_tilde);
    run.checks.add("flows satisfied by the series solution", bad_flow == 0,
                   bad_flow ? "flow t" + std::to_string(bad_flow) : "");

    const TSeries u = apply_inverse_transformation(u_tilde);
    const TSeries round = apply_forward_transformation(u);
    run.checks.add("forward transformation inverts the inverse one", round == u_tilde);
    TSeries slice = u;
    for (int i = 1; i <= bounds.descendants; ++i)
        slice = slice.restrict_zero(i);
    run.checks.add("u at t>=1 = 0 equals t0", slice == TSeries::t0(bounds.descendants, bounds.degree, ctx.hbar_order()),
                   slice.to_string());

    run.base = extract_base_correlators(u);
    run.table = string_complete(run.base, bounds);

    std::string bad;
    for (const auto& [key, v] : run.table.entries())
        if (!satisfies_dimension(key) && bad.empty())
            bad = "g=" + std::to_string(key.g) + " j=" + std::to_string(key.j);
    run.checks.add("dimension constraint on every entry", bad.empty(), bad);

    bad.clear();
    for (const auto& [key, v] : run.base.entries()) {
        const int m = tau0_count(key.k);
        if (m < 3 || (key.g == 0 && key.k.size() == 3))
            continue;
        std::vector<int> rest(key.k.begin() + 1, key.k.end());
        Rational sum(0);
        for (std::size_t i = 0; i < rest.size(); ++i) {
            if (rest[i] == 0)
                continue;
            std::vector<int> lowered = rest;
            --lowered[i];
            sum += run.base.get(make_correlator(key.g, key.j, lowered));
        }
        if (sum != v && bad.empty())
            bad = "g=" + std::to_string(key.g) + " j=" + std::to_string(key.j);
    }
    run.checks.add("string equation on the extracted entries", bad.empty(), bad);

    bad.clear();
    int compared = 0;
    for (int g = 1; g <= bounds.genus; ++g)
        for (const CorrelatorKey& key : keys_with(g, g, bounds)) {
            ++compared;
            if (run.table.get(key) != lambda_g_value(g, key.k) && bad.empty())
                bad = "g=" + std::to_string(g) + " got " + run.table.get(key).to_string();
        }
    run.checks.add("lambda_g formula on all j = g entries (" + std::to_string(compared) + ")", bad.empty(), bad);
    return run;
}

} // namespace hkdv
