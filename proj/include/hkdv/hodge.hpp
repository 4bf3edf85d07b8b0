#ifndef HKDV_HODGE_HPP
#define HKDV_HODGE_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hkdv/check.hpp"
#include "hkdv/hierarchy.hpp"

namespace hkdv {

// Power series in hbar, eps and t_0 .. t_N, truncated at hbar^G and at weighted
// degree sum_{i>=1} i d_i <= D (t_0 carries weight zero, so d/dt_0 and products
// respect the truncation).
class TSeries {
public:
    static constexpr int kMaxTimes = 14;
    // key[0] = hbar, key[1] = eps, key[2 + i] = exponent of t_i.
    using Key = std::array<std::uint8_t, 2 + kMaxTimes>;
    using Terms = std::map<Key, Rational>;

    TSeries(int times, int degree_bound, int hbar_order);
    static TSeries t0(int times, int degree_bound, int hbar_order);

    int times() const { return n_; }
    int degree_bound() const { return d_; }
    int hbar_order() const { return g_; }
    const Terms& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    static int weight(const Key& k);
    bool keeps(const Key& k) const;
    void add_term(const Key& k, const Rational& c);
    Rational coefficient(const Key& k) const;

    TSeries derivative_t(int i) const;
    // Integral from 0 in t_i; terms pushed past the degree bound are dropped.
    TSeries integral_t(int i) const;
    // Sets t_i = 0.
    TSeries restrict_zero(int i) const;
    TSeries scaled(const Rational& s, int hbar = 0, int eps = 0) const;

    TSeries& operator+=(const TSeries& o);
    TSeries& operator-=(const TSeries& o);
    friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
    friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
    friend TSeries operator*(const TSeries& a, const TSeries& b);
    friend bool operator==(const TSeries&, const TSeries&) = default;

    std::string to_string() const;

private:
    int n_;
    int d_;
    int g_;
    Terms c_;
};

// Substitutes u_k -> d^k v / dt_0^k into a differential polynomial in hbar, eps.
TSeries evaluate(const DiffPoly& p, const TSeries& v);

// The solution of the hierarchy with u|_{t>=1 = 0} = t_0, flows 1..N, solved one time at a time.
TSeries solve_hierarchy(const HierarchyContext& ctx, int times, int degree_bound);

// Residual check d u/dt_n = P_n[u] for every n; returns the first failing n or 0.
int first_flow_violation(const HierarchyContext& ctx, const TSeries& u);

// u = u~ + sum_g (2^{2g-1}-1)/2^{2g-1} |B_2g|/(2g)! (hbar eps)^g d^{2g}u~/dt_0^{2g}.
TSeries apply_inverse_transformation(const TSeries& u_tilde);
// u~ = u + sum_g (-1)^g / (2^{2g} (2g+1)!) (hbar eps)^g d^{2g}u/dt_0^{2g}.
TSeries apply_forward_transformation(const TSeries& u);

struct CorrelatorKey {
    int g = 0;
    int j = 0;
    // Descendant indices, sorted ascending.
    std::vector<int> k;

    friend auto operator<=>(const CorrelatorKey&, const CorrelatorKey&) = default;
    friend bool operator==(const CorrelatorKey&, const CorrelatorKey&) = default;
};

CorrelatorKey make_correlator(int g, int j, std::vector<int> k);

// <lambda_j tau_k1 ... tau_kn>_g. Only nonzero entries are stored.
class CorrelatorTable {
public:
    void set(const CorrelatorKey& key, const Rational& value);
    Rational get(const CorrelatorKey& key) const;
    bool contains(const CorrelatorKey& key) const { return v_.count(key) > 0; }
    const std::map<CorrelatorKey, Rational>& entries() const { return v_; }
    std::size_t size() const { return v_.size(); }

    // "g<TAB>j<TAB>k1,k2,...<TAB>p/q" per line, lexicographic order.
    std::string export_text() const;

private:
    std::map<CorrelatorKey, Rational> v_;
};

bool satisfies_dimension(const CorrelatorKey& key);

// Monomial hbar^g eps^j t_0^{d0} prod t_i^{d_i} with coefficient c gives
// <lambda_j tau_0^{d0+2} prod tau_i^{d_i}>_g = c d0! prod d_i!.
CorrelatorTable extract_base_correlators(const TSeries& u);

struct CompletionBounds {
    int genus = 3;
    int descendants = 6;
    int degree = 8;
};

// Fills correlators with fewer than two tau_0 insertions by the string equation
// (<lambda_1 tau_0>_1 comes from <lambda_1 tau_0 tau_1>_1). Targets satisfy
// sum k + (2 - #tau_0) <= min(descendants, degree). Throws std::runtime_error if a
// needed entry lies outside the base table's bounds.
CorrelatorTable string_complete(const CorrelatorTable& base, const CompletionBounds& bounds);

// (2^{2g-1}-1)/2^{2g-1} |B_2g|/(2g)! (2g-3+n)!/prod d_i!; throws std::invalid_argument
// unless g >= 1 and sum d_i = 2g - 3 + n.
Rational lambda_g_value(int g, const std::vector<int>& d);

struct HodgeRun {
    CorrelatorTable base;
    CorrelatorTable table;
    VerificationReport checks;
};

// solve -> inverse transform -> extract -> complete, with the internal cross-checks.
HodgeRun run_hodge_pipeline(const HierarchyContext& ctx, const CompletionBounds& bounds);

} // namespace hkdv

#endif
