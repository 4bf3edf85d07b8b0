#ifndef HKDV_DIFFPOLY_HPP
#define HKDV_DIFFPOLY_HPP

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hkdv/scalar.hpp"

namespace hkdv {

// prod_k u_k^{alpha_k}; u_0 is u itself. Stored as a dense exponent vector with
// trailing zeros trimmed.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);
    static Monomial variable(int k, int e = 1);

    const std::vector<int>& exponents() const { return e_; }
    int exponent(int k) const { return k < static_cast<int>(e_.size()) ? e_[static_cast<std::size_t>(k)] : 0; }
    // -1 for the constant monomial.
    int max_index() const { return static_cast<int>(e_.size()) - 1; }
    int degree() const;
    // sum_k k * alpha_k, the differential degree.
    int weight() const;
    bool is_one() const { return e_.empty(); }

    Monomial times(int k, int e = 1) const;
    Monomial divided(int k, int e = 1) const;
    friend Monomial operator*(const Monomial& a, const Monomial& b);

    // Graded: total degree first, then exponents compared from the highest index down.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

    // "u0^2*u3"; empty string for the constant monomial.
    std::string to_string() const;

private:
    void trim();
    std::vector<int> e_;
};

struct TermKey {
    ParamExp params;
    Monomial mono;

    friend auto operator<=>(const TermKey&, const TermKey&) = default;
    friend bool operator==(const TermKey&, const TermKey&) = default;
};

// Element of the differential polynomial ring over the parameter ring: a canonical
// map from (parameter exponents, monomial) to a nonzero Gaussian-rational coefficient.
class DiffPoly {
public:
    using Terms = std::map<TermKey, GaussianRational>;

    DiffPoly() = default;
    DiffPoly(long c) : DiffPoly(GaussianRational(c)) {}
    DiffPoly(Rational c) : DiffPoly(GaussianRational(std::move(c))) {}
    DiffPoly(GaussianRational c);
    DiffPoly(const ScalarPoly& c);

    static DiffPoly u(int k = 0, int e = 1);
    static DiffPoly term(const GaussianRational& c, Monomial m, ParamExp p = {});

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const TermKey& key, const GaussianRational& c);
    GaussianRational coefficient(const Monomial& m, const ParamExp& p = {}) const;
    // Collects the parameter dependence of one monomial.
    ScalarPoly scalar_coefficient(const Monomial& m) const;

    // Terms carrying exactly the parameter exponents p, returned with parameters stripped.
    DiffPoly param_part(const ParamExp& p) const;
    std::set<ParamExp> param_exponents() const;
    std::set<Monomial> monomials() const;

    DiffPoly truncated(const Truncation& t) const;
    // hbar^a -> mu^(2a).
    DiffPoly hbar_to_mu_squared() const;
    // Specialization eps = 0 (requires no negative eps powers).
    DiffPoly at_eps_zero() const;

    bool has_constant_term() const;
    int max_index() const;
    bool is_real() const;

    DiffPoly operator-() const;
    DiffPoly& operator+=(const DiffPoly& o);
    DiffPoly& operator-=(const DiffPoly& o);
    DiffPoly& operator*=(const GaussianRational& c);
    friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
    friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
    friend DiffPoly operator*(DiffPoly a, const GaussianRational& c) { return a *= c; }
    friend DiffPoly operator*(const GaussianRational& c, DiffPoly a) { return a *= c; }
    // Exact product without truncation.
    friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
    friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

    // Canonical text: terms joined by " + ", e.g. "1/6*u0^3 + 1/24*hbar*u0*u2".
    std::string to_string() const;
    static DiffPoly parse(std::string_view text);

private:
    Terms terms_;
};

DiffPoly mul(const DiffPoly& a, const DiffPoly& b, const Truncation& t);
DiffPoly pow(const DiffPoly& f, int e, const Truncation& t);
DiffPoly scale(const DiffPoly& f, const ScalarPoly& s, const Truncation& t);

// Total x-derivative: sum_s u_{s+1} d/du_s.
DiffPoly partial_x(const DiffPoly& f);
DiffPoly partial_x(const DiffPoly& f, int times);
// Formal partial derivative with respect to u_s.
DiffPoly partial_u(const DiffPoly& f, int s);

// Replaces every u_k by d_x^k(expr); truncates eagerly.
DiffPoly substitute(const DiffPoly& f, const DiffPoly& expr, const Truncation& t);

enum class DegreeConvention {
    // deg_dif u_k = k, hbar = -2, eps = mu = 0.
    standard,
    // As standard, with mu = -1 (the mu-extended spaces used for ILW).
    mu_extended,
};

struct TermGrading {
    TermKey key;
    int deg_dif = 0;
    int deg = 0;
};

int term_deg_dif(const TermKey& key, DegreeConvention conv = DegreeConvention::standard);
std::vector<TermGrading> gradings(const DiffPoly& f, DegreeConvention conv = DegreeConvention::standard);
// True when every term has total differential degree k (vacuously true for 0).
bool is_homogeneous(const DiffPoly& f, int k, DegreeConvention conv = DegreeConvention::standard);

} // namespace hkdv

#endif
