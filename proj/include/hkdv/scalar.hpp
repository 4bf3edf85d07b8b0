#ifndef HKDV_SCALAR_HPP
#define HKDV_SCALAR_HPP

#include <climits>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hkdv/rational.hpp"

namespace hkdv {

// Element of Q(i).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long re) : re_(re) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

    std::string to_string() const;

private:
    Rational re_;
    Rational im_;
};

// Exponents of the formal parameters: hbar^hbar * eps^(eps2/2) * mu^mu.
struct ParamExp {
    int hbar = 0;
    int eps2 = 0;
    int mu = 0;

    ParamExp& operator+=(const ParamExp& o)
    {
        hbar += o.hbar;
        eps2 += o.eps2;
        mu += o.mu;
        return *this;
    }
    friend ParamExp operator+(ParamExp a, const ParamExp& b) { return a += b; }
    friend auto operator<=>(const ParamExp&, const ParamExp&) = default;
    friend bool operator==(const ParamExp&, const ParamExp&) = default;

    bool is_zero() const { return hbar == 0 && eps2 == 0 && mu == 0; }
};

inline constexpr int kUnbounded = INT_MAX / 4;

// Per-computation truncation: terms with hbar^a, a > hbar, or mu^c, c > mu, are dropped.
struct Truncation {
    int hbar = 3;
    int mu = kUnbounded;

    static Truncation hbar_order(int g) { return {g, kUnbounded}; }
    static Truncation mu_order(int m) { return {kUnbounded, m}; }
    static Truncation none() { return {kUnbounded, kUnbounded}; }

    bool keeps(const ParamExp& p) const { return p.hbar <= hbar && p.mu <= mu; }
};

// A polynomial in hbar, eps^(1/2) (Laurent) and mu with Gaussian-rational coefficients.
class ScalarPoly {
public:
    using Terms = std::map<ParamExp, GaussianRational>;

    ScalarPoly() = default;
    ScalarPoly(long c) : ScalarPoly(GaussianRational(c)) {}
    ScalarPoly(Rational c) : ScalarPoly(GaussianRational(std::move(c))) {}
    ScalarPoly(GaussianRational c, ParamExp p = {});

    static ScalarPoly hbar(int a = 1) { return ScalarPoly(GaussianRational(1), {a, 0, 0}); }
    static ScalarPoly eps_half(int b) { return ScalarPoly(GaussianRational(1), {0, b, 0}); }
    static ScalarPoly eps(int e = 1) { return eps_half(2 * e); }
    static ScalarPoly mu(int c = 1) { return ScalarPoly(GaussianRational(1), {0, 0, c}); }
    static ScalarPoly i() { return ScalarPoly(GaussianRational::i()); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    GaussianRational coefficient(const ParamExp& p) const;
    void add_term(const ParamExp& p, const GaussianRational& c);

    ScalarPoly truncated(const Truncation& t) const;

    ScalarPoly operator-() const;
    ScalarPoly& operator+=(const ScalarPoly& o);
    ScalarPoly& operator-=(const ScalarPoly& o);
    friend ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b) { return a += b; }
    friend ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b) { return a -= b; }
    // Exact product; use mul() to truncate eagerly.
    friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);
    friend bool operator==(const ScalarPoly&, const ScalarPoly&) = default;

    std::string to_string() const;
    static ScalarPoly parse(std::string_view text);

private:
    Terms terms_;
};

ScalarPoly mul(const ScalarPoly& a, const ScalarPoly& b, const Truncation& t);

namespace detail {

// Factor strings for the parameter part, in canonical order (hbar, eps, mu).
void append_param_factors(const ParamExp& p, std::vector<std::string>& out);

// One printed term: coefficient (real or imaginary part) followed by factors.
std::string format_term(const Rational& c, bool imaginary, const std::vector<std::string>& factors);

// Prints a Gaussian coefficient as one or two terms (real part first).
void append_terms(const GaussianRational& c, const std::vector<std::string>& factors, std::vector<std::string>& out);

std::string join_terms(const std::vector<std::string>& terms);

std::vector<std::string> split_terms(std::string_view text);
std::vector<std::string> split_factors(std::string_view term);

} // namespace detail

} // namespace hkdv

#endif
