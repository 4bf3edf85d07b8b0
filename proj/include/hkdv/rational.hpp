#ifndef HKDV_RATIONAL_HPP
#define HKDV_RATIONAL_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hkdv {

// Exact rational number, always kept in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : v_(value) {}
    Rational(long num, long den);
    explicit Rational(mpq_class value);
    explicit Rational(const mpz_class& value) : v_(value) {}

    // Accepts "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    const mpq_class& value() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational abs() const;
    Rational inverse() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // "p" for integers, "p/q" otherwise.
    std::string to_string() const;
    std::size_t hash() const;

private:
    mpq_class v_{0};
};

Rational factorial(int n);
Rational binomial(int n, int k);
Rational power(const Rational& base, int exponent);

} // namespace hkdv

#endif
