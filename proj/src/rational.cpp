#include "hkdv/rational.hpp"

#include <functional>
#include <stdexcept>

namespace hkdv {

Rational::Rational(long num, long den) : v_(num, den)
{
    if (den == 0)
        throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text)
{
    std::string s(text);
    if (s.empty())
        throw std::invalid_argument("Rational::parse: empty string");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational::parse: malformed number '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("Rational::parse: zero denominator in '" + s + "'");
    return Rational(q);
}

Rational Rational::abs() const
{
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

Rational Rational::inverse() const
{
    if (is_zero())
        throw std::domain_error("Rational: inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
}

Rational Rational::operator-() const
{
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator+=(const Rational& o)
{
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    const int c = cmp(a.v_, b.v_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const
{
    if (is_integer())
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::size_t Rational::hash() const
{
    const std::size_t h1 = mpz_get_ui(v_.get_num_mpz_t()) ^ static_cast<std::size_t>(sgn(v_) + 1);
    const std::size_t h2 = mpz_get_ui(v_.get_den_mpz_t());
    return h1 * 1000003u ^ h2;
}

Rational factorial(int n)
{
    if (n < 0)
        throw std::domain_error("factorial of a negative number");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

Rational binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

Rational power(const Rational& base, int exponent)
{
    if (exponent < 0)
        return power(base.inverse(), -exponent);
    Rational r(1);
    for (int i = 0; i < exponent; ++i)
        r *= base;
    return r;
}

} // namespace hkdv
