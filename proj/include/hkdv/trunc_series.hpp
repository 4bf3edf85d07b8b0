#ifndef HKDV_TRUNC_SERIES_HPP
#define HKDV_TRUNC_SERIES_HPP

#include <string>
#include <vector>

#include "hkdv/rational.hpp"

namespace hkdv {

// Univariate power series known exactly up to z^order. Operations never
// report coefficients beyond what the inputs determine.
class TruncSeries {
public:
    TruncSeries(std::string variable, int order);
    TruncSeries(std::string variable, int order, std::vector<Rational> coefficients);

    // z^power / 1 as a series of the given order.
    static TruncSeries monomial(std::string variable, int order, int power, Rational c = Rational(1));

    const std::string& variable() const { return var_; }
    int order() const { return order_; }
    const Rational& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
    void set(int k, Rational value);

    TruncSeries derivative() const;
    TruncSeries derivative(int times) const;
    // Multiplication by z^k shifts the known range up by k.
    TruncSeries shifted(int k) const;
    TruncSeries with_order(int order) const;

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    TruncSeries& operator*=(const Rational& s);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(TruncSeries a, const Rational& s) { return a *= s; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

    // First k <= min(orders) where the coefficients differ, or -1.
    friend int first_difference(const TruncSeries& a, const TruncSeries& b);

private:
    std::string var_;
    int order_;
    std::vector<Rational> c_;
};

} // namespace hkdv

#endif
