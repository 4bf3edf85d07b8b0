#include "hkdv/trunc_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace hkdv {

TruncSeries::TruncSeries(std::string variable, int order)
    : var_(std::move(variable)), order_(order), c_(static_cast<std::size_t>(std::max(order + 1, 0)))
{
    if (order < -1)
        throw std::invalid_argument("TruncSeries: order below -1");
}

TruncSeries::TruncSeries(std::string variable, int order, std::vector<Rational> coefficients)
    : TruncSeries(std::move(variable), order)
{
    for (std::size_t k = 0; k < coefficients.size() && k < c_.size(); ++k)
        c_[k] = std::move(coefficients[k]);
}

TruncSeries TruncSeries::monomial(std::string variable, int order, int power, Rational c)
{
    TruncSeries s(std::move(variable), order);
    if (power <= order)
        s.c_[static_cast<std::size_t>(power)] = std::move(c);
    return s;
}

void TruncSeries::set(int k, Rational value)
{
    if (k < 0 || k > order_)
        throw std::out_of_range("TruncSeries::set beyond order");
    c_[static_cast<std::size_t>(k)] = std::move(value);
}

TruncSeries TruncSeries::derivative() const
{
    TruncSeries d(var_, order_ - 1);
    for (int k = 1; k <= order_; ++k)
        d.c_[static_cast<std::size_t>(k - 1)] = c_[static_cast<std::size_t>(k)] * Rational(k);
    return d;
}

TruncSeries TruncSeries::derivative(int times) const
{
    TruncSeries d = *this;
    for (int i = 0; i < times; ++i)
        d = d.derivative();
    return d;
}

TruncSeries TruncSeries::shifted(int k) const
{
    TruncSeries s(var_, order_ + k);
    for (int j = 0; j <= order_; ++j)
        s.c_[static_cast<std::size_t>(j + k)] = c_[static_cast<std::size_t>(j)];
    return s;
}

TruncSeries TruncSeries::with_order(int order) const
{
    if (order > order_)
        throw std::invalid_argument("TruncSeries::with_order cannot extend the known range");
    TruncSeries s(var_, order);
    for (int j = 0; j <= order; ++j)
        s.c_[static_cast<std::size_t>(j)] = c_[static_cast<std::size_t>(j)];
    return s;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o)
{
    order_ = std::min(order_, o.order_);
    c_.resize(static_cast<std::size_t>(std::max(order_ + 1, 0)));
    for (int k = 0; k <= order_; ++k)
        c_[static_cast<std::size_t>(k)] += o.c_[static_cast<std::size_t>(k)];
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o)
{
    order_ = std::min(order_, o.order_);
    c_.resize(static_cast<std::size_t>(std::max(order_ + 1, 0)));
    for (int k = 0; k <= order_; ++k)
        c_[static_cast<std::size_t>(k)] -= o.c_[static_cast<std::size_t>(k)];
    return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& s)
{
    for (auto& c : c_)
        c *= s;
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b)
{
    const int order = std::min(a.order_, b.order_);
    TruncSeries r(a.var_, order);
    for (int i = 0; i <= order; ++i) {
        if (a.c_[static_cast<std::size_t>(i)].is_zero())
            continue;
        for (int j = 0; i + j <= order; ++j)
            r.c_[static_cast<std::size_t>(i + j)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
    }
    return r;
}

int first_difference(const TruncSeries& a, const TruncSeries& b)
{
    const int order = std::min(a.order_, b.order_);
    for (int k = 0; k <= order; ++k)
        if (a.c_[static_cast<std::size_t>(k)] != b.c_[static_cast<std::size_t>(k)])
            return k;
    return -1;
}

} // namespace hkdv
