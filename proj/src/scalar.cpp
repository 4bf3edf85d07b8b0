#include "hkdv/scalar.hpp"

#include <stdexcept>

namespace hkdv {

GaussianRational GaussianRational::inverse() const
{
    const Rational norm = re_ * re_ + im_ * im_;
    if (norm.is_zero())
        throw std::domain_error("GaussianRational: inverse of zero");
    return {re_ / norm, -im_ / norm};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o)
{
    if (im_.is_zero() && o.im_.is_zero()) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

std::string GaussianRational::to_string() const
{
    std::vector<std::string> out;
    detail::append_terms(*this, {}, out);
    return detail::join_terms(out);
}

ScalarPoly::ScalarPoly(GaussianRational c, ParamExp p)
{
    if (!c.is_zero())
        terms_.emplace(p, std::move(c));
}

GaussianRational ScalarPoly::coefficient(const ParamExp& p) const
{
    auto it = terms_.find(p);
    return it == terms_.end() ? GaussianRational() : it->second;
}

void ScalarPoly::add_term(const ParamExp& p, const GaussianRational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

ScalarPoly ScalarPoly::truncated(const Truncation& t) const
{
    ScalarPoly r;
    for (const auto& [p, c] : terms_)
        if (t.keeps(p))
            r.terms_.emplace(p, c);
    return r;
}

ScalarPoly ScalarPoly::operator-() const
{
    ScalarPoly r = *this;
    for (auto& [p, c] : r.terms_)
        c = -c;
    return r;
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& o)
{
    for (const auto& [p, c] : o.terms_)
        add_term(p, c);
    return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& o)
{
    for (const auto& [p, c] : o.terms_)
        add_term(p, -c);
    return *this;
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) { return mul(a, b, Truncation::none()); }

ScalarPoly mul(const ScalarPoly& a, const ScalarPoly& b, const Truncation& t)
{
    ScalarPoly r;
    for (const auto& [pa, ca] : a.terms())
        for (const auto& [pb, cb] : b.terms()) {
            const ParamExp p = pa + pb;
            if (t.keeps(p))
                r.add_term(p, ca * cb);
        }
    return r;
}

std::string ScalarPoly::to_string() const
{
    std::vector<std::string> out;
    for (const auto& [p, c] : terms_) {
        std::vector<std::string> factors;
        detail::append_param_factors(p, factors);
        detail::append_terms(c, factors, out);
    }
    return detail::join_terms(out);
}

namespace detail {

void append_param_factors(const ParamExp& p, std::vector<std::string>& out)
{
    if (p.hbar == 1)
        out.emplace_back("hbar");
    else if (p.hbar != 0)
        out.push_back("hbar^" + std::to_string(p.hbar));
    if (p.eps2 != 0) {
        if (p.eps2 == 2)
            out.emplace_back("eps");
        else if (p.eps2 % 2 == 0)
            out.push_back("eps^" + std::to_string(p.eps2 / 2));
        else
            out.push_back("eps^(" + std::to_string(p.eps2) + "/2)");
    }
    if (p.mu == 1)
        out.emplace_back("mu");
    else if (p.mu != 0)
        out.push_back("mu^" + std::to_string(p.mu));
}

std::string format_term(const Rational& c, bool imaginary, const std::vector<std::string>& factors)
{
    std::string head;
    if (factors.empty()) {
        head = c.to_string();
        if (imaginary)
            head += "*im";
        return head;
    }
    if (c == Rational(1))
        head = imaginary ? "im*" : "";
    else if (c == Rational(-1))
        head = imaginary ? "-im*" : "-";
    else
        head = c.to_string() + (imaginary ? "*im*" : "*");
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i)
            head += '*';
        head += factors[i];
    }
    return head;
}

void append_terms(const GaussianRational& c, const std::vector<std::string>& factors, std::vector<std::string>& out)
{
    if (!c.re().is_zero())
        out.push_back(format_term(c.re(), false, factors));
    if (!c.im().is_zero())
        out.push_back(format_term(c.im(), true, factors));
}

std::string join_terms(const std::vector<std::string>& terms)
{
    if (terms.empty())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i)
            s += " + ";
        s += terms[i];
    }
    return s;
}

std::vector<std::string> split_terms(std::string_view text)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(" + ", start);
        std::string_view piece = text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
        while (!piece.empty() && piece.front() == ' ')
            piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ')
            piece.remove_suffix(1);
        if (piece.empty())
            throw std::invalid_argument("empty term in '" + std::string(text) + "'");
        out.emplace_back(piece);
        if (pos == std::string_view::npos)
            break;
        start = pos + 3;
    }
    return out;
}

std::vector<std::string> split_factors(std::string_view term)
{
    // '*' inside "eps^(b/2)" never appears, so a plain split is enough.
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = term.find('*', start);
        out.emplace_back(term.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

} // namespace detail

} // namespace hkdv
