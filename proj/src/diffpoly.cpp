#include "hkdv/diffpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace hkdv {

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents))
{
    for (int x : e_)
        if (x < 0)
            throw std::invalid_argument("Monomial: negative exponent");
    trim();
}

Monomial Monomial::variable(int k, int e)
{
    if (k < 0)
        throw std::invalid_argument("Monomial: negative derivative index");
    std::vector<int> v(static_cast<std::size_t>(k) + 1, 0);
    v.back() = e;
    return Monomial(std::move(v));
}

void Monomial::trim()
{
    while (!e_.empty() && e_.back() == 0)
        e_.pop_back();
}

int Monomial::degree() const
{
    int d = 0;
    for (int x : e_)
        d += x;
    return d;
}

int Monomial::weight() const
{
    int w = 0;
    for (std::size_t k = 0; k < e_.size(); ++k)
        w += static_cast<int>(k) * e_[k];
    return w;
}

Monomial Monomial::times(int k, int e) const
{
    Monomial r = *this;
    if (static_cast<int>(r.e_.size()) <= k)
        r.e_.resize(static_cast<std::size_t>(k) + 1, 0);
    r.e_[static_cast<std::size_t>(k)] += e;
    if (r.e_[static_cast<std::size_t>(k)] < 0)
        throw std::domain_error("Monomial: exponent became negative");
    r.trim();
    return r;
}

Monomial Monomial::divided(int k, int e) const { return times(k, -e); }

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial r = a.e_.size() >= b.e_.size() ? a : b;
    const Monomial& s = a.e_.size() >= b.e_.size() ? b : a;
    for (std::size_t k = 0; k < s.e_.size(); ++k)
        r.e_[k] += s.e_[k];
    return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
{
    if (auto c = a.degree() <=> b.degree(); c != 0)
        return c;
    const std::size_t n = std::max(a.e_.size(), b.e_.size());
    for (std::size_t k = n; k-- > 0;) {
        const int x = a.exponent(static_cast<int>(k));
        const int y = b.exponent(static_cast<int>(k));
        if (x != y)
            return x <=> y;
    }
    return std::strong_ordering::equal;
}

std::string Monomial::to_string() const
{
    std::string s;
    for (std::size_t k = 0; k < e_.size(); ++k) {
        if (e_[k] == 0)
            continue;
        if (!s.empty())
            s += '*';
        s += 'u' + std::to_string(k);
        if (e_[k] != 1)
            s += '^' + std::to_string(e_[k]);
    }
    return s;
}

DiffPoly::DiffPoly(GaussianRational c)
{
    if (!c.is_zero())
        terms_.emplace(TermKey{}, std::move(c));
}

DiffPoly::DiffPoly(const ScalarPoly& c)
{
    for (const auto& [p, x] : c.terms())
        terms_.emplace(TermKey{p, Monomial()}, x);
}

DiffPoly DiffPoly::u(int k, int e) { return term(GaussianRational(1), Monomial::variable(k, e)); }

DiffPoly DiffPoly::term(const GaussianRational& c, Monomial m, ParamExp p)
{
    DiffPoly r;
    r.add_term(TermKey{p, std::move(m)}, c);
    return r;
}

void DiffPoly::add_term(const TermKey& key, const GaussianRational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

GaussianRational DiffPoly::coefficient(const Monomial& m, const ParamExp& p) const
{
    auto it = terms_.find(TermKey{p, m});
    return it == terms_.end() ? GaussianRational() : it->second;
}

ScalarPoly DiffPoly::scalar_coefficient(const Monomial& m) const
{
    ScalarPoly r;
    for (const auto& [k, c] : terms_)
        if (k.mono == m)
            r.add_term(k.params, c);
    return r;
}

DiffPoly DiffPoly::param_part(const ParamExp& p) const
{
    DiffPoly r;
    auto it = terms_.lower_bound(TermKey{p, Monomial()});
    for (; it != terms_.end() && it->first.params == p; ++it)
        r.terms_.emplace(TermKey{ParamExp{}, it->first.mono}, it->second);
    return r;
}

std::set<ParamExp> DiffPoly::param_exponents() const
{
    std::set<ParamExp> r;
    for (const auto& [k, c] : terms_)
        r.insert(k.params);
    return r;
}

std::set<Monomial> DiffPoly::monomials() const
{
    std::set<Monomial> r;
    for (const auto& [k, c] : terms_)
        r.insert(k.mono);
    return r;
}

DiffPoly DiffPoly::truncated(const Truncation& t) const
{
    DiffPoly r;
    for (const auto& [k, c] : terms_)
        if (t.keeps(k.params))
            r.terms_.emplace(k, c);
    return r;
}

DiffPoly DiffPoly::hbar_to_mu_squared() const
{
    DiffPoly r;
    for (const auto& [k, c] : terms_) {
        TermKey key = k;
        key.params.mu += 2 * key.params.hbar;
        key.params.hbar = 0;
        r.add_term(key, c);
    }
    return r;
}

DiffPoly DiffPoly::at_eps_zero() const
{
    DiffPoly r;
    for (const auto& [k, c] : terms_) {
        if (k.params.eps2 < 0)
            throw std::domain_error("at_eps_zero: negative power of eps");
        if (k.params.eps2 == 0)
            r.terms_.emplace(k, c);
    }
    return r;
}

bool DiffPoly::has_constant_term() const
{
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.mono.is_one(); });
}

int DiffPoly::max_index() const
{
    int m = -1;
    for (const auto& [k, c] : terms_)
        m = std::max(m, k.mono.max_index());
    return m;
}

bool DiffPoly::is_real() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

DiffPoly DiffPoly::operator-() const
{
    DiffPoly r = *this;
    for (auto& [k, c] : r.terms_)
        c = -c;
    return r;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o)
{
    for (const auto& [k, c] : o.terms_)
        add_term(k, c);
    return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o)
{
    for (const auto& [k, c] : o.terms_)
        add_term(k, -c);
    return *this;
}

DiffPoly& DiffPoly::operator*=(const GaussianRational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, x] : terms_)
        x *= c;
    return *this;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) { return mul(a, b, Truncation::none()); }

std::string DiffPoly::to_string() const
{
    std::vector<std::string> out;
    for (const auto& [k, c] : terms_) {
        std::vector<std::string> factors;
        detail::append_param_factors(k.params, factors);
        for (std::size_t i = 0; i < k.mono.exponents().size(); ++i) {
            const int e = k.mono.exponents()[i];
            if (e == 0)
                continue;
            std::string f = 'u' + std::to_string(i);
            if (e != 1)
                f += '^' + std::to_string(e);
            factors.push_back(std::move(f));
        }
        detail::append_terms(c, factors, out);
    }
    return detail::join_terms(out);
}

DiffPoly mul(const DiffPoly& a, const DiffPoly& b, const Truncation& t)
{
    DiffPoly r;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            const ParamExp p = ka.params + kb.params;
            if (t.keeps(p))
                r.add_term(TermKey{p, ka.mono * kb.mono}, ca * cb);
        }
    return r;
}

DiffPoly pow(const DiffPoly& f, int e, const Truncation& t)
{
    if (e < 0)
        throw std::invalid_argument("pow: negative exponent");
    DiffPoly result(1);
    DiffPoly base = f;
    while (e > 0) {
        if (e & 1)
            result = mul(result, base, t);
        e >>= 1;
        if (e > 0)
            base = mul(base, base, t);
    }
    return result;
}

DiffPoly scale(const DiffPoly& f, const ScalarPoly& s, const Truncation& t) { return mul(f, DiffPoly(s), t); }

DiffPoly partial_x(const DiffPoly& f)
{
    DiffPoly r;
    for (const auto& [k, c] : f.terms()) {
        const auto& e = k.mono.exponents();
        for (std::size_t s = 0; s < e.size(); ++s) {
            if (e[s] == 0)
                continue;
            const int si = static_cast<int>(s);
            r.add_term(TermKey{k.params, k.mono.divided(si).times(si + 1)}, c * GaussianRational(e[s]));
        }
    }
    return r;
}

DiffPoly partial_x(const DiffPoly& f, int times)
{
    DiffPoly r = f;
    for (int i = 0; i < times && !r.is_zero(); ++i)
        r = partial_x(r);
    return r;
}

DiffPoly partial_u(const DiffPoly& f, int s)
{
    DiffPoly r;
    for (const auto& [k, c] : f.terms()) {
        const int e = k.mono.exponent(s);
        if (e > 0)
            r.add_term(TermKey{k.params, k.mono.divided(s)}, c * GaussianRational(e));
    }
    return r;
}

DiffPoly substitute(const DiffPoly& f, const DiffPoly& expr, const Truncation& t)
{
    const int top = f.max_index();
    std::vector<DiffPoly> derivs;
    for (int k = 0; k <= top; ++k)
        derivs.push_back(k == 0 ? expr.truncated(t) : partial_x(derivs.back()));
    // Powers are cached per index since monomials share them.
    std::map<std::pair<int, int>, DiffPoly> powers;
    auto power_of = [&](int k, int e) -> const DiffPoly& {
        auto key = std::make_pair(k, e);
        auto it = powers.find(key);
        if (it == powers.end())
            it = powers.emplace(key, pow(derivs[static_cast<std::size_t>(k)], e, t)).first;
        return it->second;
    };
    DiffPoly r;
    for (const auto& [k, c] : f.terms()) {
        if (!t.keeps(k.params))
            continue;
        DiffPoly piece = DiffPoly::term(c, Monomial(), k.params);
        const auto& e = k.mono.exponents();
        for (std::size_t s = 0; s < e.size() && !piece.is_zero(); ++s)
            if (e[s] > 0)
                piece = mul(piece, power_of(static_cast<int>(s), e[s]), t);
        r += piece;
    }
    return r;
}

int term_deg_dif(const TermKey& key, DegreeConvention conv)
{
    int d = key.mono.weight() - 2 * key.params.hbar;
    if (conv == DegreeConvention::mu_extended)
        d -= key.params.mu;
    return d;
}

std::vector<TermGrading> gradings(const DiffPoly& f, DegreeConvention conv)
{
    std::vector<TermGrading> out;
    for (const auto& [k, c] : f.terms())
        out.push_back({k, term_deg_dif(k, conv), k.mono.degree()});
    return out;
}

bool is_homogeneous(const DiffPoly& f, int k, DegreeConvention conv)
{
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [&](const auto& t) { return term_deg_dif(t.first, conv) == k; });
}

} // namespace hkdv
