#include <cctype>
#include <charconv>
#include <stdexcept>
#include <string>

#include "hkdv/diffpoly.hpp"

namespace hkdv {
namespace {

[[noreturn]] void bad(std::string_view what, std::string_view token)
{
    throw std::invalid_argument(std::string(what) + ": '" + std::string(token) + "'");
}

int parse_int(std::string_view s)
{
    int v = 0;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end)
        bad("bad integer", s);
    return v;
}

// Exponent after '^', absent means 1.
int exponent_of(std::string_view rest, std::string_view token)
{
    if (rest.empty())
        return 1;
    if (rest.front() != '^')
        bad("bad factor", token);
    return parse_int(rest.substr(1));
}

struct ParsedTerm {
    GaussianRational coeff{1};
    ParamExp params;
    Monomial mono;
};

ParsedTerm parse_term(std::string_view text)
{
    ParsedTerm t;
    Rational c(1);
    bool imaginary = false;
    for (const std::string& raw : detail::split_factors(text)) {
        std::string_view f = raw;
        if (f.empty())
            bad("empty factor", text);
        if (f.front() == '-' && f.size() > 1 && !std::isdigit(static_cast<unsigned char>(f[1]))) {
            c = -c;
            f.remove_prefix(1);
        }
        if (std::isdigit(static_cast<unsigned char>(f.front())) || f.front() == '-') {
            c *= Rational::parse(f);
        } else if (f == "im") {
            if (imaginary)
                bad("repeated im", text);
            imaginary = true;
        } else if (f.starts_with("hbar")) {
            t.params.hbar += exponent_of(f.substr(4), f);
        } else if (f.starts_with("eps")) {
            std::string_view rest = f.substr(3);
            if (rest.starts_with("^(")) {
                if (!rest.ends_with("/2)"))
                    bad("bad eps exponent", f);
                t.params.eps2 += parse_int(rest.substr(2, rest.size() - 5));
            } else {
                t.params.eps2 += 2 * exponent_of(rest, f);
            }
        } else if (f.starts_with("mu")) {
            t.params.mu += exponent_of(f.substr(2), f);
        } else if (f.front() == 'u') {
            const std::size_t caret = f.find('^');
            const int k = parse_int(f.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1));
            const int e = caret == std::string_view::npos ? 1 : parse_int(f.substr(caret + 1));
            if (k < 0 || e < 0)
                bad("bad variable", f);
            t.mono = t.mono * Monomial::variable(k, e);
        } else {
            bad("unknown factor", f);
        }
    }
    t.coeff = imaginary ? GaussianRational(Rational(0), c) : GaussianRational(c);
    return t;
}

} // namespace

ScalarPoly ScalarPoly::parse(std::string_view text)
{
    ScalarPoly r;
    if (text == "0")
        return r;
    for (const std::string& term : detail::split_terms(text)) {
        ParsedTerm t = parse_term(term);
        if (!t.mono.is_one())
            bad("ScalarPoly cannot contain u variables", term);
        r.add_term(t.params, t.coeff);
    }
    return r;
}

DiffPoly DiffPoly::parse(std::string_view text)
{
    DiffPoly r;
    if (text == "0")
        return r;
    for (const std::string& term : detail::split_terms(text)) {
        ParsedTerm t = parse_term(term);
        r.add_term(TermKey{t.params, std::move(t.mono)}, t.coeff);
    }
    return r;
}

} // namespace hkdv
