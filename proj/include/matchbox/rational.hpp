#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "matchbox/errors.hpp"

namespace matchbox {

// Exact arithmetic everywhere: no floating point appears in any computation.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational rat(long long num, long long den = 1) {
    if (den == 0) throw parse_error("rational with zero denominator");
    // cpp_rational requires a positive denominator at construction.
    Integer n(num), d(den);
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rational(n, d);
}

// Canonical form: "p" when the denominator is 1, "p/q" otherwise, q > 0.
inline std::string to_string(const Rational& r) { return r.str(); }

// Accepts "p" and "p/q" with optional leading '-' on p.
inline Rational parse_rational(std::string_view text) {
    const auto bad = [&] { return parse_error("invalid rational '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    const auto digits_ok = [](std::string_view s) {
        if (!s.empty() && s.front() == '-') s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    try {
        if (slash == std::string_view::npos) {
            if (!digits_ok(text)) throw bad();
            return Rational(Integer(std::string(text)));
        }
        const std::string_view num = text.substr(0, slash);
        const std::string_view den = text.substr(slash + 1);
        if (!digits_ok(num) || !digits_ok(den)) throw bad();
        Integer n{std::string(num)};
        Integer d{std::string(den)};
        if (d == 0) throw bad();
        if (d < 0) {
            n = -n;
            d = -d;
        }
        return Rational(n, d);
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

} // namespace matchbox
