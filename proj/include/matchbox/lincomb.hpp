#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "matchbox/rational.hpp"

namespace matchbox {

// Finite Q-linear combination of basis keys. Keys are kept in their natural
// order (operator<) and zero coefficients are never stored, so equality of
// combinations is plain structural equality.
template <typename Key>
class LinComb {
public:
    using Terms = std::map<Key, Rational>;

    LinComb() = default;

    static LinComb zero() { return LinComb(); }

    static LinComb basis(const Key& k, const Rational& c = Rational(1)) {
        LinComb out;
        out.add_term(k, c);
        return out;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    Rational coeff(const Key& k) const {
        const auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Key& k, const Rational& c) {
        if (c == 0) return;
        const auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }

    LinComb& operator-=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }

    LinComb& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, v] : terms_) v *= c;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(const Rational& c, LinComb a) { return a *= c; }
    friend LinComb operator-(LinComb a) { return a *= Rational(-1); }

    bool operator==(const LinComb&) const = default;

    // Canonical text form: terms joined by " + " in key order, each as
    // "<coeff>*<key>"; the empty combination prints "0".
    std::string encode() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << to_string(c) << "*" << k.encode();
        }
        return os.str();
    }

private:
    Terms terms_;
};

// Bilinear extension of a basis-level product f : (Key, Key) -> LinComb.
template <typename Key, typename F>
LinComb<Key> bilinear(const LinComb<Key>& a, const LinComb<Key>& b, F&& f) {
    LinComb<Key> out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            LinComb<Key> part = f(ka, kb);
            part *= ca * cb;
            out += part;
        }
    return out;
}

} // namespace matchbox
