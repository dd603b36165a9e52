#include "matchbox/poly.hpp"

#include <sstream>

#include "matchbox/errors.hpp"

namespace matchbox {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(int degree, const Rational& c) {
    if (degree < 0) throw config_error("monomial degree must be nonnegative");
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
    v.back() = c;
    return Poly(std::move(v));
}

Rational Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(i)];
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(out));
}

std::string Poly::encode() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& v = c_[static_cast<std::size_t>(i)];
        if (v == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << to_string(v);
        } else {
            os << to_string(v) << "*x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly integrate(const Poly& f) {
    if (f.is_zero()) return Poly();
    std::vector<Rational> out(f.coeffs().size() + 1, Rational(0));
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        out[i + 1] = f.coeffs()[i] / Rational(static_cast<long long>(i) + 1);
    return Poly(std::move(out));
}

} // namespace matchbox
