#pragma once

#include <string>
#include <vector>

#include "matchbox/rational.hpp"

namespace matchbox {

// Q[x], dense coefficient vector, trailing zeros trimmed so that equality is
// structural. coeff(i) is the coefficient of x^i.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);

    static Poly zero() { return Poly(); }
    static Poly constant(const Rational& c);
    static Poly monomial(int degree, const Rational& c = Rational(1)); // c * x^degree

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly& operator+=(const Poly&);
    Poly& operator-=(const Poly&);
    Poly& operator*=(const Rational&);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend Poly operator-(Poly a) { return a *= Rational(-1); }
    friend Poly operator*(const Poly& a, const Poly& b);

    bool operator==(const Poly&) const = default;

    // Canonical text form, e.g. "1/2*x^3 + -1*x + 2"; zero prints "0".
    std::string encode() const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Antiderivative vanishing at 0.
Poly integrate(const Poly& f);

// I_k(f) = integral from 0 of k * f; a Rota-Baxter operator of weight 0 for
// any kernel k.
inline Poly kernel_integral(const Poly& f, const Poly& k) { return integrate(k * f); }

} // namespace matchbox
