#pragma once

#include <string>
#include <vector>

#include "matchbox/rational.hpp"

namespace matchbox {

// Q^n with pointwise multiplication; the finite stand-in for sequence space.
// All arithmetic requires equal lengths (DimensionMismatch otherwise).
class SeqN {
public:
    SeqN() = default;
    explicit SeqN(std::vector<Rational> values);
    static SeqN zeros(std::size_t n);

    std::size_t size() const { return v_.size(); }
    const Rational& operator[](std::size_t i) const { return v_[i]; }
    const std::vector<Rational>& values() const { return v_; }

    bool is_zero() const;

    SeqN& operator+=(const SeqN&);
    SeqN& operator-=(const SeqN&);
    SeqN& operator*=(const Rational&);

    friend SeqN operator+(SeqN a, const SeqN& b) { return a += b; }
    friend SeqN operator-(SeqN a, const SeqN& b) { return a -= b; }
    friend SeqN operator*(const Rational& c, SeqN a) { return a *= c; }
    friend SeqN operator-(SeqN a) { return a *= Rational(-1); }
    friend SeqN operator*(const SeqN& a, const SeqN& b); // pointwise

    bool operator==(const SeqN&) const = default;

    std::string encode() const; // "[a1, a2, ...]"

private:
    std::vector<Rational> v_;
};

// Strictly-lower-triangular summation P(a)_i = sum of a_j for j < i. A
// Rota-Baxter operator on (Q^n, pointwise); its weight is one of +1/-1 and is
// determined empirically by running_sum_weight below rather than assumed.
SeqN running_sum(const SeqN& a);

// Finds the weight in {+1, -1} for which the Rota-Baxter identity
// P(a)P(b) = P(aP(b)) + P(P(a)b) + w P(ab) holds on a deterministic sample of
// pairs, and double-checks it on all of them.
Rational running_sum_weight(std::size_t n);

} // namespace matchbox
