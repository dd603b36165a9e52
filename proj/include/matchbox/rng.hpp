#pragma once

#include <cstdint>
#include <vector>

#include "matchbox/rational.hpp"

namespace matchbox {

// SplitMix64. Hand-rolled so that seeded streams are identical on every
// platform; the std:: distributions are implementation-defined and would
// break byte-identical reports.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); n > 0. Modulo bias is irrelevant for test sampling.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    long long int_in(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Small rational with numerator in [-bound, bound] and denominator in
    // [1, max_den]; not reduced-form uniform, just a convenient test mesh.
    Rational rational(long long bound = 3, long long max_den = 3) {
        return Rational(Integer(int_in(-bound, bound)), Integer(int_in(1, max_den)));
    }

    // Independent child stream; used to give every (identity, index-pair)
    // cell its own deterministic sequence regardless of thread scheduling.
    Rng fork(std::uint64_t salt) const {
        Rng child(state_ ^ (0x9e3779b97f4a7c15ULL * (salt + 0x632be59bd9b4e019ULL)));
        child.next();
        return child;
    }

private:
    std::uint64_t state_;
};

} // namespace matchbox
