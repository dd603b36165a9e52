#include "matchbox/seqn.hpp"

#include <algorithm>
#include <sstream>

#include "matchbox/errors.hpp"
#include "matchbox/rng.hpp"

namespace matchbox {

SeqN::SeqN(std::vector<Rational> values) : v_(std::move(values)) {
    if (v_.size() < 2) throw dimension_mismatch("sequence length must be at least 2");
}

SeqN SeqN::zeros(std::size_t n) { return SeqN(std::vector<Rational>(n, Rational(0))); }

bool SeqN::is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](const Rational& x) { return x == 0; });
}

namespace {
void require_same_size(const SeqN& a, const SeqN& b) {
    if (a.size() != b.size())
        throw dimension_mismatch("sequence lengths differ: " + std::to_string(a.size()) + " vs " +
                                 std::to_string(b.size()));
}
} // namespace

SeqN& SeqN::operator+=(const SeqN& o) {
    require_same_size(*this, o);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
}

SeqN& SeqN::operator-=(const SeqN& o) {
    require_same_size(*this, o);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
}

SeqN& SeqN::operator*=(const Rational& c) {
    for (auto& x : v_) x *= c;
    return *this;
}

SeqN operator*(const SeqN& a, const SeqN& b) {
    require_same_size(a, b);
    std::vector<Rational> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
    return SeqN(std::move(out));
}

std::string SeqN::encode() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i) os << ", ";
        os << to_string(v_[i]);
    }
    os << "]";
    return os.str();
}

SeqN running_sum(const SeqN& a) {
    std::vector<Rational> out(a.size(), Rational(0));
    Rational acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = acc; // strictly lower: excludes a_i itself
        acc += a[i];
    }
    return SeqN(std::move(out));
}

Rational running_sum_weight(std::size_t n) {
    const Rational candidates[2] = {Rational(1), Rational(-1)};
    for (const Rational& w : candidates) {
        Rng rng(0x5eedULL); // same pairs for both candidates
        const auto sample = [&] {
            std::vector<Rational> v(n);
            for (auto& x : v) x = rng.rational(3, 3);
            return SeqN(std::move(v));
        };
        bool ok = true;
        for (int trial = 0; trial < 24 && ok; ++trial) {
            const SeqN a = sample();
            const SeqN b = sample();
            const SeqN lhs = running_sum(a) * running_sum(b);
            const SeqN rhs = running_sum(a * running_sum(b)) + running_sum(running_sum(a) * b) +
                             w * running_sum(a * b);
            ok = (lhs == rhs);
        }
        if (ok) return w;
    }
    throw Error("Internal", "running sum satisfies no Rota-Baxter identity of weight +1 or -1");
}

} // namespace matchbox
