#include "matchbox/tensor.hpp"

#include <sstream>

#include "matchbox/errors.hpp"

namespace matchbox {

MatTensor::MatTensor(std::size_t dim, std::vector<std::pair<Mat, Mat>> pairs) : dim_(dim) {
    if (dim_ == 0) throw dimension_mismatch("tensor dimension must be positive");
    for (auto& [u, v] : pairs) {
        if (u.dim() != dim_ || v.dim() != dim_)
            throw dimension_mismatch("tensor factor dimension differs from declared dimension");
        if (u.is_zero() || v.is_zero()) continue;
        pairs_.emplace_back(std::move(u), std::move(v));
    }
}

std::vector<Rational> MatTensor::dense() const {
    const std::size_t k = dim_;
    std::vector<Rational> out(k * k * k * k, Rational(0));
    for (const auto& [u, v] : pairs_)
        for (std::size_t i1 = 0; i1 < k; ++i1)
            for (std::size_t j1 = 0; j1 < k; ++j1) {
                if (u.at(i1, j1) == 0) continue;
                for (std::size_t i2 = 0; i2 < k; ++i2)
                    for (std::size_t j2 = 0; j2 < k; ++j2)
                        out[((i1 * k + j1) * k + i2) * k + j2] += u.at(i1, j1) * v.at(i2, j2);
            }
    return out;
}

bool MatTensor::is_zero() const {
    if (pairs_.empty()) return true;
    for (const Rational& x : dense())
        if (x != 0) return false;
    return true;
}

bool MatTensor::same_tensor(const MatTensor& o) const {
    if (dim_ != o.dim_) return false;
    return dense() == o.dense();
}

std::string MatTensor::encode() const {
    if (pairs_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (i) os << " + ";
        os << pairs_[i].first.encode() << "(x)" << pairs_[i].second.encode();
    }
    return os.str();
}

Mat tensor_apply(const MatTensor& r, const Mat& x) {
    if (x.dim() != r.dim())
        throw dimension_mismatch("operand dimension differs from tensor dimension");
    Mat out = Mat::zeros(r.dim());
    for (const auto& [u, v] : r.pairs()) out += u * x * v;
    return out;
}

Tensor3::Tensor3(std::size_t dim, std::vector<std::array<Mat, 3>> terms)
    : dim_(dim), terms_(std::move(terms)) {
    if (dim_ == 0) throw dimension_mismatch("tensor dimension must be positive");
    for (const auto& t : terms_)
        for (const Mat& f : t)
            if (f.dim() != dim_)
                throw dimension_mismatch("tensor factor dimension differs from declared dimension");
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
    if (dim_ != o.dim_) throw dimension_mismatch("tensor dimensions differ");
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
    if (dim_ != o.dim_) throw dimension_mismatch("tensor dimensions differ");
    for (auto t : o.terms_) {
        t[0] *= Rational(-1);
        terms_.push_back(std::move(t));
    }
    return *this;
}

Tensor3& Tensor3::operator*=(const Rational& c) {
    for (auto& t : terms_) t[0] *= c;
    return *this;
}

Tensor3 operator*(const Tensor3& a, const Tensor3& b) {
    if (a.dim() != b.dim()) throw dimension_mismatch("tensor dimensions differ");
    std::vector<std::array<Mat, 3>> out;
    out.reserve(a.terms().size() * b.terms().size());
    for (const auto& s : a.terms())
        for (const auto& t : b.terms())
            out.push_back({s[0] * t[0], s[1] * t[1], s[2] * t[2]});
    return Tensor3(a.dim(), std::move(out));
}

std::vector<Rational> Tensor3::dense() const {
    const std::size_t k = dim_;
    const std::size_t kk = k * k;
    std::vector<Rational> out(kk * kk * kk, Rational(0));
    for (const auto& t : terms_)
        for (std::size_t p = 0; p < kk; ++p) {
            const Rational& a = t[0].entries()[p];
            if (a == 0) continue;
            for (std::size_t q = 0; q < kk; ++q) {
                const Rational& b = t[1].entries()[q];
                if (b == 0) continue;
                const Rational ab = a * b;
                for (std::size_t r = 0; r < kk; ++r) {
                    const Rational& c = t[2].entries()[r];
                    if (c == 0) continue;
                    out[(p * kk + q) * kk + r] += ab * c;
                }
            }
        }
    return out;
}

bool Tensor3::is_zero() const {
    if (terms_.empty()) return true;
    for (const Rational& x : dense())
        if (x != 0) return false;
    return true;
}

bool Tensor3::same_tensor(const Tensor3& o) const {
    if (dim_ != o.dim_) return false;
    return dense() == o.dense();
}

Tensor3 tensor_embed(const MatTensor& r, Slot3 slot) {
    const Mat one = Mat::identity(r.dim());
    std::vector<std::array<Mat, 3>> terms;
    terms.reserve(r.pairs().size());
    for (const auto& [u, v] : r.pairs()) {
        switch (slot) {
        case Slot3::S12: terms.push_back({u, v, one}); break;
        case Slot3::S13: terms.push_back({u, one, v}); break;
        case Slot3::S23: terms.push_back({one, u, v}); break;
        }
    }
    return Tensor3(r.dim(), std::move(terms));
}

Tensor3 paybe_residual(const MatTensor& r, const MatTensor& s, const Rational& weight) {
    if (r.dim() != s.dim()) throw dimension_mismatch("tensor dimensions differ");
    const Tensor3 r12 = tensor_embed(r, Slot3::S12);
    const Tensor3 r13 = tensor_embed(r, Slot3::S13);
    const Tensor3 r23 = tensor_embed(r, Slot3::S23);
    const Tensor3 s12 = tensor_embed(s, Slot3::S12);
    const Tensor3 s13 = tensor_embed(s, Slot3::S13);
    const Tensor3 s23 = tensor_embed(s, Slot3::S23);
    Tensor3 out = r13 * s12;
    out -= r12 * s23;
    out += r23 * s13;
    out += weight * s13;
    return out;
}

bool swap_condition(const MatTensor& r, const MatTensor& s) {
    if (r.dim() != s.dim()) throw dimension_mismatch("tensor dimensions differ");
    const Tensor3 lhs = tensor_embed(r, Slot3::S12) * tensor_embed(s, Slot3::S23);
    const Tensor3 rhs = tensor_embed(s, Slot3::S12) * tensor_embed(r, Slot3::S23);
    return lhs.same_tensor(rhs);
}

namespace {

std::uint64_t pow_checked(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (out > cap / (base == 0 ? 1 : base)) return cap + 1;
        out *= base;
    }
    return out;
}

// Invokes fn on every coefficient vector of the grid^support odometer, last
// coordinate fastest.
template <typename Fn>
void for_each_grid_point(const AybeSearchConfig& cfg, Fn&& fn) {
    const std::size_t k = cfg.support.size();
    std::vector<std::size_t> idx(k, 0);
    while (true) {
        std::vector<std::pair<Mat, Mat>> pairs;
        pairs.reserve(k);
        for (std::size_t i = 0; i < k; ++i) {
            const Rational& c = cfg.grid[idx[i]];
            if (c == 0) continue;
            pairs.emplace_back(c * cfg.support[i].first, cfg.support[i].second);
        }
        fn(MatTensor(cfg.dim, std::move(pairs)));
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < cfg.grid.size()) break;
            idx[pos] = 0;
            if (pos == 0) return;
        }
        if (k == 0) return;
    }
}

void check_budget(const AybeSearchConfig& cfg) {
    if (cfg.support.empty()) throw config_error("search support must be nonempty");
    if (cfg.grid.empty()) throw config_error("search grid must be nonempty");
    for (const auto& [u, v] : cfg.support)
        if (u.dim() != cfg.dim || v.dim() != cfg.dim)
            throw dimension_mismatch("support pair dimension differs from search dimension");
    const std::uint64_t points = pow_checked(cfg.grid.size(), cfg.support.size(), cfg.cap);
    if (points > cfg.cap)
        throw budget_exceeded("grid has more than " + std::to_string(cfg.cap) + " points");
}

} // namespace

std::vector<MatTensor> aybe_search(const AybeSearchConfig& cfg) {
    check_budget(cfg);
    std::vector<MatTensor> out;
    for_each_grid_point(cfg, [&](MatTensor r) {
        if (paybe_residual(r, r, cfg.weight).is_zero()) out.push_back(std::move(r));
    });
    return out;
}

std::vector<std::pair<MatTensor, MatTensor>> aybe_search_pairs(const AybeSearchConfig& cfg) {
    const std::vector<MatTensor> singles = aybe_search(cfg);
    std::vector<std::pair<MatTensor, MatTensor>> out;
    for (std::size_t i = 0; i < singles.size(); ++i)
        for (std::size_t j = i; j < singles.size(); ++j) {
            const MatTensor& r = singles[i];
            const MatTensor& s = singles[j];
            if (!paybe_residual(r, s, cfg.weight).is_zero()) continue;
            if (!paybe_residual(s, r, cfg.weight).is_zero()) continue;
            if (!swap_condition(r, s)) continue;
            out.emplace_back(r, s);
        }
    return out;
}

} // namespace matchbox
