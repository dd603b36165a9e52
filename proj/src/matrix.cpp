#include "matchbox/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "matchbox/errors.hpp"

namespace matchbox {

Mat::Mat(std::size_t dim, std::vector<Rational> entries) : dim_(dim), a_(std::move(entries)) {
    if (dim_ == 0) throw dimension_mismatch("matrix dimension must be positive");
    if (a_.size() != dim_ * dim_)
        throw dimension_mismatch("expected " + std::to_string(dim_ * dim_) + " entries, got " +
                                 std::to_string(a_.size()));
}

Mat Mat::zeros(std::size_t dim) { return Mat(dim, std::vector<Rational>(dim * dim, Rational(0))); }

Mat Mat::identity(std::size_t dim) {
    Mat m = zeros(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::unit(std::size_t dim, std::size_t i, std::size_t j) {
    if (i < 1 || i > dim || j < 1 || j > dim)
        throw dimension_mismatch("matrix unit index out of range");
    Mat m = zeros(dim);
    m.at(i - 1, j - 1) = 1;
    return m;
}

bool Mat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x == 0; });
}

namespace {
void require_same_dim(const Mat& a, const Mat& b) {
    if (a.dim() != b.dim())
        throw dimension_mismatch("matrix dimensions differ: " + std::to_string(a.dim()) + " vs " +
                                 std::to_string(b.dim()));
}
} // namespace

Mat& Mat::operator+=(const Mat& o) {
    require_same_dim(*this, o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

Mat& Mat::operator-=(const Mat& o) {
    require_same_dim(*this, o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

Mat& Mat::operator*=(const Rational& c) {
    for (auto& x : a_) x *= c;
    return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
    require_same_dim(a, b);
    const std::size_t n = a.dim();
    Mat out = Mat::zeros(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a.at(i, k) == 0) continue;
            for (std::size_t j = 0; j < n; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return out;
}

std::string Mat::encode() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < dim_; ++i) {
        if (i) os << ",";
        os << "[";
        for (std::size_t j = 0; j < dim_; ++j) {
            if (j) os << ",";
            os << to_string(at(i, j));
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

Mat parse_matrix_unit(const std::string& text, std::size_t dim) {
    if (text.size() != 3 || text[0] != 'E' || text[1] < '1' || text[1] > '9' || text[2] < '1' ||
        text[2] > '9')
        throw parse_error("expected a matrix unit like 'E12', got '" + text + "'");
    return Mat::unit(dim, static_cast<std::size_t>(text[1] - '0'),
                     static_cast<std::size_t>(text[2] - '0'));
}

} // namespace matchbox
