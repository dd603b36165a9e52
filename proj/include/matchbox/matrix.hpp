#pragma once

#include <string>
#include <vector>

#include "matchbox/rational.hpp"

namespace matchbox {

// Square matrix over Q, row-major. Dimensions stay small (<= 3 in practice);
// all arithmetic checks dimension agreement.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t dim, std::vector<Rational> entries); // row-major, dim*dim entries
    static Mat zeros(std::size_t dim);
    static Mat identity(std::size_t dim);
    static Mat unit(std::size_t dim, std::size_t i, std::size_t j); // E_{ij}, 1-based

    std::size_t dim() const { return dim_; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
    Rational& at(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
    const std::vector<Rational>& entries() const { return a_; }

    bool is_zero() const;

    Mat& operator+=(const Mat&);
    Mat& operator-=(const Mat&);
    Mat& operator*=(const Rational&);

    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(const Rational& c, Mat a) { return a *= c; }
    friend Mat operator-(Mat a) { return a *= Rational(-1); }
    friend Mat operator*(const Mat& a, const Mat& b); // matrix product

    bool operator==(const Mat&) const = default;

    std::string encode() const; // "[[a,b],[c,d]]"

private:
    std::size_t dim_ = 0;
    std::vector<Rational> a_;
};

// Commutator [x, y] = xy - yx.
inline Mat commutator(const Mat& x, const Mat& y) { return x * y - y * x; }

// Parses "E12" (single-digit 1-based indices) into a matrix unit of the given
// dimension.
Mat parse_matrix_unit(const std::string& text, std::size_t dim);

} // namespace matchbox
