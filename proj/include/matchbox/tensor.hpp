#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "matchbox/matrix.hpp"

namespace matchbox {

// Element of M_k(Q) tensor M_k(Q), kept as a formal sum of decomposable
// pairs u (x) v. Pairs with a zero factor are dropped on construction; the
// representation is not otherwise reduced, so semantic zero/equality tests go
// through the dense expansion.
class MatTensor {
public:
    MatTensor() = default;
    MatTensor(std::size_t dim, std::vector<std::pair<Mat, Mat>> pairs);

    static MatTensor zero(std::size_t dim) { return MatTensor(dim, {}); }

    std::size_t dim() const { return dim_; }
    const std::vector<std::pair<Mat, Mat>>& pairs() const { return pairs_; }

    // Dense k^2 x k^2 expansion: entry ((i1,j1),(i2,j2)) in row-major order.
    std::vector<Rational> dense() const;
    bool is_zero() const;
    bool same_tensor(const MatTensor& o) const; // equality as tensors

    std::string encode() const;

private:
    std::size_t dim_ = 0;
    std::vector<std::pair<Mat, Mat>> pairs_;
};

// The operator carried by r: P_r(x) = sum of u_i x v_i. Linear in x.
Mat tensor_apply(const MatTensor& r, const Mat& x);

// Which pair of the three tensor slots a 2-tensor occupies; the remaining
// slot holds the identity: r12 = sum u (x) v (x) 1, and so on.
enum class Slot3 { S12, S13, S23 };

// Formal sum of triples a (x) b (x) c in the triple tensor power of M_k(Q).
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(std::size_t dim, std::vector<std::array<Mat, 3>> terms);

    static Tensor3 zero(std::size_t dim) { return Tensor3(dim, {}); }

    std::size_t dim() const { return dim_; }
    const std::vector<std::array<Mat, 3>>& terms() const { return terms_; }

    Tensor3& operator+=(const Tensor3&);
    Tensor3& operator-=(const Tensor3&);
    Tensor3& operator*=(const Rational&);
    friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
    friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
    friend Tensor3 operator*(const Rational& c, Tensor3 a) { return a *= c; }

    // Slotwise product: (a (x) b (x) c)(a' (x) b' (x) c') = aa' (x) bb' (x) cc'.
    friend Tensor3 operator*(const Tensor3& a, const Tensor3& b);

    std::vector<Rational> dense() const; // k^6 entries
    bool is_zero() const;
    bool same_tensor(const Tensor3& o) const;

private:
    std::size_t dim_ = 0;
    std::vector<std::array<Mat, 3>> terms_;
};

Tensor3 tensor_embed(const MatTensor& r, Slot3 slot);

// Residual of the two-tensor polarized associative Yang-Baxter condition for
// the ordered pair (r, s) at weight w:
//
//   r13 s12 - r12 s23 + r23 s13 + w s13.
//
// With r = s this is the polarized AYBE of weight w itself.
Tensor3 paybe_residual(const MatTensor& r, const MatTensor& s, const Rational& weight);

// r12 s23 = s12 r23, the slot-swap compatibility that lets a family of AYBE
// solutions mix indices in the Rota-Baxter identity.
bool swap_condition(const MatTensor& r, const MatTensor& s);

struct AybeSearchConfig {
    std::size_t dim = 2;
    std::vector<std::pair<Mat, Mat>> support; // candidate r = sum c_i * (u_i (x) v_i)
    std::vector<Rational> grid;               // each c_i ranges over this
    Rational weight = Rational(0);
    std::uint64_t cap = 200000; // BudgetExceeded when |grid|^|support| exceeds it
};

// All grid points (in odometer order, last coefficient fastest) whose tensor
// solves the polarized AYBE at the given weight. The zero tensor always
// qualifies and is included when the grid contains it.
std::vector<MatTensor> aybe_search(const AybeSearchConfig& cfg);

// Family mode: unordered pairs (i <= j) of single-tensor solutions that in
// both orders pass the pair residual and the swap condition, i.e. that can
// serve as two members of one matching Rota-Baxter family.
std::vector<std::pair<MatTensor, MatTensor>> aybe_search_pairs(const AybeSearchConfig& cfg);

} // namespace matchbox
