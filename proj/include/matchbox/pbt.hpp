#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "matchbox/alphabet.hpp"
#include "matchbox/rational.hpp"

namespace matchbox {

// Planar binary tree with D-decorated internal vertices and Omega-typed
// internal edges. Every internal vertex has exactly two children; an edge
// into a leaf carries the reserved empty type "e", an edge into an internal
// vertex carries a symbol from Omega — node() rejects anything else.
//
// Values are immutable and cheap to copy (shared structure). The canonical
// serialization is computed once per node and doubles as the total order on
// trees, so linear combinations sort by it.
//
// Grammar:   Leaf  ::= "|"
//            Node  ::= "B(" dec "," type "," Node-or-Leaf "," type "," Node-or-Leaf ")"
namespace detail {
struct PbtNode;
}

class Pbt {
public:
    Pbt() = default; // leaf

    static Pbt leaf() { return Pbt(); }
    static Pbt node(const std::string& dec,
                    const std::string& ltype, const Pbt& left,
                    const std::string& rtype, const Pbt& right);

    bool is_leaf() const { return n_ == nullptr; }
    int vertices() const;

    // Longest root-to-leaf path counted in internal vertices; leaf has 0.
    int depth() const;

    // Accessors below require an internal vertex.
    const std::string& dec() const;
    const std::string& ltype() const;
    const std::string& rtype() const;
    const Pbt& left() const;
    const Pbt& right() const;

    const std::string& encode() const;

    friend bool operator==(const Pbt& a, const Pbt& b) {
        return a.n_ == b.n_ || a.encode() == b.encode();
    }
    friend bool operator<(const Pbt& a, const Pbt& b) { return a.encode() < b.encode(); }

private:
    std::shared_ptr<const detail::PbtNode> n_;
};

namespace detail {
struct PbtNode {
    std::string dec, ltype, rtype;
    Pbt left, right;
    std::string enc;
    int nverts = 0;
    int depth = 0;
};
} // namespace detail

inline int Pbt::vertices() const { return n_ ? n_->nverts : 0; }
inline int Pbt::depth() const { return n_ ? n_->depth : 0; }

struct PbtParts {
    Pbt left;
    std::string dec;
    std::string ltype;
    std::string rtype;
    Pbt right;
};

// Inverse of Pbt::node; throws LeafDecomposition on the leaf.
PbtParts decompose_pbt(const Pbt& t);

// T^l v_{d,t1,t2} T^r, same validation as node().
inline Pbt graft_pbt(const Pbt& left, const Pbt& right, const std::string& dec,
                     const std::string& ltype, const std::string& rtype) {
    return Pbt::node(dec, ltype, left, rtype, right);
}

// True iff every decoration is in D and every edge type is in Omega (leaf
// edges excepted: those must be "e", which node() already guarantees).
bool validate_pbt(const Pbt& t, const Alphabet& dec, const Alphabet& omega);

// All trees with n internal vertices, sorted by canonical serialization.
std::vector<Pbt> enumerate_pbt(int n, const Alphabet& dec, const Alphabet& omega);

// Catalan(n) * |D|^n * |Omega|^(n-1) for n >= 1; 1 for n = 0.
Integer count_pbt(int n, std::size_t dec_size, std::size_t omega_size);

Pbt parse_pbt(std::string_view text);

} // namespace matchbox
