#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matchbox/alphabet.hpp"

namespace matchbox {

// Non-planar rooted tree with D-decorated vertices and Omega-typed edges.
// Equality is isomorphism of decorated typed trees, realized by keeping every
// value in canonical form: children are sorted by (edge-type rank in Omega,
// child serialization), recursively. Construction canonicalizes, so distinct
// orderings of the same multiset of children produce identical values.
//
// Grammar:   Tree ::= "R(" dec ")"                          (no children)
//                   | "R(" dec ";[" type ":" Tree { "," type ":" Tree } "])"
class RootedTree {
public:
    using Child = std::pair<std::string, RootedTree>; // (edge type, subtree)

    static RootedTree make(const std::string& dec, std::vector<Child> children,
                           const Alphabet& omega);

    static RootedTree vertex(const std::string& dec); // single vertex

    const std::string& dec() const { return n_->dec; }
    const std::vector<Child>& children() const { return n_->ch; }
    int vertices() const { return n_->nverts; }
    const std::string& encode() const { return n_->enc; }

    friend bool operator==(const RootedTree& a, const RootedTree& b) {
        return a.n_ == b.n_ || a.encode() == b.encode();
    }
    friend bool operator<(const RootedTree& a, const RootedTree& b) {
        return a.encode() < b.encode();
    }

private:
    struct Node {
        std::string dec;
        std::vector<Child> ch;
        std::string enc;
        int nverts = 1;
    };
    std::shared_ptr<const Node> n_;
};

// Grafts `sub` as a new child of the vertex with preorder index `v` in the
// canonical form of `t` (root = 0, children visited in canonical order),
// attached by an edge of type `etype`. The result is canonical again.
// Throws InvalidVertex when v is out of range.
RootedTree graft_rooted_at(const RootedTree& t, int v, const RootedTree& sub,
                           const std::string& etype, const Alphabet& omega);

bool validate_rooted(const RootedTree& t, const Alphabet& dec, const Alphabet& omega);

// All isomorphism classes with n vertices, sorted by canonical serialization.
std::vector<RootedTree> enumerate_rooted(int n, const Alphabet& dec, const Alphabet& omega);

// Parses and canonicalizes; edge types must lie in omega.
RootedTree parse_rooted(std::string_view text, const Alphabet& omega);

} // namespace matchbox
