#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "matchbox/alphabet.hpp"
#include "matchbox/errors.hpp"

namespace matchbox {

// The operation slots an algebraic structure can carry. A structure holds a
// subset; axiom sets declare which slots they need.
enum class OpName {
    Prec,      // dendriform / tridendriform left product
    Succ,      // dendriform / tridendriform right product
    Dot,       // tridendriform middle product
    Bullet,    // (matching/compatible) associative product
    Star,      // pre-Lie product
    Circ,      // PostLie circle product
    AssocStar, // associative PostLie companion product
    Bracket,   // Lie bracket
};

inline const char* op_token(OpName op) {
    switch (op) {
    case OpName::Prec: return "prec";
    case OpName::Succ: return "succ";
    case OpName::Dot: return "dot";
    case OpName::Bullet: return "bullet";
    case OpName::Star: return "star";
    case OpName::Circ: return "circ";
    case OpName::AssocStar: return "assoc_star";
    case OpName::Bracket: return "bracket";
    }
    return "?";
}

inline OpName op_from_token(const std::string& token) {
    for (OpName op : {OpName::Prec, OpName::Succ, OpName::Dot, OpName::Bullet, OpName::Star,
                      OpName::Circ, OpName::AssocStar, OpName::Bracket})
        if (token == op_token(op)) return op;
    throw config_error("unknown operation '" + token + "'");
}

// Indexed bilinear operation: (omega, x, y) -> element.
template <typename E>
using BinOp = std::function<E(const std::string&, const E&, const E&)>;

// A carrier together with a family of Omega-indexed binary operations.
// `provenance` records the chain of constructions that produced it, so a
// structure three transforms deep still says where it came from in reports.
template <typename E>
class OpStructure {
public:
    std::string name;
    Alphabet omega;
    std::vector<std::string> provenance;

    void set_op(OpName op, BinOp<E> fn) { ops_[op] = std::move(fn); }
    bool has_op(OpName op) const { return ops_.count(op) != 0; }

    std::vector<OpName> op_names() const {
        std::vector<OpName> out;
        for (const auto& [op, fn] : ops_) {
            (void)fn;
            out.push_back(op);
        }
        return out;
    }

    E apply(OpName op, const std::string& idx, const E& x, const E& y) const {
        const auto it = ops_.find(op);
        if (it == ops_.end())
            throw missing_operation("structure '" + name + "' has no operation '" + op_token(op) + "'");
        if (!omega.contains(idx))
            throw alphabet_mismatch("index '" + idx + "' not in the type alphabet of '" + name + "'");
        return it->second(idx, x, y);
    }

private:
    std::map<OpName, BinOp<E>> ops_;
};

} // namespace matchbox
