#pragma once

#include <functional>
#include <string>
#include <vector>

#include "matchbox/opstructure.hpp"

namespace matchbox {

// One defining identity, stored as its residual: the difference of the two
// sides, which must vanish for every (alpha, beta) and every triple. Unary
// and binary identities simply ignore the unused arguments.
template <typename E>
struct Identity {
    std::string name;
    std::function<E(const OpStructure<E>&, const std::string& alpha, const std::string& beta,
                    const E& x, const E& y, const E& z)>
        residual;
};

template <typename E>
struct AxiomSet {
    std::string name;
    std::vector<OpName> required;
    std::vector<Identity<E>> identities;
};

inline std::vector<std::string> axiom_set_names() {
    return {
        "matching-dendriform",   "matching-tridendriform", "matching-associative",
        "totally-compatible",    "compatible-associative", "matching-prelie",
        "matching-lie",          "compatible-lie",         "matching-postlie",
        "matching-assoc-postlie",
    };
}

// Registry of the named structures above. The residuals transcribe the
// defining equations with all sides moved left; the identity names follow
// the usual tags (ddf*, tdf*, mplie*, ...).
template <typename E>
AxiomSet<E> axiom_set(const std::string& name) {
    using S = OpStructure<E>;
    using Id = Identity<E>;
    using Str = std::string;
    constexpr OpName PREC = OpName::Prec;
    constexpr OpName SUCC = OpName::Succ;
    constexpr OpName DOT = OpName::Dot;
    constexpr OpName BUL = OpName::Bullet;
    constexpr OpName STAR = OpName::Star;
    constexpr OpName CIRC = OpName::Circ;
    constexpr OpName ASTAR = OpName::AssocStar;
    constexpr OpName BRK = OpName::Bracket;

    AxiomSet<E> set;
    set.name = name;

    if (name == "matching-dendriform") {
        set.required = {PREC, SUCC};
        set.identities = {
            Id{"ddf1", // (x<a y)<b z = x<a (y<b z) + x<b (y>a z)
               [](const S& s, const Str& a, const Str& b, const E& x, const E& y, const E& z) {
                   return s.apply(PREC, b, s.apply(PREC, a, x, y), z) -
                          s.apply(PREC, a, x, s.apply(PREC, b, y, z)) -
                          s.apply(PREC, b, x, s.apply(SUCC, a, y, z));
               }},
            Id{"ddf2", // (x>a y)<b z = x>a (y<b z)
               [](const S& s, const Str& a, const Str& b, const E& x, const E& y, const E& z) {
                   return s.apply(PREC, b, s.apply(SUCC, a, x, y), z) -
                          s.apply(SUCC, a, x, s.apply(PREC, b, y, z));
               }},
            Id{"ddf3", // x>a (y>b z) = (x<b y)>a z + (x>a y)>b z
               [](const S& s, const Str& a, const Str& b, const E& x, const E& y, const E& z) {
                   return s.apply(SUCC, a, x, s.apply(SUCC, b, y, z)) -
                          s.apply(SUCC, a, s.apply(PREC, b, x, y), z) -
                          s.apply(SUCC, b, s.apply(SUCC, a, x, y), z);
               }},
        };
        return set;
    }

    if (name == "matching-tridendriform") {
        set.required = {PREC, SUCC, DOT};
        set.identities = {
            Id{"tdf1", // (x<a y)<b z = x<a (y<b z) + x<b (y>a z) + x<a (y.b z)
               [](const S& s, const Str& a, const Str& b, const E& x, const E& y, const E& z) {
                   return s.apply(PREC, b, s.apply(PREC, a, x, y), z) -
                          s.apply(PREC, a, x, s.apply(PREC, b, y, z)) -
                          s.apply(PREC, b, x, s.apply(SUCC, a, y, z)) -
                          s.apply(PREC, a, x, s.apply(DOT, b, y, z));
               }},
            Id{"tdf2", // (x>a y)<b z = x>a (y<b z)
               [](const S& s, const Str& a, const Str& b, const E& x, const E& y, const E& z) {
                   return s.apply(PREC, b, s.apply(SUCC, a, x, y), z) -
                          s.apply(SUCC, a, x, s.apply(PREC, b, y, z));
               }},
            Id{"tdf3", // x>a (y>b z) = (x<b y)>a z + (x>a y)>b z + (x.b y)>a z
               [](const S& s, const Str& a, const Str& b, const E& x, const E& y, const E& z) {
                   return s.apply(SUCC, a, x, s.apply(SUCC, b, y, z)) -
                          s.apply(SUCC, a, s.apply(PREC, b, x, y), z) -
                          s.apply(SUCC, b, s.apply(SUCC, a, x, y), z) -
                          s.apply(SUCC, a, s.apply(DOT, b, x, y), z);
               }},
            Id{"tdf4", // (x>a y).b z = x>a (y.b z)
               [](const S& s, const Str& a, const Str& b, const E& x, const E& y, const E& z) {
                   return s.apply(DOT, b, s.apply(SUCC, a, x, y), z) -
                          s.apply(SUCC, a, x, s.apply(DOT, b, y, z));
               }},
            Id{"tdf5", // (x<a y).b z = x.b (y>a z)
               [](const S& s, const Str& a, const Str& b, const E& x, const E& y, const E& z) {
                   return s.apply(DOT, b, s.apply(PREC, a, x, y), z) -
                          s.apply(DOT, b, x, s.apply(SUCC, a, y, z));
               }},
            Id{"tdf6", // (x.a y)<b z = x.a (y<b z)
               [](const S& s, const Str& a, const Str& b, const E& x, const E& y, const E& z) {
                   return s.apply(PREC, b, s.apply(DOT, a, x, y), z) -
                          s.apply(DOT, a, x, s.apply(PREC, b, y, z));
               }},
            Id{"tdf7", // (x.a y).b z = x.a (y.b z)
               [](const S& s, const Str& a, const Str& b, const E& x, const E& y, const E& z) {
                   return s.apply(DOT, b, s.apply(DOT, a, x, y), z) -
                          s.apply(DOT, a, x, s.apply(DOT, b, y, z));
               }},
        };
        return set;
    }

    if (name == "matching-associative") {
        set.required = {BUL};
        set.identities = {
            Id{"massoc", // (x.a y).b z = x.a (y.b z)
               [](const S& s, const Str& a, const Str& b, const E& x, const E& y, const E& z) {
                   return s.apply(BUL, b, s.apply(BUL, a, x, y), z) -
                          s.apply(BUL, a, x, s.apply(BUL, b, y, z));
               }},
        };
        return set;
    }

    if (name == "totally-compatible") {
        set = axiom_set<E>("matching-associative");
        set.name = name;
        set.identities.push_back(
            Id{"tcswap", // (x.a y).b z = x.b (y.a z)
               [](const S& s, const Str& a, const Str& b, const E& x, const E& y, const E& z) {
                   return s.apply(BUL, b, s.apply(BUL, a, x, y), z) -
                          s.apply(BUL, b, x, s.apply(BUL, a, y, z));
               }});
        return set;
    }

    if (name == "compatible-associative") {
        set.required = {BUL};
        set.identities = {
            Id{"wm1", // (x.a y).b z + (x.b y).a z = x.a (y.b z) + x.b (y.a z)
               [](const S& s, const Str& a, const Str& b, const E& x, const E& y, const E& z) {
                   return s.apply(BUL, b, s.apply(BUL, a, x, y), z) +
                          s.apply(BUL, a, s.apply(BUL, b, x, y), z) -
                          s.apply(BUL, a, x, s.apply(BUL, b, y, z)) -
                          s.apply(BUL, b, x, s.apply(BUL, a, y, z));
               }},
        };
        return set;
    }

    if (name == "matching-prelie") {
        set.required = {STAR};
        set.identities = {
            Id{"mpreid", // x*a (y*b z) - (x*a y)*b z = y*b (x*a z) - (y*b x)*a z
               [](const S& s, const Str& a, const Str& b, const E& x, const E& y, const E& z) {
                   return s.apply(STAR, a, x, s.apply(STAR, b, y, z)) -
                          s.apply(STAR, b, s.apply(STAR, a, x, y), z) -
                          s.apply(STAR, b, y, s.apply(STAR, a, x, z)) +
                          s.apply(STAR, a, s.apply(STAR, b, y, x), z);
               }},
        };
        return set;
    }

    const Id alternativity{"alt", // [x,x]_a = 0
                           [](const S& s, const Str& a, const Str&, const E& x, const E&, const E&) {
                               return s.apply(BRK, a, x, x);
                           }};

    if (name == "matching-lie") {
        set.required = {BRK};
        set.identities = {
            alternativity,
            Id{"mjacobi", // [x,[y,z]_b]_a + [y,[z,x]_a]_b + [z,[x,y]_a]_b = 0
               [](const S& s, const Str& a, const Str& b, const E& x, const E& y, const E& z) {
                   return s.apply(BRK, a, x, s.apply(BRK, b, y, z)) +
                          s.apply(BRK, b, y, s.apply(BRK, a, z, x)) +
                          s.apply(BRK, b, z, s.apply(BRK, a, x, y));
               }},
        };
        return set;
    }

    if (name == "compatible-lie") {
        set.required = {BRK};
        set.identities = {
            alternativity,
            Id{"copid", // six-term coupling Jacobi identity
               [](const S& s, const Str& a, const Str& b, const E& x, const E& y, const E& z) {
                   return s.apply(BRK, b, x, s.apply(BRK, a, y, z)) +
                          s.apply(BRK, b, y, s.apply(BRK, a, z, x)) +
                          s.apply(BRK, b, z, s.apply(BRK, a, x, y)) +
                          s.apply(BRK, a, x, s.apply(BRK, b, y, z)) +
                          s.apply(BRK, a, y, s.apply(BRK, b, z, x)) +
                          s.apply(BRK, a, z, s.apply(BRK, b, x, y));
               }},
        };
        return set;
    }

    if (name == "matching-postlie") {
        set = axiom_set<E>("matching-lie");
        set.name = name;
        set.required = {BRK, CIRC};
        // The source statement writes the bracket in mplie1 without an index;
        // it is read here as [x,y]_b, matching the index pattern of the first
        // right-hand term of mplie3.
        set.identities.push_back(
            Id{"mplie1",
               [](const S& s, const Str& a, const Str& b, const E& x, const E& y, const E& z) {
                   return s.apply(CIRC, a, x, s.apply(CIRC, b, y, z)) -
                          s.apply(CIRC, b, s.apply(CIRC, a, x, y), z) -
                          s.apply(CIRC, b, y, s.apply(CIRC, a, x, z)) +
                          s.apply(CIRC, a, s.apply(CIRC, b, y, x), z) -
                          s.apply(CIRC, a, s.apply(BRK, b, x, y), z);
               }});
        set.identities.push_back(
            Id{"mplie2", // x o_a [y,z]_b = [x o_a y, z]_b + [y, x o_a z]_b
               [](const S& s, const Str& a, const Str& b, const E& x, const E& y, const E& z) {
                   return s.apply(CIRC, a, x, s.apply(BRK, b, y, z)) -
                          s.apply(BRK, b, s.apply(CIRC, a, x, y), z) -
                          s.apply(BRK, b, y, s.apply(CIRC, a, x, z));
               }});
        return set;
    }

    if (name == "matching-assoc-postlie") {
        set.required = {ASTAR, CIRC};
        set.identities = {
            Id{"massoc", // the companion star is matching associative
               [](const S& s, const Str& a, const Str& b, const E& x, const E& y, const E& z) {
                   return s.apply(ASTAR, b, s.apply(ASTAR, a, x, y), z) -
                          s.apply(ASTAR, a, x, s.apply(ASTAR, b, y, z));
               }},
            Id{"mplie3",
               [](const S& s, const Str& a, const Str& b, const E& x, const E& y, const E& z) {
                   return s.apply(CIRC, a, x, s.apply(CIRC, b, y, z)) -
                          s.apply(CIRC, b, s.apply(CIRC, a, x, y), z) -
                          s.apply(CIRC, b, y, s.apply(CIRC, a, x, z)) +
                          s.apply(CIRC, a, s.apply(CIRC, b, y, x), z) -
                          s.apply(CIRC, a, s.apply(ASTAR, b, x, y), z) +
                          s.apply(CIRC, b, s.apply(ASTAR, a, y, x), z);
               }},
            Id{"mplie4",
               [](const S& s, const Str& a, const Str& b, const E& x, const E& y, const E& z) {
                   return s.apply(CIRC, a, x, s.apply(ASTAR, b, y, z)) -
                          s.apply(CIRC, a, x, s.apply(ASTAR, b, z, y)) -
                          s.apply(ASTAR, b, s.apply(CIRC, a, x, y), z) +
                          s.apply(ASTAR, b, z, s.apply(CIRC, a, x, y)) -
                          s.apply(ASTAR, b, y, s.apply(CIRC, a, x, z)) +
                          s.apply(ASTAR, b, s.apply(CIRC, a, x, z), y);
               }},
        };
        return set;
    }

    throw config_error("unknown axiom set '" + name + "'");
}

} // namespace matchbox
