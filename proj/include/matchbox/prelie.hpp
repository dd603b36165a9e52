#pragma once

#include <string>

#include "matchbox/lincomb.hpp"
#include "matchbox/rooted.hpp"

namespace matchbox {

using PreLieElem = LinComb<RootedTree>;

// Grafting product on decorated typed rooted trees:
//
//   T star_t U = sum over vertices v of U of (T grafted on v by a type-t edge).
//
// The left operand is attached below each vertex of the right operand; this
// orientation is the one under which the matching (left) pre-Lie identity
//   x *_a (y *_b z) - (x *_a y) *_b z = y *_b (x *_a z) - (y *_b x) *_a z
// holds on trees.  Distinct vertices can yield the same canonical tree; their
// contributions accumulate, so coefficients > 1 appear already for small
// symmetric trees.
PreLieElem prelie_star_basis(const RootedTree& t, const RootedTree& u,
                             const std::string& etype, const Alphabet& omega);

// Bilinear extension; etype must be a symbol of omega.
PreLieElem prelie_star(const PreLieElem& a, const PreLieElem& b,
                       const std::string& etype, const Alphabet& omega);

} // namespace matchbox
