#pragma once

#include <string>

#include "matchbox/lincomb.hpp"
#include "matchbox/pbt.hpp"

namespace matchbox {

// Element of the free matching dendriform algebra on decorated typed planar
// binary trees: a Q-linear combination of trees with >= 1 internal vertex.
using DendElem = LinComb<Pbt>;

// The structural recursion, on basis trees, for an index t in Omega or the
// reserved "e". Writing S = S^l v_{a,alpha,beta} S^r and U = U^l v_{b,gamma,delta} U^r:
//
//   S prec_t U = S^l v_{a,alpha,beta} (S^r prec_t U) + S^l v_{a,alpha,t} (S^r succ_beta U)
//   S succ_t U = (S prec_gamma U^l) v_{b,t,delta} U^r + (S succ_t U^l) v_{b,gamma,delta} U^r
//
// anchored at the leaf by
//
//   | succ_t U = U      S prec_t | = S      | prec_t U = 0      S succ_t | = 0
//
// The index degenerates to "e" exactly when the recursion peels off an empty
// edge, and the leaf-leaf case never arises (each rule keeps one argument
// nonempty). Both facts are asserted, not handled.
DendElem dend_prec_basis(const Pbt& s, const Pbt& u, const std::string& t);
DendElem dend_succ_basis(const Pbt& s, const Pbt& u, const std::string& t);

// Bilinear extensions; `omega` must be a symbol of the type alphabet (the
// callers validate membership, these validate only that it is not "e").
DendElem dend_prec(const DendElem& a, const DendElem& b, const std::string& omega);
DendElem dend_succ(const DendElem& a, const DendElem& b, const std::string& omega);

// x bullet_w y = x prec_w y + x succ_w y; matching-associative only in the
// compatible sense, which is what makes it worth testing.
DendElem dend_bullet(const DendElem& a, const DendElem& b, const std::string& omega);

} // namespace matchbox
