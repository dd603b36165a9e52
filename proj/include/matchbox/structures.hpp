#pragma once

#include <vector>

#include "matchbox/engine.hpp"
#include "matchbox/freedend.hpp"
#include "matchbox/prelie.hpp"
#include "matchbox/rbfamily.hpp"

namespace matchbox {

// Canonical example structures. The CLI's --structure names resolve here, and
// the test suites drive the same objects.

// Free matching dendriform algebra on decorated typed planar binary trees,
// with prec/succ and the bullet sum. Inputs are validated against (D, Omega).
OpStructure<DendElem> make_free_dend(const Alphabet& dec, const Alphabet& omega);

// Rooted-tree structure with the grafting pre-Lie product.
OpStructure<PreLieElem> make_rooted_prelie(const Alphabet& dec, const Alphabet& omega);

// Basis pools: all trees with 1..max_vertices vertices as basis elements.
std::vector<Pbt> pbt_keys(const Alphabet& dec, const Alphabet& omega, int max_vertices);
std::vector<RootedTree> rooted_keys(const Alphabet& dec, const Alphabet& omega, int max_vertices);
std::vector<DendElem> pbt_basis_pool(const Alphabet& dec, const Alphabet& omega, int max_vertices);
std::vector<PreLieElem> rooted_basis_pool(const Alphabet& dec, const Alphabet& omega,
                                          int max_vertices);

// Carrier samplers for the random engine modes.
Sampler<Poly> poly_sampler(int max_degree = 4, long long bound = 3);
Sampler<SeqN> seqn_sampler(std::size_t n, long long bound = 3);
Sampler<Mat> mat_sampler(std::size_t dim, long long bound = 3);

// Default example families: integration against kernels {a: 1, b: t} on
// Q[x]; scaled running sums on Q^6 with scalars {a: 1/2, b: -1/3}; and the
// first nonzero pair found by the polarized AYBE search over the support
// {E12 (x) E11, E12 (x) E12} with grid {-1, 0, 1} at weight 0.
RBFamily<Poly> default_kernel_family(const Alphabet& omega);
RBFamily<SeqN> default_running_sum_family(const Alphabet& omega, std::size_t n = 6);
RBFamily<Mat> default_paybe_family(const Alphabet& omega, std::size_t dim = 2);

} // namespace matchbox
