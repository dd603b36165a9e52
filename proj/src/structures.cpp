#include "matchbox/structures.hpp"

namespace matchbox {

namespace {

void require_valid_keys(const DendElem& v, const Alphabet& dec, const Alphabet& omega,
                        const std::string& who) {
    for (const auto& [t, c] : v.terms()) {
        (void)c;
        if (!validate_pbt(t, dec, omega))
            throw alphabet_mismatch(who + ": tree " + t.encode() +
                                    " uses symbols outside the declared alphabets");
    }
}

} // namespace

OpStructure<DendElem> make_free_dend(const Alphabet& dec, const Alphabet& omega) {
    require_omega(omega);
    OpStructure<DendElem> s;
    s.name = "free-dend";
    s.omega = omega;
    s.provenance = {"free-dend"};
    const auto wrap = [dec, omega](DendElem (*op)(const DendElem&, const DendElem&,
                                                  const std::string&)) {
        return [dec, omega, op](const std::string& w, const DendElem& x, const DendElem& y) {
            require_valid_keys(x, dec, omega, "free-dend");
            require_valid_keys(y, dec, omega, "free-dend");
            return op(x, y, w);
        };
    };
    s.set_op(OpName::Prec, wrap(&dend_prec));
    s.set_op(OpName::Succ, wrap(&dend_succ));
    s.set_op(OpName::Bullet, wrap(&dend_bullet));
    return s;
}

OpStructure<PreLieElem> make_rooted_prelie(const Alphabet& dec, const Alphabet& omega) {
    require_omega(omega);
    OpStructure<PreLieElem> s;
    s.name = "rooted-prelie";
    s.omega = omega;
    s.provenance = {"rooted-prelie"};
    s.set_op(OpName::Star,
             [dec, omega](const std::string& w, const PreLieElem& x, const PreLieElem& y) {
                 for (const auto* v : {&x, &y})
                     for (const auto& [t, c] : v->terms()) {
                         (void)c;
                         if (!validate_rooted(t, dec, omega))
                             throw alphabet_mismatch("rooted-prelie: tree " + t.encode() +
                                                     " uses symbols outside the declared alphabets");
                     }
                 return prelie_star(x, y, w, omega);
             });
    return s;
}

std::vector<Pbt> pbt_keys(const Alphabet& dec, const Alphabet& omega, int max_vertices) {
    std::vector<Pbt> keys;
    for (int n = 1; n <= max_vertices; ++n)
        for (const auto& t : enumerate_pbt(n, dec, omega)) keys.push_back(t);
    return keys;
}

std::vector<RootedTree> rooted_keys(const Alphabet& dec, const Alphabet& omega, int max_vertices) {
    std::vector<RootedTree> keys;
    for (int n = 1; n <= max_vertices; ++n)
        for (const auto& t : enumerate_rooted(n, dec, omega)) keys.push_back(t);
    return keys;
}

std::vector<DendElem> pbt_basis_pool(const Alphabet& dec, const Alphabet& omega,
                                     int max_vertices) {
    std::vector<DendElem> pool;
    for (const auto& t : pbt_keys(dec, omega, max_vertices)) pool.push_back(DendElem::basis(t));
    return pool;
}

std::vector<PreLieElem> rooted_basis_pool(const Alphabet& dec, const Alphabet& omega,
                                          int max_vertices) {
    std::vector<PreLieElem> pool;
    for (const auto& t : rooted_keys(dec, omega, max_vertices))
        pool.push_back(PreLieElem::basis(t));
    return pool;
}

Sampler<Poly> poly_sampler(int max_degree, long long bound) {
    return [max_degree, bound](Rng& rng) {
        std::vector<Rational> coeffs(static_cast<std::size_t>(max_degree) + 1, Rational(0));
        // Sparse-ish: each coefficient present with probability 1/2.
        for (auto& c : coeffs)
            if (rng.below(2)) c = rng.rational(bound, 3);
        return Poly(std::move(coeffs));
    };
}

Sampler<SeqN> seqn_sampler(std::size_t n, long long bound) {
    return [n, bound](Rng& rng) {
        std::vector<Rational> v(n);
        for (auto& x : v) x = rng.rational(bound, 3);
        return SeqN(std::move(v));
    };
}

Sampler<Mat> mat_sampler(std::size_t dim, long long bound) {
    return [dim, bound](Rng& rng) {
        std::vector<Rational> entries(dim * dim);
        for (auto& x : entries) x = rng.rational(bound, 3);
        return Mat(dim, std::move(entries));
    };
}

RBFamily<Poly> default_kernel_family(const Alphabet& omega) {
    if (omega.size() < 1) throw config_error("kernel family needs a nonempty alphabet");
    std::map<std::string, Poly> kernels;
    // First index integrates against 1, second against t, then t^2, ...
    for (std::size_t i = 0; i < omega.size(); ++i)
        kernels[omega.symbols()[i]] = Poly::monomial(static_cast<int>(i));
    return make_kernel_family(kernels);
}

RBFamily<SeqN> default_running_sum_family(const Alphabet& omega, std::size_t n) {
    std::map<std::string, Rational> scalars;
    // 1/2, -1/3, 1/4, ... : distinct scalars so distinct indices have
    // genuinely different operators and weights.
    for (std::size_t i = 0; i < omega.size(); ++i) {
        const long long den = static_cast<long long>(i) + 2;
        scalars[omega.symbols()[i]] = Rational(Integer(i % 2 == 0 ? 1 : -1), Integer(den));
    }
    return make_running_sum_family(n, scalars);
}

RBFamily<Mat> default_paybe_family(const Alphabet& omega, std::size_t dim) {
    AybeSearchConfig cfg;
    cfg.dim = dim;
    cfg.support = {{Mat::unit(dim, 1, 2), Mat::unit(dim, 1, 1)},
                   {Mat::unit(dim, 1, 2), Mat::unit(dim, 1, 2)}};
    cfg.grid = {Rational(-1), Rational(0), Rational(1)};
    cfg.weight = Rational(0);
    const auto pairs = aybe_search_pairs(cfg);
    // First pair with two distinct nonzero members, so the family is not
    // degenerate; the search order makes the choice deterministic.
    for (const auto& [r, s] : pairs) {
        if (r.is_zero() || s.is_zero() || r.same_tensor(s)) continue;
        std::map<std::string, MatTensor> tensors;
        if (omega.size() < 2) throw config_error("paybe family needs at least two indices");
        tensors[omega.symbols()[0]] = r;
        tensors[omega.symbols()[1]] = s;
        // Remaining indices reuse scaled copies of r, still pairwise valid.
        for (std::size_t i = 2; i < omega.size(); ++i) {
            std::vector<std::pair<Mat, Mat>> scaled;
            for (const auto& [u, v] : r.pairs())
                scaled.emplace_back(Rational(static_cast<long long>(i)) * u, v);
            tensors[omega.symbols()[i]] = MatTensor(dim, std::move(scaled));
        }
        return make_paybe_family(tensors, cfg.weight);
    }
    throw Error("Internal", "default polarized AYBE search found no usable pair");
}

} // namespace matchbox
