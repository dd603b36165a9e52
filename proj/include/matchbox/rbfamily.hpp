#pragma once

#include <functional>
#include <map>
#include <string>

#include "matchbox/alphabet.hpp"
#include "matchbox/engine.hpp"
#include "matchbox/poly.hpp"
#include "matchbox/seqn.hpp"
#include "matchbox/tensor.hpp"

namespace matchbox {

// A family of linear operators P_w on an associative carrier, candidate for
// the matching Rota-Baxter equation of weight (lambda_w):
//
//   P_a(x) P_b(y) = P_a(x P_b(y)) + P_b(P_a(x) y) + lambda_b P_a(x y).
//
// `bracket` defaults to the commutator of `mul` and is what the Lie-side
// checks and transforms use.
template <typename E>
struct RBFamily {
    std::string name;
    Alphabet omega;
    std::function<E(const E&, const E&)> mul;
    std::function<E(const E&, const E&)> bracket; // defaulted to commutator by makers
    std::map<std::string, std::function<E(const E&)>> P;
    std::map<std::string, Rational> weights;

    E apply(const std::string& w, const E& x) const {
        const auto it = P.find(w);
        if (it == P.end())
            throw missing_operation("family '" + name + "' has no operator for index '" + w + "'");
        return it->second(x);
    }

    Rational weight(const std::string& w) const {
        const auto it = weights.find(w);
        if (it == weights.end())
            throw missing_operation("family '" + name + "' has no weight for index '" + w + "'");
        return it->second;
    }
};

template <typename E>
void set_commutator_bracket(RBFamily<E>& f) {
    f.bracket = [mul = f.mul](const E& x, const E& y) { return mul(x, y) - mul(y, x); };
}

template <typename E>
E rb_residual(const RBFamily<E>& f, const std::string& a, const std::string& b, const E& x,
              const E& y) {
    const E pby = f.apply(b, y);
    const E pax = f.apply(a, x);
    return f.mul(pax, pby) - f.apply(a, f.mul(x, pby)) - f.apply(b, f.mul(pax, y)) -
           f.weight(b) * f.apply(a, f.mul(x, y));
}

// Same identity with the bracket in place of the product.
template <typename E>
E rb_lie_residual(const RBFamily<E>& f, const std::string& a, const std::string& b, const E& x,
                  const E& y) {
    const E pby = f.apply(b, y);
    const E pax = f.apply(a, x);
    return f.bracket(pax, pby) - f.apply(a, f.bracket(x, pby)) - f.apply(b, f.bracket(pax, y)) -
           f.weight(b) * f.apply(a, f.bracket(x, y));
}

namespace detail {

template <typename E, typename Residual>
Verdict check_rb_impl(const RBFamily<E>& f, const Sampler<E>& sample, const CheckOptions& opt,
                      const std::string& identity, Residual&& residual) {
    const std::size_t m = f.omega.size();
    const Rng root(opt.seed);
    Verdict v;
    v.mode = Mode::Random;
    v.seed = opt.seed;
    const std::uint64_t best =
        sweep_cells(m * m, opt.trials, opt.threads, [&](std::size_t c) -> std::uint64_t {
            const std::string& a = f.omega.symbols()[c / m];
            const std::string& b = f.omega.symbols()[c % m];
            Rng rng = root.fork(c);
            for (std::uint64_t t = 0; t < opt.trials; ++t) {
                const E x = sample(rng);
                const E y = sample(rng);
                if (!residual(f, a, b, x, y).is_zero()) return t;
            }
            return knofail;
        });
    if (best == knofail) {
        v.pass = true;
        v.trials = m * m * opt.trials;
    } else {
        v.pass = false;
        v.trials = best + 1;
        const std::size_t c = static_cast<std::size_t>(best / opt.trials);
        const std::uint64_t pos = best % opt.trials;
        const std::string& a = f.omega.symbols()[c / m];
        const std::string& b = f.omega.symbols()[c % m];
        Rng rng = root.fork(c);
        E x = sample(rng), y = sample(rng);
        for (std::uint64_t t = 0; t < pos; ++t) {
            x = sample(rng);
            y = sample(rng);
        }
        const E r = residual(f, a, b, x, y);
        v.witness = Witness{identity, a, b, x.encode(), y.encode(), "", r.encode()};
    }
    return v;
}

} // namespace detail

// Random pair check of the matching Rota-Baxter identity (associative form).
template <typename E>
Verdict check_rb(const RBFamily<E>& f, const Sampler<E>& sample, const CheckOptions& opt = {}) {
    return detail::check_rb_impl(f, sample, opt, "rb",
                                 [](const RBFamily<E>& g, const std::string& a,
                                    const std::string& b, const E& x, const E& y) {
                                     return rb_residual(g, a, b, x, y);
                                 });
}

// Lie form, using the family bracket.
template <typename E>
Verdict check_rb_lie(const RBFamily<E>& f, const Sampler<E>& sample, const CheckOptions& opt = {}) {
    return detail::check_rb_impl(f, sample, opt, "rb-lie",
                                 [](const RBFamily<E>& g, const std::string& a,
                                    const std::string& b, const E& x, const E& y) {
                                     return rb_lie_residual(g, a, b, x, y);
                                 });
}

// ---------------------------------------------------------------------------
// Family constructors.

// P_w(f) = integral from 0 of k_w * f on Q[x]; weight 0 for every kernel.
inline RBFamily<Poly> make_kernel_family(const std::map<std::string, Poly>& kernels) {
    if (kernels.empty()) throw config_error("kernel family needs at least one kernel");
    std::vector<std::string> syms;
    for (const auto& [w, k] : kernels) {
        (void)k;
        syms.push_back(w);
    }
    RBFamily<Poly> f;
    f.name = "kernel-family";
    f.omega = Alphabet(std::move(syms));
    require_omega(f.omega);
    f.mul = [](const Poly& x, const Poly& y) { return x * y; };
    for (const auto& [w, k] : kernels) {
        f.P[w] = [k](const Poly& x) { return kernel_integral(x, k); };
        f.weights[w] = Rational(0);
    }
    set_commutator_bracket(f);
    return f;
}

// Family of scalar multiples of one base operator: P_w = c_w P, of weight
// c_w * lambda0. The base (P, lambda0) must itself be Rota-Baxter.
template <typename E>
RBFamily<E> scaled_family(std::function<E(const E&)> base, const Rational& lambda0,
                          const std::map<std::string, Rational>& scalars,
                          std::function<E(const E&, const E&)> mul, const std::string& name) {
    if (scalars.empty()) throw config_error("scaled family needs at least one scalar");
    std::vector<std::string> syms;
    for (const auto& [w, c] : scalars) {
        (void)c;
        syms.push_back(w);
    }
    RBFamily<E> f;
    f.name = name;
    f.omega = Alphabet(std::move(syms));
    require_omega(f.omega);
    f.mul = std::move(mul);
    for (const auto& [w, c] : scalars) {
        f.P[w] = [base, c](const E& x) { return c * base(x); };
        f.weights[w] = c * lambda0;
    }
    set_commutator_bracket(f);
    return f;
}

// Scaled copies of the running-sum operator on Q^n; the base weight is
// measured, not assumed.
inline RBFamily<SeqN> make_running_sum_family(std::size_t n,
                                              const std::map<std::string, Rational>& scalars) {
    const Rational lambda0 = running_sum_weight(n);
    return scaled_family<SeqN>([](const SeqN& a) { return running_sum(a); }, lambda0, scalars,
                               [](const SeqN& a, const SeqN& b) { return a * b; },
                               "running-sum-family");
}

// New index set I with P_i = sum of table[i][w] * P_w; the matching identity
// survives with weights lambda_i = sum of table[i][w] * lambda_w.
template <typename E>
RBFamily<E> combine_family(const RBFamily<E>& f,
                           const std::map<std::string, std::map<std::string, Rational>>& table) {
    if (table.empty()) throw config_error("combination table needs at least one row");
    std::vector<std::string> syms;
    for (const auto& [i, row] : table) {
        (void)row;
        syms.push_back(i);
    }
    RBFamily<E> g;
    g.name = f.name + "+combine";
    g.omega = Alphabet(std::move(syms));
    require_omega(g.omega);
    g.mul = f.mul;
    g.bracket = f.bracket;
    for (const auto& [i, row] : table) {
        for (const auto& [w, c] : row) {
            (void)c;
            if (!f.omega.contains(w))
                throw alphabet_mismatch("combination row '" + i + "' references unknown index '" +
                                        w + "'");
        }
        g.P[i] = [ops = f.P, row](const E& x) {
            E out = Rational(0) * x; // zero of the carrier, shape-compatible with x
            for (const auto& [w, c] : row) out += c * ops.at(w)(x);
            return out;
        };
        Rational wt(0);
        for (const auto& [w, c] : row) wt += c * f.weight(w);
        g.weights[i] = wt;
    }
    return g;
}

// Matrix family from a verified collection of polarized AYBE solutions:
// P_w(x) = sum of u x v over the pairs of r_w. Every ordered pair must pass
// the pair residual and the swap condition (PreconditionFailed otherwise);
// the common weight is the AYBE weight.
inline RBFamily<Mat> make_paybe_family(const std::map<std::string, MatTensor>& tensors,
                                       const Rational& weight) {
    if (tensors.empty()) throw config_error("paybe family needs at least one tensor");
    std::size_t dim = 0;
    std::vector<std::string> syms;
    for (const auto& [w, r] : tensors) {
        syms.push_back(w);
        if (dim == 0) dim = r.dim();
        if (r.dim() != dim) throw dimension_mismatch("paybe tensors have mixed dimensions");
    }
    for (const auto& [wa, ra] : tensors)
        for (const auto& [wb, rb] : tensors) {
            if (!paybe_residual(ra, rb, weight).is_zero())
                throw precondition_failed("pair (" + wa + ", " + wb +
                                          ") fails the polarized AYBE residual");
            if (!swap_condition(ra, rb))
                throw precondition_failed("pair (" + wa + ", " + wb +
                                          ") fails the swap condition");
        }
    RBFamily<Mat> f;
    f.name = "paybe-family";
    f.omega = Alphabet(std::move(syms));
    require_omega(f.omega);
    f.mul = [](const Mat& x, const Mat& y) { return x * y; };
    for (const auto& [w, r] : tensors) {
        f.P[w] = [r](const Mat& x) { return tensor_apply(r, x); };
        f.weights[w] = weight;
    }
    set_commutator_bracket(f);
    return f;
}

} // namespace matchbox
