#pragma once

#include <string>

#include "matchbox/opstructure.hpp"
#include "matchbox/rbfamily.hpp"

namespace matchbox {

// Theorem-backed constructions between the structure kinds. Each transform
// stamps its provenance on the result. Overloads taking a sampler verify the
// input's defining identities on seeded random triples first and throw
// PreconditionFailed on a counterexample; the plain overloads trust their
// input (the pipeline always runs the checked form).

namespace detail {

inline std::string witness_summary(const Witness& w) {
    return w.identity + " fails at alpha=" + w.alpha + ", beta=" + w.beta + ", x=" + w.x +
           ", y=" + w.y + (w.z.empty() ? "" : ", z=" + w.z);
}

template <typename E>
void require_pass(const std::string& transform, const Verdict& v) {
    if (v.pass) return;
    throw precondition_failed(transform + ": input check failed: " + witness_summary(*v.witness));
}

template <typename E>
OpStructure<E> derived(const OpStructure<E>& s, const std::string& step) {
    OpStructure<E> out;
    out.name = s.name + "+" + step;
    out.omega = s.omega;
    out.provenance = s.provenance;
    out.provenance.push_back(step);
    return out;
}

} // namespace detail

struct TransformOptions {
    std::uint64_t seed = 7;
    std::uint64_t trials = 50;
};

// x prec_w y = x P_w(y) + lambda_w x y,  x succ_w y = P_w(x) y.
// Works for any weights; at weight zero prec loses its lambda term.
template <typename E>
OpStructure<E> rb_to_dendriform(const RBFamily<E>& f) {
    OpStructure<E> s;
    s.name = f.name + "+dend";
    s.omega = f.omega;
    s.provenance = {f.name, "rb_to_dendriform"};
    s.set_op(OpName::Prec, [mul = f.mul, weights = f.weights,
                            P = f.P](const std::string& w, const E& x, const E& y) {
        E out = mul(x, P.at(w)(y));
        out += weights.at(w) * mul(x, y);
        return out;
    });
    s.set_op(OpName::Succ, [mul = f.mul, P = f.P](const std::string& w, const E& x, const E& y) {
        return mul(P.at(w)(x), y);
    });
    return s;
}

template <typename E>
OpStructure<E> rb_to_dendriform(const RBFamily<E>& f, const Sampler<E>& sample,
                                const TransformOptions& opt = {}) {
    detail::require_pass<E>("rb_to_dendriform", check_rb(f, sample, {opt.seed, opt.trials, 0}));
    return rb_to_dendriform(f);
}

// x prec_w y = x P_w(y),  x succ_w y = P_w(x) y,  x dot_w y = lambda_w x y.
template <typename E>
OpStructure<E> rb_to_tridendriform(const RBFamily<E>& f) {
    OpStructure<E> s;
    s.name = f.name + "+tridend";
    s.omega = f.omega;
    s.provenance = {f.name, "rb_to_tridendriform"};
    s.set_op(OpName::Prec, [mul = f.mul, P = f.P](const std::string& w, const E& x, const E& y) {
        return mul(x, P.at(w)(y));
    });
    s.set_op(OpName::Succ, [mul = f.mul, P = f.P](const std::string& w, const E& x, const E& y) {
        return mul(P.at(w)(x), y);
    });
    s.set_op(OpName::Dot,
             [mul = f.mul, weights = f.weights](const std::string& w, const E& x, const E& y) {
                 return weights.at(w) * mul(x, y);
             });
    return s;
}

template <typename E>
OpStructure<E> rb_to_tridendriform(const RBFamily<E>& f, const Sampler<E>& sample,
                                   const TransformOptions& opt = {}) {
    detail::require_pass<E>("rb_to_tridendriform", check_rb(f, sample, {opt.seed, opt.trials, 0}));
    return rb_to_tridendriform(f);
}

// x star_w y = x succ_w y - y prec_w x.
template <typename E>
OpStructure<E> dendriform_to_prelie(const OpStructure<E>& s) {
    if (!s.has_op(OpName::Prec) || !s.has_op(OpName::Succ))
        throw missing_operation("dendriform_to_prelie needs prec and succ");
    OpStructure<E> out = detail::derived(s, "dendriform_to_prelie");
    out.set_op(OpName::Star, [s](const std::string& w, const E& x, const E& y) {
        return s.apply(OpName::Succ, w, x, y) - s.apply(OpName::Prec, w, y, x);
    });
    return out;
}

template <typename E>
OpStructure<E> dendriform_to_prelie(const OpStructure<E>& s, const Sampler<E>& sample,
                                    const TransformOptions& opt = {}) {
    detail::require_pass<E>(
        "dendriform_to_prelie",
        check_random(s, axiom_set<E>("matching-dendriform"), sample, {opt.seed, opt.trials, 0}));
    return dendriform_to_prelie(s);
}

// x assoc_star_w y = x dot_w y,  x circ_w y = x succ_w y - y prec_w x.
template <typename E>
OpStructure<E> tridendriform_to_postlie(const OpStructure<E>& s) {
    if (!s.has_op(OpName::Prec) || !s.has_op(OpName::Succ) || !s.has_op(OpName::Dot))
        throw missing_operation("tridendriform_to_postlie needs prec, succ and dot");
    OpStructure<E> out = detail::derived(s, "tridendriform_to_postlie");
    out.set_op(OpName::AssocStar, [s](const std::string& w, const E& x, const E& y) {
        return s.apply(OpName::Dot, w, x, y);
    });
    out.set_op(OpName::Circ, [s](const std::string& w, const E& x, const E& y) {
        return s.apply(OpName::Succ, w, x, y) - s.apply(OpName::Prec, w, y, x);
    });
    return out;
}

template <typename E>
OpStructure<E> tridendriform_to_postlie(const OpStructure<E>& s, const Sampler<E>& sample,
                                        const TransformOptions& opt = {}) {
    detail::require_pass<E>(
        "tridendriform_to_postlie",
        check_random(s, axiom_set<E>("matching-tridendriform"), sample, {opt.seed, opt.trials, 0}));
    return tridendriform_to_postlie(s);
}

// x star_w y = [P_w(x), y] on a weight-zero Rota-Baxter Lie family; rejects
// nonzero weights (the construction is specific to weight zero).
template <typename E>
OpStructure<E> rblie_to_prelie(const RBFamily<E>& f) {
    for (const auto& [w, lam] : f.weights)
        if (lam != 0)
            throw nonzero_weight("rblie_to_prelie requires weight zero, index '" + w + "' has " +
                                 to_string(lam));
    OpStructure<E> s;
    s.name = f.name + "+rblie-prelie";
    s.omega = f.omega;
    s.provenance = {f.name, "rblie_to_prelie"};
    s.set_op(OpName::Star, [bracket = f.bracket, P = f.P](const std::string& w, const E& x,
                                                          const E& y) {
        return bracket(P.at(w)(x), y);
    });
    return s;
}

template <typename E>
OpStructure<E> rblie_to_prelie(const RBFamily<E>& f, const Sampler<E>& sample,
                               const TransformOptions& opt = {}) {
    detail::require_pass<E>("rblie_to_prelie", check_rb_lie(f, sample, {opt.seed, opt.trials, 0}));
    return rblie_to_prelie(f);
}

// bullet_w = prec_w + succ_w (+ dot_w when present): the sum of a split
// structure, matching associative for tridendriform inputs and compatible
// associative for dendriform inputs.
template <typename E>
OpStructure<E> split_to_assoc(const OpStructure<E>& s) {
    if (!s.has_op(OpName::Prec) || !s.has_op(OpName::Succ))
        throw missing_operation("split_to_assoc needs prec and succ");
    OpStructure<E> out = detail::derived(s, "split_to_assoc");
    const bool with_dot = s.has_op(OpName::Dot);
    out.set_op(OpName::Bullet, [s, with_dot](const std::string& w, const E& x, const E& y) {
        E v = s.apply(OpName::Prec, w, x, y) + s.apply(OpName::Succ, w, x, y);
        if (with_dot) v += s.apply(OpName::Dot, w, x, y);
        return v;
    });
    return out;
}

template <typename E>
OpStructure<E> split_to_assoc(const OpStructure<E>& s, const Sampler<E>& sample,
                              const TransformOptions& opt = {}) {
    const std::string set_name =
        s.has_op(OpName::Dot) ? "matching-tridendriform" : "matching-dendriform";
    detail::require_pass<E>(
        "split_to_assoc", check_random(s, axiom_set<E>(set_name), sample, {opt.seed, opt.trials, 0}));
    return split_to_assoc(s);
}

// Bracket by antisymmetrizing the most structured product present:
// star (pre-Lie -> compatible Lie), assoc_star (associative PostLie ->
// PostLie: the circle product is kept), or bullet (associative -> Lie).
template <typename E>
OpStructure<E> antisymmetrize(const OpStructure<E>& s) {
    const OpName source = s.has_op(OpName::Star)        ? OpName::Star
                          : s.has_op(OpName::AssocStar) ? OpName::AssocStar
                          : s.has_op(OpName::Bullet)
                              ? OpName::Bullet
                              : throw missing_operation(
                                    "antisymmetrize needs star, assoc_star or bullet");
    OpStructure<E> out = detail::derived(s, "antisymmetrize");
    out.set_op(OpName::Bracket, [s, source](const std::string& w, const E& x, const E& y) {
        return s.apply(source, w, x, y) - s.apply(source, w, y, x);
    });
    if (source == OpName::AssocStar && s.has_op(OpName::Circ)) {
        out.set_op(OpName::Circ, [s](const std::string& w, const E& x, const E& y) {
            return s.apply(OpName::Circ, w, x, y);
        });
    }
    return out;
}

template <typename E>
OpStructure<E> antisymmetrize(const OpStructure<E>& s, const Sampler<E>& sample,
                              const TransformOptions& opt = {}) {
    const std::string set_name = s.has_op(OpName::Star)        ? "matching-prelie"
                                 : s.has_op(OpName::AssocStar) ? "matching-assoc-postlie"
                                                               : "compatible-associative";
    detail::require_pass<E>(
        "antisymmetrize", check_random(s, axiom_set<E>(set_name), sample, {opt.seed, opt.trials, 0}));
    return antisymmetrize(s);
}

// The axiom set a transform's output is expected to satisfy; the pipeline
// checks each stage against this.
inline std::string transform_target(const std::string& step, bool input_had_assoc_star) {
    if (step == "dend") return "matching-dendriform";
    if (step == "tridend") return "matching-tridendriform";
    if (step == "prelie" || step == "rblie-prelie") return "matching-prelie";
    if (step == "postlie") return "matching-assoc-postlie";
    if (step == "assoc") return "compatible-associative";
    if (step == "antisym") return input_had_assoc_star ? "matching-postlie" : "compatible-lie";
    throw config_error("unknown pipeline step '" + step + "'");
}

} // namespace matchbox
