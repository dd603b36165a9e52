#include "matchbox/service.hpp"

#include <algorithm>
#include <sstream>

#include "matchbox/axioms.hpp"
#include "matchbox/engine.hpp"
#include "matchbox/errors.hpp"
#include "matchbox/freedend.hpp"
#include "matchbox/pipeline.hpp"
#include "matchbox/prelie.hpp"
#include "matchbox/structures.hpp"
#include "matchbox/tensor.hpp"
#include "matchbox/transforms.hpp"

namespace matchbox {

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) out.push_back(item);
    return out;
}

Json service_enumerate(const EnumerateRequest& req) {
    const Alphabet dec = Alphabet::parse(req.dec);
    const Alphabet omega = Alphabet::parse(req.omega);
    require_omega(omega);
    if (req.n < 0) throw config_error("tree size must be nonnegative");

    Json report;
    report["kind"] = req.kind;
    report["n"] = req.n;
    report["dec"] = dec.symbols();
    report["omega"] = omega.symbols();
    std::vector<std::string> lines;

    if (req.kind == "pbt") {
        const Integer predicted = count_pbt(req.n, dec.size(), omega.size());
        if (predicted > Integer(req.cap))
            throw cap_exceeded("pbt enumeration of size " + predicted.str() + " exceeds cap " +
                               std::to_string(req.cap));
        for (const Pbt& t : enumerate_pbt(req.n, dec, omega)) lines.push_back(t.encode());
        report["formula"] = predicted.str();
    } else if (req.kind == "rooted") {
        if (req.n > 8)
            throw cap_exceeded("rooted enumeration capped at n = 8, got " + std::to_string(req.n));
        const std::vector<RootedTree> trees = enumerate_rooted(req.n, dec, omega);
        if (trees.size() > req.cap)
            throw cap_exceeded("rooted enumeration of size " + std::to_string(trees.size()) +
                               " exceeds cap " + std::to_string(req.cap));
        for (const RootedTree& t : trees) lines.push_back(t.encode());
    } else {
        throw config_error("kind must be pbt or rooted");
    }

    report["count"] = lines.size();
    report["trees"] = lines;
    return report;
}

Json service_dend_mul(const MulRequest& req) {
    const Alphabet dec = Alphabet::parse(req.dec);
    const Alphabet omega = Alphabet::parse(req.omega);
    const OpStructure<DendElem> s = make_free_dend(dec, omega);
    DendElem lhs, rhs;
    lhs.add_term(parse_pbt(req.lhs), Rational(1));
    rhs.add_term(parse_pbt(req.rhs), Rational(1));
    const OpName op = op_from_token(req.op);
    if (op != OpName::Prec && op != OpName::Succ && op != OpName::Bullet)
        throw config_error("dend mul supports prec, succ and bullet");
    const DendElem prod = s.apply(op, req.idx, lhs, rhs);
    Json report = lincomb_json(prod);
    report["encoded"] = prod.encode();
    return report;
}

Json service_prelie_mul(const MulRequest& req) {
    const Alphabet dec = Alphabet::parse(req.dec);
    const Alphabet omega = Alphabet::parse(req.omega);
    const OpStructure<PreLieElem> s = make_rooted_prelie(dec, omega);
    PreLieElem lhs, rhs;
    lhs.add_term(parse_rooted(req.lhs, omega), Rational(1));
    rhs.add_term(parse_rooted(req.rhs, omega), Rational(1));
    const PreLieElem prod = s.apply(OpName::Star, req.idx, lhs, rhs);
    Json report = lincomb_json(prod);
    report["encoded"] = prod.encode();
    return report;
}

namespace {

template <typename E>
OpStructure<E> apply_structure_step(const OpStructure<E>& s, const std::string& step) {
    if (step == "prelie") return dendriform_to_prelie(s);
    if (step == "postlie") return tridendriform_to_postlie(s);
    if (step == "assoc") return split_to_assoc(s);
    if (step == "antisym") return antisymmetrize(s);
    throw config_error("derive step '" + step + "' cannot follow a split structure");
}

template <typename E>
ServiceResult check_opstructure(OpStructure<E> s, const std::vector<std::string>& derive,
                                const std::vector<E>* pool, const Sampler<E>& sampler,
                                const CheckRequest& req) {
    for (const std::string& step : derive) s = apply_structure_step(s, step);
    const AxiomSet<E> set = axiom_set<E>(req.axioms);
    Verdict v;
    if (req.exhaustive) {
        if (!pool)
            throw config_error("exhaustive mode needs a finite basis pool; structure '" + s.name +
                               "' has none");
        v = check_exhaustive(s, set, *pool, req.threads);
    } else {
        v = check_random(s, set, sampler, CheckOptions{req.seed, req.trials, req.threads});
    }
    Json report = check_report(s.name, set.name, v);
    if (!s.provenance.empty()) report["provenance"] = s.provenance;
    return ServiceResult{std::move(report), v.pass};
}

template <typename E>
ServiceResult check_family(const RBFamily<E>& fam, const Sampler<E>& sampler,
                           const CheckRequest& req) {
    if (req.exhaustive)
        throw config_error("exhaustive mode is unavailable on infinite carriers; use random trials");
    if (req.derive.empty()) {
        Verdict v;
        if (req.axioms == "matching-rb")
            v = check_rb(fam, sampler, CheckOptions{req.seed, req.trials, req.threads});
        else if (req.axioms == "matching-rb-lie")
            v = check_rb_lie(fam, sampler, CheckOptions{req.seed, req.trials, req.threads});
        else
            throw config_error("family structures support axioms matching-rb or matching-rb-lie"
                               " (other sets need a derive chain)");
        return ServiceResult{check_report(fam.name, req.axioms, v), v.pass};
    }
    OpStructure<E> s;
    const std::string& first = req.derive.front();
    if (first == "dend")
        s = rb_to_dendriform(fam);
    else if (first == "tridend")
        s = rb_to_tridendriform(fam);
    else if (first == "rblie-prelie")
        s = rblie_to_prelie(fam);
    else
        throw config_error("family derive chains start with dend, tridend or rblie-prelie");
    return check_opstructure<E>(std::move(s),
                                std::vector<std::string>(req.derive.begin() + 1, req.derive.end()),
                                nullptr, sampler, req);
}

} // namespace

ServiceResult service_check(const CheckRequest& req) {
    const Alphabet omega = Alphabet::parse(req.omega);
    require_omega(omega);
    if (req.max_vertices < 1) throw config_error("max vertices must be at least 1");

    if (req.structure == "free-dend") {
        const Alphabet dec = Alphabet::parse(req.dec);
        const std::vector<DendElem> pool = pbt_basis_pool(dec, omega, req.max_vertices);
        return check_opstructure<DendElem>(make_free_dend(dec, omega), req.derive, &pool,
                                           pool_sampler(pbt_keys(dec, omega, req.max_vertices)),
                                           req);
    }
    if (req.structure == "rooted-prelie") {
        const Alphabet dec = Alphabet::parse(req.dec);
        const std::vector<PreLieElem> pool = rooted_basis_pool(dec, omega, req.max_vertices);
        return check_opstructure<PreLieElem>(make_rooted_prelie(dec, omega), req.derive, &pool,
                                             pool_sampler(rooted_keys(dec, omega,
                                                                      req.max_vertices)),
                                             req);
    }
    if (req.structure == "kernel-family")
        return check_family<Poly>(default_kernel_family(omega), poly_sampler(), req);
    if (req.structure == "running-sum-family")
        return check_family<SeqN>(default_running_sum_family(omega, req.len),
                                  seqn_sampler(req.len), req);
    if (req.structure == "paybe-family")
        return check_family<Mat>(default_paybe_family(omega, req.dim), mat_sampler(req.dim), req);
    throw config_error("unknown structure '" + req.structure +
                       "'; expected free-dend, rooted-prelie, kernel-family, running-sum-family"
                       " or paybe-family");
}

ServiceResult service_pipeline(const PipelineRequest& req) {
    const Alphabet omega = Alphabet::parse(req.omega);
    require_omega(omega);
    for (const std::string& s : req.steps) {
        const auto& names = pipeline_step_names();
        if (std::find(names.begin(), names.end(), s) == names.end())
            throw config_error("unknown pipeline step '" + s + "'");
    }
    const CheckOptions opts{req.seed, req.trials, req.threads};
    PipelineResult r;
    if (req.from == "kernel-family")
        r = run_pipeline(default_kernel_family(omega), req.steps, poly_sampler(), opts);
    else if (req.from == "running-sum-family")
        r = run_pipeline(default_running_sum_family(omega, req.len), req.steps,
                         seqn_sampler(req.len), opts);
    else if (req.from == "paybe-family")
        r = run_pipeline(default_paybe_family(omega, req.dim), req.steps, mat_sampler(req.dim),
                         opts);
    else
        throw config_error("pipeline source must be kernel-family, running-sum-family or"
                           " paybe-family");
    return ServiceResult{std::move(r.report), r.passed};
}

Json service_aybe_search(const AybeSearchRequest& req) {
    AybeSearchConfig cfg;
    cfg.dim = req.dim;
    cfg.weight = parse_rational(req.weight);
    cfg.cap = req.cap;
    for (const std::string& term : split_csv(req.support)) {
        const auto x = term.find('x');
        if (x == std::string::npos)
            throw config_error("support term '" + term + "' must look like E12xE11");
        cfg.support.emplace_back(parse_matrix_unit(term.substr(0, x), req.dim),
                                 parse_matrix_unit(term.substr(x + 1), req.dim));
    }
    for (const std::string& g : split_csv(req.grid)) cfg.grid.push_back(parse_rational(g));

    Json report;
    report["dim"] = cfg.dim;
    report["weight"] = to_string(cfg.weight);
    if (req.family) {
        Json jpairs = Json::array();
        for (const auto& [r, s] : aybe_search_pairs(cfg))
            jpairs.push_back({{"r", mattensor_json(r)}, {"s", mattensor_json(s)}});
        report["pairs"] = jpairs;
    } else {
        Json jsols = Json::array();
        for (const auto& r : aybe_search(cfg)) jsols.push_back(mattensor_json(r));
        report["solutions"] = jsols;
    }
    return report;
}

ServiceResult service_aybe_verify(std::size_t dim, const std::string& weight, const Json& r_json,
                                  const Json* s_json) {
    const Rational w = parse_rational(weight);
    const MatTensor r = mattensor_from_json(r_json, dim);
    Json report;
    report["dim"] = dim;
    report["weight"] = to_string(w);
    bool ok = paybe_residual(r, r, w).is_zero();
    report["aybe_r"] = ok;
    if (s_json) {
        const MatTensor s = mattensor_from_json(*s_json, dim);
        const bool aybe_s = paybe_residual(s, s, w).is_zero();
        const bool pair_rs = paybe_residual(r, s, w).is_zero();
        const bool pair_sr = paybe_residual(s, r, w).is_zero();
        const bool swap = swap_condition(r, s);
        report["aybe_s"] = aybe_s;
        report["pair_rs"] = pair_rs;
        report["pair_sr"] = pair_sr;
        report["swap"] = swap;
        ok = ok && aybe_s && pair_rs && pair_sr && swap;
    }
    report["verdict"] = ok ? "pass" : "fail";
    return ServiceResult{std::move(report), ok};
}

} // namespace matchbox
