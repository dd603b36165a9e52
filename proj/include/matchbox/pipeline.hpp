#pragma once

#include "matchbox/axioms.hpp"
#include "matchbox/engine.hpp"
#include "matchbox/errors.hpp"
#include "matchbox/jsonio.hpp"
#include "matchbox/rbfamily.hpp"
#include "matchbox/transforms.hpp"

#include <optional>
#include <string>
#include <vector>

namespace matchbox {

// Staged pipeline: verify the Rota-Baxter source, then apply splitting /
// antisymmetrisation steps one at a time, re-checking the advertised axiom
// set after every step. Runs fail fast; the report keeps one entry per stage
// actually executed.
struct PipelineResult {
    Json report;
    bool passed = false;
};

inline const std::vector<std::string>& pipeline_step_names() {
    static const std::vector<std::string> names = {
        "dend", "tridend", "prelie", "rblie-prelie", "postlie", "assoc", "antisym"};
    return names;
}

template <typename E>
PipelineResult run_pipeline(const RBFamily<E>& source,
                            const std::vector<std::string>& steps,
                            const Sampler<E>& sampler,
                            const CheckOptions& opts) {
    PipelineResult result;
    result.report["source"] = source.name;
    result.report["seed"] = opts.seed;
    result.report["trials"] = opts.trials;
    result.report["steps"] = steps;
    Json stages = Json::array();

    auto record = [&](const std::string& stage, const std::string& axioms, const Verdict& v) {
        Json entry;
        entry["stage"] = stage;
        entry["axioms"] = axioms;
        entry["verdict"] = verdict_json(v);
        stages.push_back(std::move(entry));
        return v.pass;
    };
    auto finish = [&](bool ok) {
        result.report["stages"] = std::move(stages);
        result.report["result"] = ok ? "pass" : "fail";
        result.passed = ok;
        return result;
    };

    // Families carry a commutator bracket by default, so the source is
    // checked in the form the first step consumes: the Lie identity only
    // when the chain opens with the Lie-side construction.
    const bool lie_source = !steps.empty() && steps.front() == "rblie-prelie";
    {
        Verdict v = lie_source ? check_rb_lie(source, sampler, opts)
                               : check_rb(source, sampler, opts);
        if (!record("source", lie_source ? "matching-rb-lie" : "matching-rb", v))
            return finish(false);
    }

    // The family view survives only until the first splitting step; afterwards
    // every stage operates on the derived operation structure.
    std::optional<OpStructure<E>> current;
    bool had_assoc_star = false;
    CheckOptions stage_opts = opts;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const std::string& step = steps[i];
        stage_opts.seed = opts.seed + 1 + static_cast<std::uint64_t>(i);
        if (!current) {
            if (step == "dend")
                current = rb_to_dendriform(source);
            else if (step == "tridend")
                current = rb_to_tridendriform(source);
            else if (step == "rblie-prelie")
                current = rblie_to_prelie(source);
            else
                throw config_error("pipeline step '" + step +
                                   "' needs a split structure; start with dend, tridend or rblie-prelie");
        } else {
            if (step == "prelie")
                current = dendriform_to_prelie(*current);
            else if (step == "postlie")
                current = tridendriform_to_postlie(*current);
            else if (step == "assoc")
                current = split_to_assoc(*current);
            else if (step == "antisym")
                current = antisymmetrize(*current);
            else
                throw config_error("pipeline step '" + step + "' cannot follow a split structure");
        }
        if (current->has_op(OpName::AssocStar)) had_assoc_star = true;
        const std::string target = transform_target(step, had_assoc_star);
        Verdict v = check_random(*current, axiom_set<E>(target), sampler, stage_opts);
        if (!record(step, target, v)) return finish(false);
    }
    return finish(true);
}

} // namespace matchbox
