#pragma once

#include <json.hpp>

#include "matchbox/engine.hpp"
#include "matchbox/lincomb.hpp"
#include "matchbox/tensor.hpp"

namespace matchbox {

using Json = nlohmann::json;

// {"terms":[{"coeff":"p/q","key":"<serialized>"}...]} with terms in key
// order. nlohmann::json keeps object keys sorted, so dumps are canonical and
// byte-stable across runs.
template <typename Key>
Json lincomb_json(const LinComb<Key>& v) {
    Json terms = Json::array();
    for (const auto& [k, c] : v.terms()) terms.push_back({{"key", k.encode()}, {"coeff", to_string(c)}});
    return Json{{"terms", terms}};
}

inline Json witness_json(const Witness& w) {
    Json j{{"identity", w.identity}, {"alpha", w.alpha}, {"beta", w.beta},
           {"x", w.x},               {"y", w.y},         {"residual", w.residual}};
    if (!w.z.empty()) j["z"] = w.z;
    return j;
}

inline Json verdict_json(const Verdict& v) {
    Json j{{"mode", mode_str(v.mode)},
           {"trials", v.trials},
           {"verdict", v.pass ? "pass" : "fail"}};
    if (v.mode == Mode::Random) j["seed"] = v.seed;
    if (v.witness) j["witness"] = witness_json(*v.witness);
    return j;
}

inline Json check_report(const std::string& structure, const std::string& axiom_set_name,
                         const Verdict& v) {
    Json j = verdict_json(v);
    j["structure"] = structure;
    j["axioms"] = axiom_set_name;
    return j;
}

// [{"u":[...row-major...],"v":[...]}...], entries as canonical rationals.
Json mattensor_json(const MatTensor& r);
MatTensor mattensor_from_json(const Json& j, std::size_t dim);

} // namespace matchbox
