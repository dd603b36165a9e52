#include "matchbox/jsonio.hpp"

#include "matchbox/errors.hpp"

namespace matchbox {

namespace {

Json mat_entries_json(const Mat& m) {
    Json out = Json::array();
    for (const Rational& x : m.entries()) out.push_back(to_string(x));
    return out;
}

Mat mat_from_entries(const Json& j, std::size_t dim) {
    if (!j.is_array() || j.size() != dim * dim)
        throw parse_error("matrix entry list must have " + std::to_string(dim * dim) + " entries");
    std::vector<Rational> entries;
    entries.reserve(j.size());
    for (const auto& e : j) entries.push_back(parse_rational(e.get<std::string>()));
    return Mat(dim, std::move(entries));
}

} // namespace

Json mattensor_json(const MatTensor& r) {
    Json out = Json::array();
    for (const auto& [u, v] : r.pairs())
        out.push_back(Json{{"u", mat_entries_json(u)}, {"v", mat_entries_json(v)}});
    return out;
}

MatTensor mattensor_from_json(const Json& j, std::size_t dim) {
    if (!j.is_array()) throw parse_error("tensor must be a JSON array of {u,v} pairs");
    std::vector<std::pair<Mat, Mat>> pairs;
    for (const auto& p : j) {
        if (!p.contains("u") || !p.contains("v"))
            throw parse_error("tensor pair must have 'u' and 'v' entries");
        pairs.emplace_back(mat_from_entries(p["u"], dim), mat_from_entries(p["v"], dim));
    }
    return MatTensor(dim, std::move(pairs));
}

} // namespace matchbox
