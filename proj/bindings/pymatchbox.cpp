#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "matchbox/errors.hpp"
#include "matchbox/pbt.hpp"
#include "matchbox/service.hpp"

namespace py = pybind11;
using namespace matchbox;

namespace {

// Reports cross the boundary as canonical JSON text; the Python package
// json.loads() them so the dict layout matches the CLI byte for byte.
std::string enumerate_json(const std::string& kind, int n, const std::string& dec,
                           const std::string& omega, std::uint64_t cap) {
    return service_enumerate({kind, n, dec, omega, cap}).dump(2);
}

std::string dend_mul_json(const std::string& op, const std::string& idx, const std::string& lhs,
                          const std::string& rhs, const std::string& dec,
                          const std::string& omega) {
    return service_dend_mul({op, idx, lhs, rhs, dec, omega}).dump(2);
}

std::string prelie_mul_json(const std::string& idx, const std::string& lhs, const std::string& rhs,
                            const std::string& dec, const std::string& omega) {
    return service_prelie_mul({"star", idx, lhs, rhs, dec, omega}).dump(2);
}

std::string check_json(const std::string& structure, const std::string& axioms,
                       const std::vector<std::string>& derive, bool exhaustive, int max_vertices,
                       std::uint64_t seed, std::uint64_t trials, int threads,
                       const std::string& dec, const std::string& omega, std::size_t len,
                       std::size_t dim) {
    CheckRequest req{structure, axioms, derive, exhaustive, max_vertices,
                     seed,      trials, threads, dec,       omega,        len, dim};
    return service_check(req).report.dump(2);
}

std::string pipeline_json(const std::string& from, const std::vector<std::string>& steps,
                          std::uint64_t seed, std::uint64_t trials, int threads,
                          const std::string& omega, std::size_t len, std::size_t dim) {
    PipelineRequest req{from, steps, seed, trials, threads, omega, len, dim};
    return service_pipeline(req).report.dump(2);
}

std::string aybe_search_json(std::size_t dim, const std::string& weight,
                             const std::string& support, const std::string& grid, bool family,
                             std::uint64_t cap) {
    return service_aybe_search({dim, weight, support, grid, family, cap}).dump(2);
}

std::string aybe_verify_json(std::size_t dim, const std::string& weight, const std::string& r,
                             const std::string& s) {
    const Json r_json = Json::parse(r);
    if (s.empty()) return service_aybe_verify(dim, weight, r_json, nullptr).report.dump(2);
    const Json s_json = Json::parse(s);
    return service_aybe_verify(dim, weight, r_json, &s_json).report.dump(2);
}

py::int_ count_pbt_py(int n, std::size_t dec_size, std::size_t omega_size) {
    const std::string s = count_pbt(n, dec_size, omega_size).str();
    PyObject* v = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!v) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(v);
}

} // namespace

PYBIND11_MODULE(_matchbox, m) {
    m.doc() = "matching Rota-Baxter families, their splittings, and checks";

    py::register_exception<Error>(m, "MatchboxError");

    m.def("count_pbt", &count_pbt_py, py::arg("n"), py::arg("dec_size"), py::arg("omega_size"),
          "Catalan(n) * dec_size^n * omega_size^(n-1) as an exact integer");
    m.def("enumerate_json", &enumerate_json, py::arg("kind") = "pbt", py::arg("n") = 3,
          py::arg("dec") = "a", py::arg("omega") = "r,g", py::arg("cap") = 100000);
    m.def("dend_mul_json", &dend_mul_json, py::arg("op"), py::arg("idx"), py::arg("lhs"),
          py::arg("rhs"), py::arg("dec") = "a", py::arg("omega") = "r,g");
    m.def("prelie_mul_json", &prelie_mul_json, py::arg("idx"), py::arg("lhs"), py::arg("rhs"),
          py::arg("dec") = "a", py::arg("omega") = "r,g");
    m.def("check_json", &check_json, py::arg("structure"), py::arg("axioms"),
          py::arg("derive") = std::vector<std::string>{}, py::arg("exhaustive") = false,
          py::arg("max_vertices") = 2, py::arg("seed") = 1, py::arg("trials") = 200,
          py::arg("threads") = 0, py::arg("dec") = "a", py::arg("omega") = "r,g",
          py::arg("len") = 6, py::arg("dim") = 2);
    m.def("pipeline_json", &pipeline_json, py::arg("source"), py::arg("steps"),
          py::arg("seed") = 1, py::arg("trials") = 100, py::arg("threads") = 0,
          py::arg("omega") = "r,g", py::arg("len") = 6, py::arg("dim") = 2);
    m.def("aybe_search_json", &aybe_search_json, py::arg("dim") = 2, py::arg("weight") = "0",
          py::arg("support") = "E12xE11,E12xE12", py::arg("grid") = "-1,0,1",
          py::arg("family") = false, py::arg("cap") = 200000);
    m.def("aybe_verify_json", &aybe_verify_json, py::arg("dim"), py::arg("weight"), py::arg("r"),
          py::arg("s") = "");
}
