#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matchbox/jsonio.hpp"

namespace matchbox {

// Request/report layer shared by the CLI and the Python bindings: each call
// validates its inputs (throwing Error subclasses on bad configuration) and
// returns a canonical JSON report. `pass` distinguishes "ran and failed"
// from errors, which surface as exceptions.
struct ServiceResult {
    Json report;
    bool pass = true;
};

struct EnumerateRequest {
    std::string kind = "pbt"; // pbt | rooted
    int n = 3;
    std::string dec = "a";
    std::string omega = "r,g";
    std::uint64_t cap = 100000;
};

Json service_enumerate(const EnumerateRequest& req);

struct MulRequest {
    std::string op = "prec"; // dend: prec | succ | bullet (ignored by prelie)
    std::string idx;         // operation index / edge type
    std::string lhs, rhs;    // basis trees in the text grammar
    std::string dec = "a";
    std::string omega = "r,g";
};

Json service_dend_mul(const MulRequest& req);
Json service_prelie_mul(const MulRequest& req);

struct CheckRequest {
    std::string structure; // free-dend | rooted-prelie | *-family
    std::string axioms;
    std::vector<std::string> derive;
    bool exhaustive = false;
    int max_vertices = 2;
    std::uint64_t seed = 1;
    std::uint64_t trials = 200;
    int threads = 0;
    std::string dec = "a";
    std::string omega = "r,g";
    std::size_t len = 6; // running-sum carrier length
    std::size_t dim = 2; // paybe matrix dimension
};

ServiceResult service_check(const CheckRequest& req);

struct PipelineRequest {
    std::string from; // kernel-family | running-sum-family | paybe-family
    std::vector<std::string> steps;
    std::uint64_t seed = 1;
    std::uint64_t trials = 100;
    int threads = 0;
    std::string omega = "r,g";
    std::size_t len = 6;
    std::size_t dim = 2;
};

ServiceResult service_pipeline(const PipelineRequest& req);

struct AybeSearchRequest {
    std::size_t dim = 2;
    std::string weight = "0";
    std::string support = "E12xE11,E12xE12"; // comma-separated EijxEkl terms
    std::string grid = "-1,0,1";             // comma-separated rationals
    bool family = false;                     // pair mode
    std::uint64_t cap = 200000;
};

Json service_aybe_search(const AybeSearchRequest& req);

// `r` and optional `s` are tensor JSON values as produced by mattensor_json.
ServiceResult service_aybe_verify(std::size_t dim, const std::string& weight, const Json& r,
                                  const Json* s);

std::vector<std::string> split_csv(const std::string& csv);

} // namespace matchbox
