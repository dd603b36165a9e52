#include "matchbox/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "matchbox/errors.hpp"
#include "matchbox/service.hpp"

namespace matchbox::cli {
namespace {

// Shared output policy: optional --report file, --json on stdout, otherwise a
// human summary produced by the caller.
struct Emit {
    std::ostream& out;
    bool json = false;
    std::string report_path;

    void deliver(const Json& report, const std::string& human) const {
        if (!report_path.empty()) {
            std::ofstream f(report_path);
            if (!f) throw config_error("cannot write report file '" + report_path + "'");
            f << report.dump(2) << "\n";
        }
        if (json)
            out << report.dump(2) << "\n";
        else
            out << human;
    }
};

std::string human_verdict(const Json& v) {
    std::ostringstream s;
    s << "verdict: " << v["verdict"].get<std::string>() << " (mode: "
      << v["mode"].get<std::string>();
    if (v.contains("seed")) s << ", seed: " << v["seed"].get<std::uint64_t>();
    s << ", trials: " << v["trials"].get<std::uint64_t>() << ")\n";
    if (v.contains("witness")) {
        const Json& w = v["witness"];
        s << "witness: " << w["identity"].get<std::string>() << " at alpha="
          << w["alpha"].get<std::string>() << " beta=" << w["beta"].get<std::string>() << "\n"
          << "  x = " << w["x"].get<std::string>() << "\n  y = " << w["y"].get<std::string>()
          << "\n";
        if (w.contains("z")) s << "  z = " << w["z"].get<std::string>() << "\n";
        s << "  residual = " << w["residual"].get<std::string>() << "\n";
    }
    return s.str();
}

std::string human_check(const Json& report) {
    std::ostringstream s;
    s << "structure: " << report["structure"].get<std::string>() << "\naxioms: "
      << report["axioms"].get<std::string>() << "\n" << human_verdict(report);
    return s.str();
}

std::string human_pipeline(const Json& report) {
    std::ostringstream s;
    s << "source: " << report["source"].get<std::string>() << "\n";
    for (const Json& stage : report["stages"])
        s << "stage " << stage["stage"].get<std::string>() << " ["
          << stage["axioms"].get<std::string>() << "]: "
          << stage["verdict"]["verdict"].get<std::string>() << " (trials: "
          << stage["verdict"]["trials"].get<std::uint64_t>() << ")\n";
    s << "result: " << report["result"].get<std::string>() << "\n";
    return s.str();
}

Json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw config_error("cannot read file '" + path + "'");
    try {
        Json j;
        f >> j;
        return j;
    } catch (const Json::exception& e) {
        throw parse_error("file '" + path + "': " + e.what());
    }
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"matchbox: matching Rota-Baxter families, their splittings, and checks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "matchbox 0.1.0");

    EnumerateRequest en;
    bool en_json = false;
    CLI::App* enumerate = app.add_subcommand("enumerate", "List decorated trees of a given size");
    enumerate->add_option("--kind", en.kind, "pbt (planar binary) or rooted")
        ->check(CLI::IsMember({"pbt", "rooted"}));
    enumerate->add_option("-n", en.n, "internal vertices (pbt) or vertices (rooted)");
    enumerate->add_option("-D,--dec", en.dec, "decoration alphabet, comma-separated");
    enumerate->add_option("-O,--omega", en.omega, "edge-type alphabet, comma-separated");
    enumerate->add_option("--cap", en.cap, "refuse enumerations larger than this");
    enumerate->add_flag("--json", en_json, "emit a JSON report");

    MulRequest dm;
    bool dm_json = false;
    CLI::App* dend = app.add_subcommand("dend", "Free matching dendriform algebra");
    dend->require_subcommand(1);
    CLI::App* dend_mul = dend->add_subcommand("mul", "Multiply two basis trees");
    dend_mul->add_option("--op", dm.op, "prec, succ or bullet")
        ->check(CLI::IsMember({"prec", "succ", "bullet"}));
    dend_mul->add_option("--omega", dm.idx, "operation index from the type alphabet")->required();
    dend_mul->add_option("--lhs", dm.lhs, "left tree, e.g. B(a,e,|,e,|)")->required();
    dend_mul->add_option("--rhs", dm.rhs, "right tree")->required();
    dend_mul->add_option("-D,--dec", dm.dec, "decoration alphabet");
    dend_mul->add_option("-O,--omega-set", dm.omega, "edge-type alphabet");
    dend_mul->add_flag("--json", dm_json, "emit the product as JSON");

    MulRequest pm;
    bool pm_json = false;
    CLI::App* prelie = app.add_subcommand("prelie", "Rooted-tree grafting pre-Lie algebra");
    prelie->require_subcommand(1);
    CLI::App* prelie_mul =
        prelie->add_subcommand("mul", "Graft the left tree on each vertex of the right tree");
    prelie_mul->add_option("--type", pm.idx, "edge type from the type alphabet")->required();
    prelie_mul->add_option("--lhs", pm.lhs, "left tree, e.g. R(a;[r:R(b)])")->required();
    prelie_mul->add_option("--rhs", pm.rhs, "right tree (hosts the graft)")->required();
    prelie_mul->add_option("-D,--dec", pm.dec, "decoration alphabet");
    prelie_mul->add_option("-O,--omega-set", pm.omega, "edge-type alphabet");
    prelie_mul->add_flag("--json", pm_json, "emit the product as JSON");

    CheckRequest ck;
    std::string ck_derive;
    bool ck_json = false;
    std::string ck_report;
    CLI::App* check = app.add_subcommand("check", "Check an axiom set on a structure");
    check->add_option("--structure", ck.structure,
                      "free-dend, rooted-prelie, kernel-family, running-sum-family, paybe-family")
        ->required();
    check->add_option("--axioms", ck.axioms, "axiom set name (see README)")->required();
    check->add_option("--derive", ck_derive,
                      "comma-separated transform steps applied before checking");
    check->add_flag("--exhaustive", ck.exhaustive, "check all triples from the basis pool");
    check->add_option("--max-vertices", ck.max_vertices, "basis pool size bound (tree structures)");
    check->add_option("--seed", ck.seed, "random mode seed");
    check->add_option("--trials", ck.trials, "random triples per identity per index pair");
    check->add_option("--threads", ck.threads, "worker threads (0: MATCHBOX_THREADS or 1)");
    check->add_option("-D,--dec", ck.dec, "decoration alphabet (tree structures)");
    check->add_option("-O,--omega", ck.omega, "operation index alphabet");
    check->add_option("--len", ck.len, "running-sum carrier length");
    check->add_option("--dim", ck.dim, "paybe matrix dimension");
    check->add_flag("--json", ck_json, "emit the JSON report on stdout");
    check->add_option("--report", ck_report, "write the JSON report to a file");

    PipelineRequest pl;
    std::string pl_steps;
    bool pl_json = false;
    std::string pl_report;
    CLI::App* pipeline =
        app.add_subcommand("pipeline", "Verify a family, then re-check each derived stage");
    pipeline->add_option("--from", pl.from, "kernel-family, running-sum-family or paybe-family")
        ->required();
    pipeline->add_option("--steps", pl_steps, "comma-separated steps, e.g. dend,prelie,antisym")
        ->required();
    pipeline->add_option("--seed", pl.seed, "base seed; stage i uses seed+i+1");
    pipeline->add_option("--trials", pl.trials, "random trials per identity per index pair");
    pipeline->add_option("--threads", pl.threads, "worker threads (0: MATCHBOX_THREADS or 1)");
    pipeline->add_option("-O,--omega", pl.omega, "family index alphabet");
    pipeline->add_option("--len", pl.len, "running-sum carrier length");
    pipeline->add_option("--dim", pl.dim, "paybe matrix dimension");
    pipeline->add_flag("--json", pl_json, "emit the JSON report on stdout");
    pipeline->add_option("--report", pl_report, "write the JSON report to a file");

    CLI::App* aybe = app.add_subcommand("aybe", "Polarized associative Yang-Baxter tooling");
    aybe->require_subcommand(1);
    AybeSearchRequest as;
    bool as_json = false;
    CLI::App* aybe_search_cmd = aybe->add_subcommand("search", "Grid-search AYBE solutions");
    aybe_search_cmd->add_option("--dim", as.dim, "matrix dimension");
    aybe_search_cmd->add_option("--weight", as.weight, "AYBE weight (rational)");
    aybe_search_cmd->add_option("--support", as.support,
                                "comma-separated terms EijxEkl spanning the candidates");
    aybe_search_cmd->add_option("--grid", as.grid, "comma-separated rational coefficients");
    aybe_search_cmd->add_flag("--family", as.family,
                              "report pairs satisfying the pair residual and swap condition");
    aybe_search_cmd->add_option("--cap", as.cap, "refuse searches larger than this");
    aybe_search_cmd->add_flag("--json", as_json, "emit a JSON report");

    std::size_t av_dim = 2;
    std::string av_weight = "0";
    std::string av_r, av_s;
    bool av_json = false;
    CLI::App* aybe_verify_cmd = aybe->add_subcommand("verify", "Verify tensors from JSON files");
    aybe_verify_cmd->add_option("--dim", av_dim, "matrix dimension");
    aybe_verify_cmd->add_option("--weight", av_weight, "AYBE weight (rational)");
    aybe_verify_cmd->add_option("--r", av_r, "tensor file for r")->required();
    aybe_verify_cmd->add_option("--s", av_s, "optional second tensor file");
    aybe_verify_cmd->add_flag("--json", av_json, "emit a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << app.version() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(enumerate)) {
            const Json report = service_enumerate(en);
            if (en_json) {
                out << report.dump(2) << "\n";
            } else {
                for (const Json& t : report["trees"]) out << t.get<std::string>() << "\n";
                out << "count: " << report["count"].get<std::uint64_t>() << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(dend)) {
            const Json report = service_dend_mul(dm);
            out << (dm_json ? report.dump(2) : report["encoded"].get<std::string>()) << "\n";
            return 0;
        }
        if (app.got_subcommand(prelie)) {
            const Json report = service_prelie_mul(pm);
            out << (pm_json ? report.dump(2) : report["encoded"].get<std::string>()) << "\n";
            return 0;
        }
        if (app.got_subcommand(check)) {
            if (!ck_derive.empty()) ck.derive = split_csv(ck_derive);
            const ServiceResult r = service_check(ck);
            Emit{out, ck_json, ck_report}.deliver(r.report, human_check(r.report));
            return r.pass ? 0 : 1;
        }
        if (app.got_subcommand(pipeline)) {
            pl.steps = split_csv(pl_steps);
            const ServiceResult r = service_pipeline(pl);
            Emit{out, pl_json, pl_report}.deliver(r.report, human_pipeline(r.report));
            return r.pass ? 0 : 1;
        }
        if (app.got_subcommand(aybe)) {
            if (aybe->got_subcommand(aybe_search_cmd)) {
                const Json report = service_aybe_search(as);
                if (as_json) {
                    out << report.dump(2) << "\n";
                } else if (as.family) {
                    for (const Json& p : report["pairs"])
                        out << "r: " << p["r"].dump() << "\ns: " << p["s"].dump() << "\n";
                    out << "pairs: " << report["pairs"].size() << "\n";
                } else {
                    for (const Json& t : report["solutions"]) out << t.dump() << "\n";
                    out << "solutions: " << report["solutions"].size() << "\n";
                }
                return 0;
            }
            const Json r_json = load_json(av_r);
            Json s_json;
            const bool have_s = !av_s.empty();
            if (have_s) s_json = load_json(av_s);
            const ServiceResult r =
                service_aybe_verify(av_dim, av_weight, r_json, have_s ? &s_json : nullptr);
            if (av_json) {
                out << r.report.dump(2) << "\n";
            } else {
                for (const auto& [k, v] : r.report.items())
                    if (v.is_boolean())
                        out << k << ": " << (v.get<bool>() ? "pass" : "fail") << "\n";
                out << "verdict: " << r.report["verdict"].get<std::string>() << "\n";
            }
            return r.pass ? 0 : 1;
        }
        err << "error: no subcommand\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace matchbox::cli
