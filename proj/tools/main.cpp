#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "hsc/aut.hpp"
#include "hsc/coherent.hpp"
#include "hsc/errors.hpp"
#include "hsc/feasibility.hpp"
#include "hsc/graph.hpp"
#include "hsc/higman_sims.hpp"
#include "hsc/perm.hpp"
#include "hsc/steiner.hpp"

using json = nlohmann::ordered_json;

namespace {

// Exit contract: 0 success, 1 mathematical verification failure,
// 2 input/IO error, 3 budget exhaustion.
constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kInputError = 2;
constexpr int kBudget = 3;

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Uniform run report: command, input digests, math results, elapsed time.
// The results object is a pure function of the inputs; elapsed is not.
struct Report {
    json j;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    Report(const std::string& command, long long seed, int workers) {
        j["command"] = command;
        j["inputs"] = json::object();
        j["seed"] = seed;
        j["workers"] = workers;
        j["results"] = json::object();
    }
    void add_input(const std::string& path, const std::string& bytes) {
        j["inputs"][path] = fnv1a_hex(bytes);
    }
    json& results() { return j["results"]; }
    void finish(std::ostream& out) {
        j["elapsed_seconds"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out << j.dump(2) << "\n";
    }
};

std::string tensor_digest(const hsc::CoherentConfiguration& cc) {
    std::ostringstream buf;
    for (int k = 0; k < cc.classes; ++k)
        for (int i = 0; i < cc.classes; ++i)
            for (int j = 0; j < cc.classes; ++j) buf << cc.p(i, j, k) << ';';
    return fnv1a_hex(buf.str());
}

int cmd_build_hs(const std::string& out_graph, const std::string& out_report, Report& report) {
    hsc::SteinerSystem design = hsc::build_steiner_3_6_22();
    hsc::HsGraph hs = hsc::build_hs_graph(design);
    // Throws verification_error (exit 1) unless strongly regular and
    // triangle-free.
    hsc::SrgParams params = hsc::verify_hs(hs.graph);
    hsc::write_graph_file(hs.graph, out_graph);
    auto& r = report.results();
    r["n"] = params.n;
    r["k"] = params.k;
    r["lambda"] = params.lambda;
    r["mu"] = params.mu;
    r["edges"] = (long long)hs.graph.edges().size();
    bool ok = params == hsc::SrgParams{100, 22, 0, 6};
    r["verified"] = ok;
    std::ofstream out(out_report, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + out_report + " for writing");
    report.finish(out);
    if (!out) throw std::runtime_error("write failed: " + out_report);
    report.finish(std::cout);
    return ok ? kOk : kMathFailure;
}

int cmd_closure(const std::string& graph_path, const std::string& out_config, Report& report) {
    std::string bytes = slurp(graph_path);
    report.add_input(graph_path, bytes);
    hsc::Graph g = hsc::graph_from_text(bytes);
    hsc::CoherentConfiguration cc = hsc::wl2_closure(g);
    auto& r = report.results();
    r["classes"] = cc.classes;
    r["fibers"] = (long long)cc.fibers.size();
    r["tensor_digest"] = tensor_digest(cc);
    if (!out_config.empty()) hsc::write_config_file(cc, out_config);
    report.finish(std::cout);
    return kOk;
}

int cmd_orbitals(const std::string& gens_path, Report& report) {
    std::string bytes = slurp(gens_path);
    report.add_input(gens_path, bytes);
    hsc::GeneratorFile gf = hsc::generators_from_text(bytes);
    hsc::PermGroup g(gf.degree, gf.generators);
    hsc::OrbitalDecomposition od = hsc::orbitals(g);
    bool higman = hsc::is_primitive(g);
    auto systems = hsc::block_system_oracle(g);
    bool oracle = systems.empty();
    auto& r = report.results();
    r["degree"] = g.degree();
    r["rank"] = od.rank;
    r["subdegrees"] = od.subdegrees;
    r["primitive"] = higman;
    r["oracle_primitive"] = oracle;
    r["block_systems"] = (long long)systems.size();
    r["agree"] = higman == oracle;
    report.finish(std::cout);
    return higman == oracle ? kOk : kMathFailure;
}

int cmd_autgroup(const std::string& graph_path, long long budget, Report& report) {
    std::string bytes = slurp(graph_path);
    report.add_input(graph_path, bytes);
    hsc::Graph g = hsc::graph_from_text(bytes);
    hsc::PermGroup aut = hsc::automorphism_group(g, budget);
    auto& r = report.results();
    r["order"] = aut.order().str();
    r["vertex_transitive"] = aut.is_transitive();
    json gens = json::array();
    for (const auto& p : aut.generators()) gens.push_back(p.images());
    r["generators"] = std::move(gens);
    report.finish(std::cout);
    return kOk;
}

int cmd_spectrum(const std::string& config_path, Report& report) {
    std::string bytes = slurp(config_path);
    report.add_input(config_path, bytes);
    hsc::CoherentConfiguration cc = hsc::config_from_text(bytes);
    hsc::SchemeSpectrum s = hsc::scheme_spectrum(cc);
    hsc::KreinVerdict kv = hsc::krein_check(s, 1e-8);
    auto& r = report.results();
    r["P"] = s.P;
    r["Q"] = s.Q;
    r["multiplicities"] = s.multiplicities;
    r["valencies"] = s.valencies;
    r["krein_min"] = kv.min_value;
    r["krein_pass"] = kv.pass;
    report.finish(std::cout);
    return kv.pass ? kOk : kMathFailure;
}

int cmd_feasible(long long max_n, bool csv, Report& report) {
    auto rows = hsc::enumerate_feasible(max_n);
    if (csv) {
        std::printf("n,k,lambda,mu,r,s,f,g,flags\n");
        for (const auto& [p, s] : rows)
            std::printf("%lld,%lld,%lld,%lld,%.12g,%.12g,%lld,%lld,%s\n", p.n, p.k, p.lambda,
                        p.mu, s.r, s.s, s.f, s.g_mult, s.conference ? "conference" : "");
        return kOk;
    }
    auto& r = report.results();
    r["max_n"] = max_n;
    r["count"] = (long long)rows.size();
    json out = json::array();
    for (const auto& [p, s] : rows) {
        json row;
        row["n"] = p.n;
        row["k"] = p.k;
        row["lambda"] = p.lambda;
        row["mu"] = p.mu;
        row["r"] = s.r;
        row["s"] = s.s;
        row["f"] = s.f;
        row["g"] = s.g_mult;
        row["flags"] = s.conference ? "conference" : "";
        out.push_back(std::move(row));
    }
    r["rows"] = std::move(out);
    report.finish(std::cout);
    return kOk;
}

int cmd_moore(long long kmax, Report& report) {
    auto& r = report.results();
    r["kmax"] = kmax;
    r["valencies"] = hsc::moore_valencies(kmax);
    report.finish(std::cout);
    return kOk;
}

int cmd_gq(long long s, long long t, int gon, Report& report) {
    hsc::GqVerdict v = hsc::gq_bound({s, t, gon});
    auto& r = report.results();
    r["s"] = s;
    r["t"] = t;
    r["gon"] = gon;
    r["pass"] = v.pass;
    r["dual_checked"] = v.dual_checked;
    r["dual_pass"] = v.dual_pass;
    report.finish(std::cout);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Strongly regular graph, design, and permutation group workbench"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Optional key=value config file; flags override it");

    long long seed = 0;
    int workers = 1;
    app.add_option("--seed", seed, "Seed recorded in the run report (all commands are deterministic)")
        ->capture_default_str();
    app.add_option("--workers", workers, "Worker count; results are identical for every value")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    int exit_code = kOk;

    auto* build = app.add_subcommand("build-hs", "Construct and verify the 100-vertex graph");
    auto* closure = app.add_subcommand("closure", "Coherent closure of a graph");
    auto* orbitals = app.add_subcommand("orbitals", "Orbital decomposition and primitivity");
    auto* autgroup = app.add_subcommand("autgroup", "Graph automorphism group");
    auto* spectrum = app.add_subcommand("spectrum", "Eigenmatrices and Krein check of a scheme");
    auto* feasible = app.add_subcommand("feasible-srg", "Feasible strongly regular parameter sets");
    auto* moore = app.add_subcommand("moore", "Feasible Moore-graph valencies");
    auto* gq = app.add_subcommand("gq", "Generalized quadrangle/octagon parameter bound");

    std::string build_graph_path, build_report_path;
    build->add_option("out-graph", build_graph_path, "Output graph file")->required();
    build->add_option("out-report", build_report_path, "Output JSON report file")->required();
    build->callback([&] {
        Report rep("build-hs", seed, workers);
        exit_code = cmd_build_hs(build_graph_path, build_report_path, rep);
    });

    std::string closure_graph, closure_out;
    closure->add_option("graph", closure_graph, "Input graph file")->required();
    closure->add_option("--out", closure_out, "Write the closure as a configuration file");
    closure->callback([&] {
        Report rep("closure", seed, workers);
        exit_code = cmd_closure(closure_graph, closure_out, rep);
    });

    std::string orbitals_gens;
    orbitals->add_option("generators", orbitals_gens, "Input generator file")->required();
    orbitals->callback([&] {
        Report rep("orbitals", seed, workers);
        exit_code = cmd_orbitals(orbitals_gens, rep);
    });

    std::string aut_graph;
    long long aut_budget = 10'000'000;
    autgroup->add_option("graph", aut_graph, "Input graph file")->required();
    autgroup->add_option("--budget", aut_budget, "Search node budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    autgroup->callback([&] {
        Report rep("autgroup", seed, workers);
        exit_code = cmd_autgroup(aut_graph, aut_budget, rep);
    });

    std::string spectrum_config;
    spectrum->add_option("config", spectrum_config, "Input configuration file")->required();
    spectrum->callback([&] {
        Report rep("spectrum", seed, workers);
        exit_code = cmd_spectrum(spectrum_config, rep);
    });

    long long feas_max_n = 0;
    bool feas_csv = false, feas_json = false;
    feasible->add_option("--max-n", feas_max_n, "Largest vertex count to scan")->required();
    auto* csv_flag = feasible->add_flag("--csv", feas_csv, "Plain CSV rows on stdout");
    feasible->add_flag("--json", feas_json, "JSON run report on stdout (default)")
        ->excludes(csv_flag);
    feasible->callback([&] {
        Report rep("feasible-srg", seed, workers);
        exit_code = cmd_feasible(feas_max_n, feas_csv, rep);
    });

    long long moore_kmax = 0;
    moore->add_option("--kmax", moore_kmax, "Largest valency to scan")->required();
    moore->callback([&] {
        Report rep("moore", seed, workers);
        exit_code = cmd_moore(moore_kmax, rep);
    });

    long long gq_s = 0, gq_t = 0;
    int gq_gon = 4;
    gq->add_option("s", gq_s, "Points per line minus one")->required();
    gq->add_option("t", gq_t, "Lines per point minus one")->required();
    gq->add_option("gon", gq_gon, "Gonality, 4 or 8")->required();
    gq->callback([&] {
        Report rep("gq", seed, workers);
        exit_code = cmd_gq(gq_s, gq_t, gq_gon, rep);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    } catch (const hsc::budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudget;
    } catch (const hsc::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const hsc::verification_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMathFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return exit_code;
}
