// mcolor: generate graphs, run one-shot multicoloring algorithms, verify,
// inspect neighborhood graphs and export TDMA schedules.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 budget exceeded.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <random>

#include "mcolor/mcolor.hpp"

using namespace mcolor;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

// FNV-1a over the canonical edge list.
std::string graph_hash(const Graph& g) {
    std::uint64_t h = 14695981039346656037ULL;
    for (const unsigned char c : save_edge_list(g)) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
    if (seed) return *seed;
    std::random_device rd;
    const std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    std::cerr << "seed=" << s << "\n";
    return s;
}

void write_or_print(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        write_file(path, text);
    }
}

struct GenArgs {
    std::string model = "gnp";
    std::size_t n = 100;
    double p = 0.05;
    double radius = 0.1;
    std::size_t stars = 1;
    std::size_t leaves = 4;
    std::uint64_t id_space = 0;
    std::optional<std::uint64_t> seed;
    std::size_t cap = 0;
    std::string out;
};

int cmd_gen(const GenArgs& a) {
    const std::uint64_t seed = resolve_seed(a.seed);
    Graph g;
    if (a.model == "gnp") {
        g = gen_gnp(a.n, a.p, a.id_space ? a.id_space : a.n, seed);
    } else if (a.model == "udg") {
        g = gen_udg(a.n, a.radius, a.id_space ? a.id_space : a.n, seed);
    } else {
        g = gen_stars(a.stars, a.leaves, a.id_space ? a.id_space : a.stars * (a.leaves + 1), seed);
    }
    if (a.cap > 0) g = cap_degree(g, a.cap);
    write_or_print(a.out, save_edge_list(g));
    return kExitOk;
}

struct RunArgs {
    std::string algo;
    std::string graph;
    std::string out;
    double eps = 0.5;
    std::size_t ell = 0;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> max_degree;
    std::size_t retries = 3;
    std::uint64_t scale = 1;
    std::vector<double> slack{2.0};
    bool tie_break = false;
    unsigned threads = 1;
    bool trace = false;
};

// Builds the node algorithm for a run; `meta` receives knobs worth recording.
std::unique_ptr<NodeAlgorithm> make_algorithm(const RunArgs& a, const Graph& g, std::uint64_t seed, json& meta) {
    const std::size_t delta = a.max_degree.value_or(g.max_degree());
    require(delta >= g.max_degree(), ErrorKind::InvalidParams, "--max-degree is below the graph's max degree");
    if (a.algo == "randomized") {
        meta["tie_break"] = a.tie_break;
        return std::make_unique<RandomizedAlgorithm>(std::max<std::uint64_t>(g.size(), 2), delta, a.eps, a.tie_break);
    }
    const std::size_t alg_delta = std::max<std::size_t>(delta, 1);
    if (a.algo == "shared-order") {
        const auto k = shared_k(static_cast<double>(g.id_space()), static_cast<double>(delta), a.eps, a.scale);
        meta["scale"] = a.scale;
        meta["retries"] = a.retries;
        if (view_count(g.id_space(), delta, 0) <= kCertifyBudget) {
            auto cert = certify_with_resampling(k, g.id_space(), delta, a.eps, seed, std::max<std::size_t>(a.retries, 1));
            meta["certification"] = certification_to_json(cert.report);
            meta["attempts"] = cert.attempts;
            return std::make_unique<SharedOrderAlgorithm>(std::move(cert.family), delta, a.eps);
        }
        meta["certification"] = nullptr;
        return std::make_unique<SharedOrderAlgorithm>(PermutationFamily(k, g.id_space(), seed), delta, a.eps);
    }
    meta["ell"] = a.ell;
    meta["slack"] = a.slack;
    if (a.algo == "algebraic-basic") {
        return std::make_unique<AlgebraicBasicAlgorithm>(choose_params(g.id_space(), alg_delta, a.ell, a.slack));
    }
    return std::make_unique<AlgebraicWeightedAlgorithm>(
        make_weighted_scheme(g.id_space(), alg_delta, a.ell, a.eps, a.slack));
}

int cmd_run(const RunArgs& a) {
    const Graph g = load_edge_list(read_file(a.graph));
    const std::uint64_t seed = resolve_seed(a.seed);
    json knobs = json::object();
    const auto algo = make_algorithm(a, g, seed, knobs);
    auto result = run_one_shot(g, *algo, seed, a.threads);
    auto& params = result.coloring.params;
    params.epsilon = a.eps;
    params.id_space = g.id_space();
    params.max_degree = a.max_degree.value_or(g.max_degree());
    for (const auto& [key, value] : knobs.items()) params.extra[key] = value;
    if (a.max_degree) params.extra["max_degree_override"] = *a.max_degree;

    const auto report = verify(g, result.coloring, a.eps);
    json out = coloring_to_json(result.coloring);
    out["meta"]["graph_hash"] = graph_hash(g);
    out["meta"]["graph_file"] = a.graph;
    out["report"] = report_to_json(report);
    if (a.trace) out["trace"] = trace_to_json(result.trace);
    write_or_print(a.out, out.dump(2) + "\n");

    std::cerr << "algorithm=" << algo->name() << " k=" << result.coloring.palette_size << " valid=" << report.valid
              << " fractions_met=" << report.fractions_met << " worst_ratio=" << report.worst_ratio << "\n";
    return report.valid ? kExitOk : kExitInvalid;
}

Multicoloring load_coloring(const std::string& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        fail(ErrorKind::ParseError, path + ": " + e.what());
    }
    return coloring_from_json(j);
}

struct CheckArgs {
    std::string graph;
    std::string coloring;
    std::string out;
    std::optional<double> eps;
    std::string format = "json";
};

int cmd_verify(const CheckArgs& a) {
    const Graph g = load_edge_list(read_file(a.graph));
    const auto m = load_coloring(a.coloring);
    const auto report = verify(g, m, a.eps.value_or(m.params.epsilon));
    if (!a.out.empty()) write_or_print(a.out, report_to_json(report).dump(2) + "\n");
    std::cout << "valid=" << (report.valid ? "true" : "false") << " violations=" << report.violation_count
              << " fractions_met=" << (report.fractions_met ? "true" : "false")
              << " shortfalls=" << report.fraction_shortfalls << " worst_ratio=" << report.worst_ratio << "\n";
    return report.valid ? kExitOk : kExitInvalid;
}

int cmd_export(const CheckArgs& a) {
    const Graph g = load_edge_list(read_file(a.graph));
    const auto m = load_coloring(a.coloring);
    const auto report = verify(g, m, a.eps.value_or(m.params.epsilon));
    if (!report.valid) {
        std::cerr << "coloring has " << report.violation_count << " violations; refusing to export\n";
        return kExitInvalid;
    }
    const auto schedule = to_schedule(m, report);
    write_or_print(a.out, a.format == "csv" ? schedule_to_csv(schedule) : schedule_to_json(schedule).dump(2) + "\n");
    const auto u = utilization(schedule, g);
    std::cerr << "frame=" << schedule.frame_length << " mean_duty_cycle=" << u.mean_duty_cycle
              << " baseline=" << u.baseline_duty_cycle << " mean_speedup=" << u.mean_speedup << "\n";
    return kExitOk;
}

int cmd_stats(const CheckArgs& a) {
    const Graph g = load_edge_list(read_file(a.graph));
    const json j = json::parse(read_file(a.coloring));
    const auto m = coloring_from_json(j);
    const auto report = verify(g, m, a.eps.value_or(m.params.epsilon));
    std::cout << "degree,nodes,min_colors,required_colors,rho,below_target\n";
    for (const auto& c : report.degree_classes) {
        std::cout << c.degree << ',' << c.nodes << ',' << c.min_colors << ',' << c.required_colors << ',' << c.rho
                  << ',' << c.below_target << "\n";
    }
    if (j.contains("trace")) {
        const auto& t = j.at("trace");
        std::cout << "\nmessages,broadcasts,max_payload_bytes,total_payload_bytes\n"
                  << t.at("message_count") << ',' << t.at("broadcast_count") << ',' << t.at("max_payload_bytes") << ','
                  << t.at("total_payload_bytes") << "\n";
    }
    return report.valid ? kExitOk : kExitInvalid;
}

struct NbrArgs {
    std::uint64_t id_space = 3;
    std::size_t delta = 1;
    bool chi = false;
    std::string certify;
    double eps = 0.5;
    std::size_t ell = 0;
    std::optional<std::uint64_t> seed;
    std::size_t retries = 3;
};

int cmd_nbrgraph(const NbrArgs& a) {
    require(a.id_space >= 2 && a.id_space <= kMaxNbrIdSpace, ErrorKind::InvalidParams,
            "--N must be in [2, " + std::to_string(kMaxNbrIdSpace) + "]");
    require(a.delta >= 1 && a.delta < a.id_space, ErrorKind::InvalidParams, "--Delta must be in [1, N-1]");
    std::cout << "vertices=" << view_count(a.id_space, a.delta) << " edges=" << nbr_edge_count(a.id_space, a.delta);
    std::optional<std::size_t> chi;
    try {
        if (a.chi) chi = chromatic_number(build_nbr_graph(a.id_space, a.delta));
    } catch (const Error&) {
        std::cout << "\n";
        throw;
    }
    if (chi) std::cout << " chi=" << *chi;
    std::cout << "\n";
    if (a.certify.empty()) return kExitOk;

    std::unique_ptr<NodeAlgorithm> algo;
    CountTarget target;
    bool family_ok = true;
    if (a.certify == "shared-order") {
        const std::uint64_t seed = resolve_seed(a.seed);
        const auto k = shared_k(static_cast<double>(a.id_space), static_cast<double>(a.delta), a.eps);
        auto cert = certify_with_resampling(k, a.id_space, a.delta, a.eps, seed, std::max<std::size_t>(a.retries, 1));
        family_ok = cert.report.pass;
        std::cout << "k=" << k << " attempts=" << cert.attempts << " certified=" << (family_ok ? "true" : "false")
                  << " worst_count=" << cert.report.worst_count << "\n";
        const Rational e = Rational::from_double(a.eps);
        target = [k, e](std::size_t d) { return required_count(d, k, e); };
        algo = std::make_unique<SharedOrderAlgorithm>(std::move(cert.family), a.delta, a.eps);
    } else if (a.certify == "algebraic-basic") {
        auto p = choose_params(a.id_space, a.delta, a.ell);
        target = [p](std::size_t d) { return p.guaranteed_count(d); };
        algo = std::make_unique<AlgebraicBasicAlgorithm>(std::move(p));
    } else {
        auto s = make_weighted_scheme(a.id_space, a.delta, a.ell, a.eps);
        target = [s](std::size_t d) { return s.guaranteed_count(d); };
        algo = std::make_unique<AlgebraicWeightedAlgorithm>(std::move(s));
    }
    const auto report = check_algo_on_nbr_graph(*algo, a.id_space, a.delta, target);
    std::cout << "certify=" << a.certify << " k=" << report.palette_size << " edges_checked=" << report.edges_checked
              << " violations=" << report.violation_count << " fraction_failures=" << report.fraction_failures
              << " pass=" << (report.pass() && family_ok ? "true" : "false") << "\n";
    return report.pass() && family_ok ? kExitOk : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"One-shot distributed multicoloring and TDMA scheduling"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    const std::vector<std::string> algos{"randomized", "shared-order", "algebraic-basic", "algebraic-weighted"};

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Generate a random graph as an edge list");
    g->add_option("--model", gen.model, "gnp, udg or stars")->check(CLI::IsMember({"gnp", "udg", "stars"}));
    g->add_option("--n", gen.n, "Number of nodes (gnp, udg)");
    g->add_option("--p", gen.p, "Edge probability (gnp)")->check(CLI::Range(0.0, 1.0));
    g->add_option("--radius", gen.radius, "Connection radius (udg)")->check(CLI::NonNegativeNumber);
    g->add_option("--stars", gen.stars, "Number of stars (stars)");
    g->add_option("--leaves", gen.leaves, "Leaves per star (stars)");
    g->add_option("--N", gen.id_space, "ID space size; defaults to the node count");
    g->add_option("--cap", gen.cap, "Drop edges until the max degree is at most this");
    g->add_option("--seed", gen.seed, "Seed; drawn from system entropy if absent");
    g->add_option("-o,--out", gen.out, "Output file (stdout if absent)");

    RunArgs run;
    auto* r = app.add_subcommand("run", "Run one algorithm on a graph and verify the result");
    r->add_option("--algo", run.algo, "Algorithm")->required()->check(CLI::IsMember(algos));
    r->add_option("-g,--graph", run.graph, "Edge-list file")->required();
    r->add_option("-o,--out", run.out, "Coloring JSON output (stdout if absent)");
    r->add_option("--eps", run.eps, "Epsilon")->check(CLI::Range(0.0, 1.0));
    r->add_option("--ell", run.ell, "Recursion depth for the algebraic algorithms");
    r->add_option("--slack", run.slack, "Slack f_i per level (algebraic)");
    r->add_option("--seed", run.seed, "Seed; drawn from system entropy if absent");
    r->add_option("--max-degree", run.max_degree, "Degree bound the nodes assume");
    r->add_option("--retries", run.retries, "Shared-order families to try before giving up");
    r->add_option("--scale", run.scale, "Integer inflation of the shared-order k")->check(CLI::PositiveNumber);
    r->add_flag("--tie-break", run.tie_break, "Randomized: equal draws go to the smaller ID");
    r->add_option("--threads", run.threads, "Worker threads for the node computations");
    r->add_flag("--trace", run.trace, "Embed the message trace in the output");

    CheckArgs check;
    auto* v = app.add_subcommand("verify", "Check a coloring against a graph");
    auto* ex = app.add_subcommand("export", "Convert a verified coloring into a TDMA schedule");
    auto* st = app.add_subcommand("stats", "Per-degree fraction table and message summary");
    for (auto* sub : {v, ex, st}) {
        sub->add_option("-g,--graph", check.graph, "Edge-list file")->required();
        sub->add_option("-c,--coloring", check.coloring, "Coloring JSON")->required();
        sub->add_option("--eps", check.eps, "Epsilon; defaults to the coloring's own")->check(CLI::Range(0.0, 1.0));
    }
    v->add_option("-o,--out", check.out, "Write the full report as JSON");
    ex->add_option("-o,--out", check.out, "Schedule output (stdout if absent)");
    ex->add_option("--format", check.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    NbrArgs nbr;
    auto* n = app.add_subcommand("nbrgraph", "Neighborhood graph size, chromatic number and exhaustive checks");
    n->add_option("--N", nbr.id_space, "ID space size")->required();
    n->add_option("--Delta", nbr.delta, "Degree bound")->required();
    n->add_flag("--chi", nbr.chi, "Compute the exact chromatic number");
    n->add_option("--certify", nbr.certify, "Check a deterministic algorithm on every edge")
        ->check(CLI::IsMember({"shared-order", "algebraic-basic", "algebraic-weighted"}));
    n->add_option("--eps", nbr.eps, "Epsilon")->check(CLI::Range(0.0, 1.0));
    n->add_option("--ell", nbr.ell, "Recursion depth (algebraic)");
    n->add_option("--seed", nbr.seed, "Family seed (shared-order)");
    n->add_option("--retries", nbr.retries, "Families to try (shared-order)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*g) return cmd_gen(gen);
        if (*r) return cmd_run(run);
        if (*v) return cmd_verify(check);
        if (*ex) return cmd_export(check);
        if (*st) return cmd_stats(check);
        if (*n) return cmd_nbrgraph(nbr);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::TooLarge ? kExitBudget : kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
