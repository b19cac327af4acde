// Command-line front end: ingest graphs, run the spectral analyses, and emit
// JSON or markdown reports plus certificate files.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cliquespec/error.hpp"
#include "cliquespec/json_io.hpp"

using namespace cliquespec;

namespace {

constexpr uint64_t kDefaultSeed = 20250801;
constexpr const char* kVersion = "1.0.0";

struct CommonOptions {
    std::string input;
    std::string format = "edgelist";
    std::string family;
    std::string partition = "edges";
    uint64_t seed = kDefaultSeed;
    std::vector<std::string> tol_overrides;
    std::string out;
    std::string emit = "json";
};

void add_graph_options(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--input", opt.input, "graph file to read");
    cmd->add_option("--format", opt.format, "input format: graph6 or edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    cmd->add_option("--family", opt.family, "named family, e.g. complete:6 or KM:2,2,2");
}

void add_output_options(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--seed", opt.seed, "seed for randomized components");
    cmd->add_option("--tol", opt.tol_overrides, "tolerance override name=value (repeatable)");
    cmd->add_option("--out", opt.out, "output path (stdout when omitted)");
    cmd->add_option("--emit", opt.emit, "output rendering")
        ->check(CLI::IsMember({"json", "markdown"}));
}

Tolerances resolve_tolerances(const CommonOptions& opt) {
    Tolerances tol;
    for (const std::string& item : opt.tol_overrides) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw invalid_parameter("--tol expects name=value, got '" + item + "'");
        const std::string name = item.substr(0, eq);
        const double value = std::stod(item.substr(eq + 1));
        if (name == "cluster_rel") tol.cluster_rel = value;
        else if (name == "pattern_zero_rel") tol.pattern_zero_rel = value;
        else if (name == "inequality_slack") tol.inequality_slack = value;
        else if (name == "equality_abs") tol.equality_abs = value;
        else if (name == "tau_tie") tol.tau_tie = value;
        else if (name == "certificate_gram") tol.certificate_gram = value;
        else if (name == "search_stop") tol.search_stop = value;
        else if (name == "search_entry_floor") tol.search_entry_floor = value;
        else throw invalid_parameter("unknown tolerance '" + name + "'");
    }
    return tol;
}

Graph load_graph(const CommonOptions& opt) {
    if (!opt.family.empty()) return build_named(opt.family);
    if (opt.input.empty()) throw invalid_parameter("provide --input or --family");
    std::ifstream in(opt.input);
    if (!in) throw invalid_parameter("cannot read '" + opt.input + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str(),
                       opt.format == "graph6" ? GraphFormat::graph6 : GraphFormat::edge_list);
}

CliqueCover load_partition(const Graph& g, const CommonOptions& opt) {
    if (opt.partition == "edges") return edge_cover(g);
    if (opt.partition == "greedy") return greedy_partition(g, opt.seed);
    if (opt.partition == "exact") return min_clique_partition(g);
    if (opt.partition.rfind("file:", 0) == 0) {
        const std::string path = opt.partition.substr(5);
        std::ifstream in(path);
        if (!in) throw invalid_parameter("cannot read partition file '" + path + "'");
        json j = json::parse(in);
        return cover_from_json(g, j);
    }
    throw invalid_parameter("unknown partition mode '" + opt.partition + "'");
}

json resolved_config(const std::string& command, const CommonOptions& opt) {
    return json{{"command", command},
                {"input", opt.input},
                {"format", opt.format},
                {"family", opt.family},
                {"partition", opt.partition},
                {"seed", opt.seed},
                {"tol_overrides", opt.tol_overrides},
                {"emit", opt.emit}};
}

void write_report(const json& report, const CommonOptions& opt, const std::string& title) {
    std::string text = opt.emit == "markdown" ? json_to_markdown(report, title)
                                              : report.dump(2) + "\n";
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.out);
        if (!out) throw invalid_parameter("cannot write '" + opt.out + "'");
        out << text;
    }
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_parameter("cannot read matrix file '" + path + "'");
    int n;
    if (!(in >> n) || n <= 0) throw parse_error("matrix file: expected leading dimension");
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(in >> m(i, j)))
                throw parse_error("matrix file: expected " + std::to_string(n * n) + " entries");
    return m;
}

int run_analyze(const CommonOptions& opt) {
    const Tolerances tol = resolve_tolerances(opt);
    const Graph g = load_graph(opt);
    const CliqueCover cover = load_partition(g, opt);
    const SpectralReport rep = analyze(g, cover, tol);

    json report{{"config", resolved_config("analyze", opt)},
                {"graph", {{"graph6", to_graph6(g)}, {"n", g.n}, {"m", g.m()}}},
                {"cover", to_json(cover)},
                {"report", to_json(rep, tol)},
                {"meta", {{"tool", "cliquespec"}, {"version", kVersion}}}};
    bool all_hold = true;
    for (const auto& b : rep.bounds)
        if (b.applicable && !b.holds) all_hold = false;
    report["all_bounds_hold"] = all_hold;
    write_report(report, opt, "spectral analysis");
    return all_hold ? 0 : 2;
}

int run_partition(const CommonOptions& opt, bool exact) {
    const Tolerances tol = resolve_tolerances(opt);
    (void)tol;
    const Graph g = load_graph(opt);
    const CliqueCover cover = exact ? min_clique_partition(g) : greedy_partition(g, opt.seed);
    json report{{"config", resolved_config("partition", opt)},
                {"graph", {{"graph6", to_graph6(g)}, {"n", g.n}, {"m", g.m()}}},
                {"k", cover.k()},
                {"cover", to_json(cover)},
                {"meta", {{"tool", "cliquespec"}, {"version", kVersion}}}};
    write_report(report, opt, "clique partition");
    return 0;
}

int run_energy(const CommonOptions& opt) {
    const Tolerances tol = resolve_tolerances(opt);
    const Graph g = load_graph(opt);
    const CliqueCover cover = load_partition(g, opt);
    const SpectralReport rep = analyze(g, cover, tol);
    json report{{"config", resolved_config("energy", opt)},
                {"graph", {{"graph6", to_graph6(g)}, {"n", g.n}, {"m", g.m()}}},
                {"cover", to_json(cover)},
                {"energies", to_json(rep, tol)["energies"]},
                {"tau", rep.tau},
                {"tbar", rep.tbar},
                {"meta", {{"tool", "cliquespec"}, {"version", kVersion}}}};
    write_report(report, opt, "graph energies");
    return 0;
}

int run_ssp(const CommonOptions& opt, const std::string& matrix_path) {
    const Tolerances tol = resolve_tolerances(opt);
    const Matrix a = read_matrix_file(matrix_path);
    const SspResult res = check_ssp(a, -1.0, nullptr, tol);
    json report{{"config", resolved_config("ssp", opt)},
                {"matrix_file", matrix_path},
                {"result", to_json(res)},
                {"tolerances", to_json(tol)},
                {"meta", {{"tool", "cliquespec"}, {"version", kVersion}}}};
    write_report(report, opt, "SSP check");
    return 0;
}

int run_certify(const CommonOptions& opt, const std::string& name, int s, int n) {
    const Tolerances tol = resolve_tolerances(opt);
    Q2Certificate cert;
    if (name == "prism")
        cert = construct_prism(s, tol);
    else if (name == "prism_join")
        cert = construct_prism_join(s, tol);
    else
        cert = construct_fixed(name, n, tol);
    json report{{"config", resolved_config("certify", opt)},
                {"name", name},
                {"certificate", to_json(cert, tol)},
                {"meta", {{"tool", "cliquespec"}, {"version", kVersion}}}};
    write_report(report, opt, "q=2 certificate");
    return cert.verified ? 0 : 2;
}

int run_conjecture(const CommonOptions& opt, int n) {
    const Tolerances tol = resolve_tolerances(opt);
    const ConjectureReport rep = verify_conjecture(n, opt.seed, tol);
    json report{{"config", resolved_config("conjecture", opt)},
                {"report", to_json(rep, tol)},
                {"meta", {{"tool", "cliquespec"}, {"version", kVersion}}}};
    write_report(report, opt, "conjecture verification");
    return rep.all_certified ? 0 : 2;
}

int run_enumerate(const CommonOptions& opt, int n, int m) {
    std::vector<std::string> codes;
    for (const Graph& g : enumerate_graphs(n, m)) codes.push_back(to_graph6(g));
    json report{{"config", resolved_config("enumerate", opt)},
                {"n", n},
                {"m", m},
                {"count", codes.size()},
                {"classes", codes},
                {"meta", {{"tool", "cliquespec"}, {"version", kVersion}}}};
    write_report(report, opt, "graph enumeration");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertex-clique incidence spectra: analyses, bounds, and q=2 certificates"};
    app.require_subcommand(1);

    CommonOptions opt;

    auto* analyze_cmd = app.add_subcommand("analyze", "spectral report and bound suite");
    add_graph_options(analyze_cmd, opt);
    analyze_cmd->add_option("--partition", opt.partition,
                            "partition mode: exact, greedy, edges, or file:<path>");
    add_output_options(analyze_cmd, opt);

    auto* partition_cmd = app.add_subcommand("partition", "clique partition search");
    add_graph_options(partition_cmd, opt);
    bool partition_exact = false;
    partition_cmd->add_flag("--exact", partition_exact, "exact minimum (n <= 12)");
    add_output_options(partition_cmd, opt);

    auto* energy_cmd = app.add_subcommand("energy", "all energy quantities");
    add_graph_options(energy_cmd, opt);
    energy_cmd->add_option("--partition", opt.partition, "partition mode");
    add_output_options(energy_cmd, opt);

    auto* ssp_cmd = app.add_subcommand("ssp", "strong spectral property of a matrix file");
    std::string matrix_path;
    ssp_cmd->add_option("--matrix", matrix_path, "matrix file: n then n*n entries")->required();
    add_output_options(ssp_cmd, opt);

    auto* certify_cmd = app.add_subcommand("certify", "build a named q=2 certificate");
    std::string cert_name;
    int cert_s = 3, cert_n = 8;
    certify_cmd->add_option("name", cert_name,
                            "prism, prism_join, T1, K13_K3, H2_n7, bull_join, C5_join, "
                            "K3_star, fig414")
        ->required();
    certify_cmd->add_option("--s", cert_s, "prism parameter s >= 3");
    certify_cmd->add_option("--n", cert_n, "vertex count for K3_star");
    add_output_options(certify_cmd, opt);

    auto* conjecture_cmd = app.add_subcommand("conjecture", "verify the n in {7,8} cases");
    int conj_n = 7;
    conjecture_cmd->add_option("--n", conj_n, "7 or 8")->required();
    add_output_options(conjecture_cmd, opt);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "non-isomorphic (n,m) graph classes");
    int enum_n = 0, enum_m = 0;
    enumerate_cmd->add_option("--n", enum_n, "vertex count")->required();
    enumerate_cmd->add_option("--m", enum_m, "edge count")->required();
    add_output_options(enumerate_cmd, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze_cmd)) return run_analyze(opt);
        if (app.got_subcommand(partition_cmd)) return run_partition(opt, partition_exact);
        if (app.got_subcommand(energy_cmd)) return run_energy(opt);
        if (app.got_subcommand(ssp_cmd)) return run_ssp(opt, matrix_path);
        if (app.got_subcommand(certify_cmd)) return run_certify(opt, cert_name, cert_s, cert_n);
        if (app.got_subcommand(conjecture_cmd)) return run_conjecture(opt, conj_n);
        if (app.got_subcommand(enumerate_cmd)) return run_enumerate(opt, enum_n, enum_m);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
