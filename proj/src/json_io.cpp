#include "cliquespec/json_io.hpp"

#include <sstream>

#include "cliquespec/error.hpp"

namespace cliquespec {

json to_json(const Tolerances& tol) {
    return json{{"symmetry_rel", tol.symmetry_rel},
                {"jacobi_off_rel", tol.jacobi_off_rel},
                {"jacobi_max_sweeps", tol.jacobi_max_sweeps},
                {"cluster_rel", tol.cluster_rel},
                {"rank_residual_factor", tol.rank_residual_factor},
                {"gram_schmidt_ortho", tol.gram_schmidt_ortho},
                {"psd_clamp_rel", tol.psd_clamp_rel},
                {"pattern_zero_rel", tol.pattern_zero_rel},
                {"inequality_slack", tol.inequality_slack},
                {"equality_abs", tol.equality_abs},
                {"tau_tie", tol.tau_tie},
                {"certificate_gram", tol.certificate_gram},
                {"search_stop", tol.search_stop},
                {"search_entry_floor", tol.search_entry_floor}};
}

json to_json(const CliqueCover& cover) {
    return json{{"kind", cover.kind == CoverKind::partition ? "partition" : "cover"},
                {"cliques", cover.cliques},
                {"provenance", cover.provenance}};
}

CliqueCover cover_from_json(const Graph& g, const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind != "partition" && kind != "cover")
        throw parse_error("cover JSON: kind must be 'partition' or 'cover'");
    auto cliques = j.at("cliques").get<std::vector<std::vector<int>>>();
    CliqueCover cover = validate_cover(
        g, std::move(cliques), kind == "partition" ? CoverKind::partition : CoverKind::cover);
    if (j.contains("provenance")) cover.provenance = j["provenance"].get<std::string>();
    return cover;
}

json to_json(const BoundRecord& r) {
    return json{{"theorem_id", r.theorem_id}, {"lhs", r.lhs},   {"rhs", r.rhs},
                {"slack", r.slack},           {"holds", r.holds}, {"applicable", r.applicable},
                {"note", r.note},
                {"tolerances",
                 {{"kind", r.is_equality ? "equality" : "inequality"}, {"value", r.tolerance}}}};
}

json to_json(const SpectralReport& rep, const Tolerances& tol) {
    json bounds = json::array();
    for (const auto& b : rep.bounds) bounds.push_back(to_json(b));
    return json{{"adjacency_spectrum", rep.adjacency_spectrum},
                {"signless_laplacian_spectrum", rep.signless_laplacian_spectrum},
                {"inertia",
                 {{"positive", rep.inertia.positive},
                  {"negative", rep.inertia.negative},
                  {"nullity", rep.inertia.nullity}}},
                {"energies",
                 {{"adjacency", rep.energy},
                  {"laplacian_plus", rep.laplacian_energy_plus},
                  {"incidence", rep.ie},
                  {"clique_incidence", rep.ie_f},
                  {"qf", rep.qf_energy},
                  {"rf", rep.rf_energy},
                  {"partition_graph", rep.pg_energy},
                  {"line_graph", rep.line_graph_energy}}},
                {"tbar", rep.tbar},
                {"tau", rep.tau},
                {"bounds", bounds},
                {"tolerances", to_json(tol)}};
}

json to_json(const SspResult& r) {
    json out{{"kernel_dimension", r.kernel_dimension},
             {"has_ssp", r.has_ssp},
             {"witness_residual", r.witness_residual}};
    if (r.exact_nullity) out["exact_nullity"] = *r.exact_nullity;
    if (r.witness) {
        std::vector<std::vector<double>> w(r.witness->rows(),
                                           std::vector<double>(r.witness->cols()));
        for (int i = 0; i < r.witness->rows(); ++i)
            for (int j = 0; j < r.witness->cols(); ++j) w[i][j] = (*r.witness)(i, j);
        out["witness"] = w;
    }
    return out;
}

json to_json(const Q2Certificate& cert, const Tolerances& tol) {
    std::vector<std::vector<double>> entries(cert.m.rows(), std::vector<double>(cert.m.cols()));
    for (int i = 0; i < cert.m.rows(); ++i)
        for (int j = 0; j < cert.m.cols(); ++j) entries[i][j] = cert.m(i, j);
    json clusters = json::array();
    for (auto [value, mult] : cert.spectrum_clusters)
        clusters.push_back(json{{"value", value}, {"multiplicity", mult}});
    json out{{"target_graph6", to_graph6(cert.target)},
             {"matrix", entries},
             {"c", cert.c},
             {"k", cert.k},
             {"spectrum_clusters", clusters},
             {"ssp", to_json(cert.ssp)},
             {"provenance", cert.provenance},
             {"verified", cert.verified},
             {"tolerances", to_json(tol)}};
    if (!cert.exact_entries.empty()) out["exact_entries"] = cert.exact_entries;
    if (!cert.failure_reason.empty()) out["failure_reason"] = cert.failure_reason;
    return out;
}

Q2Certificate certificate_from_json(const json& j, const Tolerances& tol) {
    Graph target = parse_graph6(j.at("target_graph6").get<std::string>());
    auto entries = j.at("matrix").get<std::vector<std::vector<double>>>();
    if (entries.empty()) throw parse_error("certificate JSON: empty matrix");
    Matrix m(static_cast<int>(entries.size()), static_cast<int>(entries[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int c = 0; c < m.cols(); ++c) m(i, c) = entries[i][c];
    std::vector<std::string> exact;
    if (j.contains("exact_entries")) exact = j["exact_entries"].get<std::vector<std::string>>();
    return make_certificate(std::move(target), std::move(m), j.at("c").get<double>(),
                            j.at("provenance").get<std::string>(), nullptr, std::move(exact), tol);
}

json to_json(const ConjectureReport& rep, const Tolerances& tol) {
    json cases = json::array();
    for (const auto& c : rep.cases)
        cases.push_back(json{{"h_graph6", c.h_graph6},
                             {"edges", c.edges},
                             {"provenance", c.provenance},
                             {"certified", c.certified},
                             {"c", c.c},
                             {"k", c.k},
                             {"detail", c.detail}});
    return json{{"n", rep.n},
                {"max_removed", rep.max_removed},
                {"cases", cases},
                {"all_certified", rep.all_certified},
                {"uncertified", rep.uncertified},
                {"tolerances", to_json(tol)}};
}

namespace {

void render(const json& j, std::ostringstream& out, int depth) {
    const std::string indent(static_cast<size_t>(depth) * 2, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_object() || it.value().is_array()) {
                out << indent << "- **" << it.key() << "**:\n";
                render(it.value(), out, depth + 1);
            } else {
                out << indent << "- **" << it.key() << "**: " << it.value().dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& item : j) {
            if (item.is_object() || item.is_array()) {
                out << indent << "-\n";
                render(item, out, depth + 1);
            } else {
                out << indent << "- " << item.dump() << "\n";
            }
        }
    } else {
        out << indent << j.dump() << "\n";
    }
}

} // namespace

std::string json_to_markdown(const json& j, const std::string& title) {
    std::ostringstream out;
    out << "# " << title << "\n\n";
    render(j, out, 0);
    return out.str();
}

} // namespace cliquespec
