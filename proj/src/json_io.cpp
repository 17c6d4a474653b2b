#include "edgering/json_io.hpp"

#include <sstream>

#include "edgering/errors.hpp"
#include "edgering/toric.hpp"

namespace edgering {

namespace {

const Int kDoubleExact = (Int(1) << 53) - 1;

json int_vector_json(const std::vector<Int>& xs) {
    json arr = json::array();
    for (const Int& x : xs) arr.push_back(int_json(x));
    return arr;
}

json rat_vector_json(const std::vector<Rat>& xs) {
    json arr = json::array();
    for (const Rat& x : xs) arr.push_back(rat_json(x));
    return arr;
}

}  // namespace

json int_json(const Int& x) {
    if (abs(x) <= kDoubleExact) {
        return json(x.get_si());
    }
    return json(x.get_str());
}

json rat_json(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    return json(c.get_num().get_str() + "/" + c.get_den().get_str());
}

json graph_json(const SimpleGraph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges) edges.push_back(json::array({u, v}));
    return json{{"n_vertices", g.n_vertices}, {"edges", edges}};
}

json betti_json(const BettiTable& table) {
    json entries = json::array();
    for (const auto& [key, beta] : table.entries) {
        entries.push_back(json::array(
            {key.first, key.second, int_json(beta)}));
    }
    return json{{"complete", table.complete},
                {"j_max", table.j_window},
                {"entries", entries}};
}

json witness_json(const Witness& w) {
    json cycles = json::array();
    for (const Cycle& c : w.cycles) cycles.push_back(c.vertices);
    json j;
    j["kind"] = witness_kind_name(w.kind);
    j["q"] = w.q;
    j["subgraph"] = graph_to_text(w.subgraph);
    j["cycles"] = cycles;
    if (!w.ear_path.empty()) {
        j["ear_path"] = w.ear_path;
        j["k"] = w.k;
        j["m"] = w.m;
    }
    return j;
}

json classification_json(const ClassificationReport& rep) {
    auto opt_int = [](const std::optional<int>& x) {
        return x ? json(*x) : json(nullptr);
    };
    auto opt_bool = [](const std::optional<bool>& x) {
        return x ? json(*x) : json(nullptr);
    };
    json j;
    j["forest"] = rep.forest;
    j["q"] = opt_int(rep.q);
    j["theorem_applies"] = rep.theorem_applies;
    j["cycle_rank"] = rep.cycle_rank;
    j["predicted_linear"] = rep.predicted_linear;
    j["verified_linear"] = opt_bool(rep.verified_linear);
    j["verified_complete"] = opt_bool(rep.verified_complete);
    j["reg_lower"] = opt_int(rep.reg_lower);
    j["is_hypersurface"] = rep.is_hypersurface;
    j["deg"] = opt_int(rep.deg);
    j["codeg"] = opt_int(rep.codeg);
    j["witness"] = rep.witness ? witness_json(*rep.witness) : json(nullptr);
    j["betti"] = rep.betti ? betti_json(*rep.betti) : json(nullptr);
    j["anomalies"] = rep.anomalies;
    return j;
}

json scan_json(const ScanReport& rep) {
    json j;
    j["n_max"] = rep.n_max;
    j["verify_budget"] = rep.verify_budget;
    j["total_graphs"] = rep.total_graphs;
    j["forests"] = rep.forests;
    j["girth4"] = rep.girth4;
    j["girth6_plus"] = rep.girth6_plus;
    j["verified"] = rep.verified;
    j["verified_linear"] = rep.verified_linear;
    j["hypersurfaces"] = rep.hypersurfaces;
    j["rank1"] = rep.rank1;
    j["rank1_verified_linear"] = rep.rank1_verified_linear;
    j["rank1_unverified"] = rep.rank1_unverified;
    j["counterexamples"] = rep.counterexamples;
    j["anomalies"] = rep.anomalies;
    return j;
}

json analyze_report(const SimpleGraph& g, const Budgets& budgets) {
    StructureInfo info = analyze_structure(g);
    json j;
    j["graph"] = graph_json(g);
    j["n_edges"] = g.n_edges();
    j["components"] = info.components;
    j["c0"] = info.bipartite_components;
    j["bipartite"] = info.bipartite;
    j["cycle_rank"] = info.cycle_rank;
    j["forest"] = info.cycle_rank == 0;

    if (info.bipartite) {
        json left = json::array(), right = json::array();
        for (int v = 1; v <= g.n_vertices; ++v) {
            (info.side_of[v] == 0 ? left : right).push_back(v);
        }
        j["bipartition"] = json::array({left, right});
    } else {
        j["bipartition"] = nullptr;
    }

    auto eg = even_girth(g, budgets);
    j["even_girth"] = eg ? json(*eg) : json(nullptr);

    if (g.n_edges() == 0) {
        j["dim"] = nullptr;
        j["counts"] = nullptr;
        j["hstar"] = nullptr;
        j["degree"] = nullptr;
        j["codegree"] = nullptr;
        j["normalized_volume"] = nullptr;
    } else {
        HStarProfile prof = hstar_profile(edge_polytope(g), budgets);
        j["dim"] = prof.dim;
        j["counts"] = int_vector_json(prof.counts);
        j["hstar"] = int_vector_json(prof.hstar);
        j["degree"] = prof.degree;
        j["codegree"] = prof.codegree;
        j["normalized_volume"] = int_json(prof.normalized_volume);
    }

    if (info.bipartite && g.n_edges() > 0) {
        auto gens = ideal_generators(g, budgets);
        std::map<int, int> by_degree;
        for (const auto& gen : gens) ++by_degree[gen.degree];
        json degrees = json::object();
        for (const auto& [deg, count] : by_degree) {
            degrees[std::to_string(deg)] = count;
        }
        j["generators"] = json{{"count", gens.size()},
                               {"by_degree", degrees}};
    } else {
        j["generators"] = nullptr;
    }
    return j;
}

json betti_report(const SimpleGraph& g, int j_max, const Budgets& budgets) {
    return betti_json(betti_table(g, j_max, budgets));
}

json lemma_report(const FamilySpec& spec, const Budgets& budgets) {
    FamilyCertificate cert = family_certificate(spec);
    EdgePolytope poly = edge_polytope(cert.graph);
    int dim = polytope_dimension(poly);

    MembershipCertificate mem = membership(poly, cert.point, cert.dilation);
    if (mem.status != Position::Interior) {
        throw anomaly_error("AssertionFailure",
                            "family point is not interior at dilation " +
                                std::to_string(cert.dilation));
    }
    int codeg = codegree_by_search(poly, budgets);
    if (codeg > cert.dilation) {
        throw anomaly_error(
            "AssertionFailure",
            "codegree search missed the certified interior dilation");
    }
    int deg = dim + 1 - codeg;
    bool degree_ok = deg >= spec.q;
    if (!degree_ok) {
        throw anomaly_error("AssertionFailure",
                            "family degree " + std::to_string(deg) +
                                " fell below q = " + std::to_string(spec.q));
    }

    json j;
    j["family"] = json{{"kind", family_kind_name(spec.kind)},
                       {"q", spec.q},
                       {"k", spec.k},
                       {"m", spec.m}};
    j["graph"] = graph_json(cert.graph);
    j["dim"] = dim;
    j["dilation"] = cert.dilation;
    j["point"] = cert.point;
    j["certificate_weights"] = rat_vector_json(cert.weights);
    json memj;
    memj["status"] = "Interior";
    memj["dilation"] = mem.dilation;
    memj["barycentric_margin"] = rat_json(mem.barycentric_margin);
    memj["weights"] =
        mem.weights ? rat_vector_json(*mem.weights) : json(nullptr);
    j["membership"] = memj;
    j["codegree"] = codeg;
    j["degree"] = deg;
    j["required_degree"] = spec.q;
    j["degree_ok"] = degree_ok;
    return j;
}

namespace {

bool scalar_array(const json& j) {
    for (const auto& el : j) {
        if (el.is_structured()) return false;
    }
    return true;
}

void render_value(const json& j, const std::string& prefix,
                  std::ostringstream& out);

void render_line(const std::string& key, const json& value,
                 const std::string& prefix, std::ostringstream& out) {
    if (value.is_structured() && !value.empty() &&
        !(value.is_array() && scalar_array(value))) {
        out << prefix << key << ":\n";
        render_value(value, prefix + "  ", out);
    } else {
        out << prefix << key << " = ";
        if (value.is_string()) {
            std::string s = value.get<std::string>();
            if (s.find('\n') != std::string::npos) {
                out << "\n";
                std::istringstream lines(s);
                std::string line;
                while (std::getline(lines, line)) {
                    out << prefix << "  | " << line << "\n";
                }
                return;
            }
            out << s << "\n";
        } else {
            out << value.dump() << "\n";
        }
    }
}

void render_value(const json& j, const std::string& prefix,
                  std::ostringstream& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            render_line(key, value, prefix, out);
        }
    } else if (j.is_array()) {
        int index = 0;
        for (const auto& el : j) {
            render_line("[" + std::to_string(index++) + "]", el, prefix, out);
        }
    }
}

}  // namespace

std::string render_table(const json& j) {
    std::ostringstream out;
    if (j.is_structured()) {
        render_value(j, "", out);
    } else {
        out << j.dump() << "\n";
    }
    return out.str();
}

}  // namespace edgering
