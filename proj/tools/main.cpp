#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "edgering/errors.hpp"
#include "edgering/json_io.hpp"

namespace {

using namespace edgering;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Input: return 1;
        case ErrorKind::Budget: return 2;
        case ErrorKind::Anomaly: return 3;
    }
    return 1;
}

FamilyKind parse_kind(const std::string& name) {
    if (name == "disjoint") return FamilyKind::DisjointPair;
    if (name == "common") return FamilyKind::OneCommonVertex;
    if (name == "even") return FamilyKind::EvenEar;
    if (name == "odd") return FamilyKind::OddEar;
    throw input_error("InvalidFamilyParameters", "unknown kind " + name);
}

void emit(const json& report, const std::string& format) {
    if (format == "table") {
        std::cout << render_table(report);
    } else {
        std::cout << report.dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "edgering: edge polytopes, Ehrhart h*-data, and graded Betti numbers "
        "of edge rings of bipartite graphs"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    Budgets budgets;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--budget-cycles", budgets.max_cycles,
                   "cap on enumerated cycles");
    app.add_option("--budget-points", budgets.max_points,
                   "cap on enumerated lattice points");

    std::string input;
    std::string kind_name;
    int j_max = 0, n_max = 6, q = 0, k = 0, m = 0, verify_budget = 10;
    bool no_verify = false;

    auto* analyze_cmd = app.add_subcommand(
        "analyze", "graph structure and Ehrhart profile");
    analyze_cmd->add_option("--input", input, "graph file")->required();

    auto* betti_cmd = app.add_subcommand(
        "betti", "graded Betti numbers of the edge ring, up to degree jmax");
    betti_cmd->add_option("--input", input, "graph file")->required();
    betti_cmd->add_option("--jmax", j_max, "largest multidegree total")
        ->required();

    auto* lemma_cmd = app.add_subcommand(
        "lemma-witness",
        "re-derive the interior-point certificate of a ring family member");
    lemma_cmd->add_option("--kind", kind_name, "family kind")
        ->required()
        ->check(CLI::IsMember({"disjoint", "common", "even", "odd"}));
    lemma_cmd->add_option("--q", q, "half the even girth")->required();
    lemma_cmd->add_option("--k", k, "ear anchor parameter");
    lemma_cmd->add_option("--m", m, "ear length parameter");

    auto* scan_cmd = app.add_subcommand(
        "scan", "exhaustive check over small connected bipartite graphs");
    scan_cmd->add_option("--nmax", n_max, "largest vertex count");
    scan_cmd->add_option("--verify-budget", verify_budget,
                         "verify Betti tables up to this many edges");

    auto* classify_cmd = app.add_subcommand(
        "classify", "linearity prediction and verification for one graph");
    classify_cmd->add_option("--input", input, "graph file")->required();
    classify_cmd->add_flag("--no-verify", no_verify,
                           "skip the Betti verification pass");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        int rc = 0;
        json report;
        if (*analyze_cmd) {
            report = analyze_report(read_graph_file(input), budgets);
        } else if (*betti_cmd) {
            report = betti_report(read_graph_file(input), j_max, budgets);
        } else if (*lemma_cmd) {
            FamilySpec spec;
            spec.kind = parse_kind(kind_name);
            spec.q = q;
            spec.k = k;
            spec.m = m;
            report = lemma_report(spec, budgets);
        } else if (*scan_cmd) {
            ScanReport rep = scan(n_max, verify_budget, budgets);
            report = scan_json(rep);
            if (!rep.counterexamples.empty() || !rep.anomalies.empty()) {
                rc = 3;
            }
        } else if (*classify_cmd) {
            report = classification_json(
                classify(read_graph_file(input), !no_verify, budgets));
        }
        emit(report, format);
        return rc;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
