#include "nzpoly/cli.hpp"

#include "nzpoly/coeff_vectors.hpp"
#include "nzpoly/corpus.hpp"
#include "nzpoly/families.hpp"
#include "nzpoly/report_json.hpp"
#include "nzpoly/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace nzpoly {

namespace {

std::vector<std::string> parse_check_filter(const std::string& checks) {
    if (checks == "all" || checks.empty()) return {};
    std::vector<std::string> names;
    std::stringstream ss(checks);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (std::find(all_check_names().begin(), all_check_names().end(), item) ==
            all_check_names().end()) {
            throw CLI::ValidationError("--checks", "unknown check '" + item + "'");
        }
        names.push_back(item);
    }
    return names;
}

int cmd_analyze(const std::string& graph_spec, const std::string& checks, int kmax,
                const std::string& format, const std::string& out_path) {
    Graph g = generate_family(graph_spec);
    VerifyOptions options;
    options.k_max = kmax;
    options.graph_id = graph_spec;
    options.checks = parse_check_filter(checks);
    TheoremReport report = verify_graph(g, options);

    std::string rendered;
    if (format == "json") {
        rendered = report_to_json(report).dump(2) + "\n";
    } else if (format == "table") {
        rendered = report_to_table(report);
    } else {
        throw CLI::ValidationError("--format", "expected json or table");
    }
    if (out_path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw CLI::ValidationError("--out", "cannot write '" + out_path + "'");
        out << rendered;
    }
    return report.all_passed() ? 0 : 1;
}

int cmd_corpus(int max_vertices, int max_edges, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    std::vector<CorpusEntry> entries = corpus_graphs(max_vertices, max_edges);
    std::vector<std::optional<TheoremReport>> slots(entries.size());
    // per-graph pipelines are independent; reports land in their slot and
    // are merged below in canonical (enumeration) order
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < entries.size(); ++i) {
        VerifyOptions options;
        options.graph_id = entries[i].id;
        slots[i] = verify_graph(entries[i].graph, options);
    }
    std::vector<TheoremReport> reports;
    reports.reserve(entries.size());
    for (auto& slot : slots) reports.push_back(std::move(*slot));
    int failures = 0;
    nlohmann::json summary = nlohmann::json::array();
    for (const TheoremReport& report : reports) {
        std::ofstream out(fs::path(out_dir) / (report.graph_id + ".json"), std::ios::binary);
        out << report_to_json(report).dump(2) << "\n";
        int graph_failures = 0;
        for (const auto& [name, result] : report.checks) {
            (void)name;
            if (result.status == CheckStatus::fail) ++graph_failures;
        }
        failures += graph_failures;
        summary.push_back(nlohmann::json{{"graph", report.graph_id},
                                         {"failed_checks", graph_failures}});
    }
    {
        std::ofstream out(fs::path(out_dir) / "summary.json", std::ios::binary);
        out << summary.dump(2) << "\n";
    }
    std::cout << entries.size() << " graphs analyzed, " << failures << " failed checks\n";
    return failures == 0 ? 0 : 1;
}

int cmd_tables(int eulerian_rows, int macmahon_rows) {
    if (eulerian_rows > 0) {
        std::cout << "Eulerian numbers A(n,i), i = 0..n:\n";
        for (int n = 1; n <= eulerian_rows; ++n) {
            for (int i = 0; i <= n; ++i) {
                std::cout << (i ? " " : "") << eulerian(n, i).str();
            }
            std::cout << "\n";
        }
        std::cout << "conventions: A(n,0) = 0 and A(n,n+1) = 0\n";
    }
    if (macmahon_rows > 0) {
        std::cout << "MacMahon numbers B(n,i), i = 0..n:\n";
        for (int n = 1; n <= macmahon_rows; ++n) {
            for (int i = 0; i <= n; ++i) {
                std::cout << (i ? " " : "") << macmahon(n, i).str();
            }
            std::cout << "\n";
        }
        std::cout << "conventions: B(n,0) = 0\n";
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"nzpoly: exact flow/tension polynomial and lattice-polytope checks"};
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand("analyze", "verify all theorem checks on one graph");
    std::string graph_spec;
    std::string checks = "all";
    int kmax = 3;
    std::string format = "table";
    std::string out_path;
    analyze->add_option("--graph", graph_spec,
                        "graph spec: complete:n, cycle:n, path:n, star:n, bouquet:r, "
                        "theta:a:b:c, or file:PATH")
        ->required();
    analyze->add_option("--checks", checks, "all or comma-separated check names");
    analyze->add_option("--kmax", kmax, "reflexivity dilate bound")->check(CLI::PositiveNumber);
    analyze->add_option("--format", format, "json or table");
    analyze->add_option("--out", out_path, "write the report to a file instead of stdout");

    auto* corpus = app.add_subcommand("corpus", "verify every small connected simple graph");
    int max_vertices = 5;
    int max_edges = 8;
    std::string out_dir;
    corpus->add_option("--max-vertices", max_vertices, "largest vertex count (<= 7)")
        ->check(CLI::Range(1, 7));
    corpus->add_option("--max-edges", max_edges, "largest edge count")->check(CLI::PositiveNumber);
    corpus->add_option("--out", out_dir, "directory for per-graph reports")->required();

    auto* tables = app.add_subcommand("tables", "print Eulerian / MacMahon number triangles");
    int eulerian_rows = 0;
    int macmahon_rows = 0;
    tables->add_option("--eulerian", eulerian_rows, "print A(n,.) rows for n = 1..N");
    tables->add_option("--macmahon", macmahon_rows, "print B(n,.) rows for n = 1..N");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (analyze->parsed()) {
            return cmd_analyze(graph_spec, checks, kmax, format, out_path);
        }
        if (corpus->parsed()) {
            return cmd_corpus(max_vertices, max_edges, out_dir);
        }
        if (tables->parsed()) {
            return cmd_tables(eulerian_rows, macmahon_rows);
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace nzpoly
