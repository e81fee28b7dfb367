#pragma once

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bounds.hpp"
#include "constructions.hpp"
#include "graph.hpp"
#include "paths.hpp"
#include "search.hpp"
#include "triangles.hpp"
#include "version.hpp"

namespace suspath::cli {

namespace detail {

inline std::string iso8601_now() {
    const std::time_t tt = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&tt, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline std::string join_args(const std::vector<std::string>& args) {
    std::string out = "suspath";
    for (const auto& a : args) {
        out += ' ';
        out += a;
    }
    return out;
}

/// Every run that produces files also writes a manifest naming them, with
/// timestamps kept out of the data files themselves.
struct RunManifest {
    std::string command_line;
    nlohmann::json config_echo;
    std::uint64_t seed = 0;
    std::string started;
    std::string finished;
    std::vector<std::string> outputs;
};

inline void write_manifest(const RunManifest& m, const std::filesystem::path& path) {
    nlohmann::json j{{"command", m.command_line}, {"config", m.config_echo},
                     {"version", std::string(library_version)}, {"seed", m.seed},
                     {"started", m.started},       {"finished", m.finished},
                     {"outputs", m.outputs}};
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write manifest: " + path.string());
    f << j.dump(2) << '\n';
}

inline void write_text_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write file: " + path.string());
    f << contents;
    if (!f) throw std::runtime_error("write failed: " + path.string());
}

inline std::pair<int, int> parse_range(const std::string& spec) {
    const auto dots = spec.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(spec);
            return {v, v};
        }
        const int a = std::stoi(spec.substr(0, dots));
        const int b = std::stoi(spec.substr(dots + 2));
        if (a > b) throw std::invalid_argument("");
        return {a, b};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range '" + spec + "', expected e.g. 4..9");
    }
}

inline std::string record_basename(int n, int k, SearchMode mode) {
    return "ex_n" + std::to_string(n) + "_k" + std::to_string(k) + "_" + to_string(mode);
}

inline int run_construct(const std::vector<std::string>& args, const std::string& kind, int n,
                         int k, const std::string& out_path, std::ostream& out) {
    RunManifest manifest;
    manifest.command_line = join_args(args);
    manifest.started = iso8601_now();

    ConstructionSpec spec;
    if (kind == "Hn") {
        spec.kind = ConstructionKind::hn;
    } else if (kind == "Fnk") {
        spec.kind = ConstructionKind::fnk;
    } else {
        spec.kind = ConstructionKind::hnk;
    }
    spec.n = n;
    spec.k = k;
    if (spec.kind != ConstructionKind::hn && k < 0)
        throw std::invalid_argument(kind + " requires a path parameter k");

    const Graph g = build_construction(spec);
    const std::string g6 = to_graph6(g);
    out << "kind=" << kind << " n=" << g.vertex_count() << " edges=" << g.edge_count()
        << " triangles=" << count_triangles(g);
    if (spec.kind == ConstructionKind::hn) {
        out << " free(k=4)=" << (is_suspension_pk_free(g, 4) ? "yes" : "no");
        out << " free(k=5)=" << (is_suspension_pk_free(g, 5) ? "yes" : "no");
    } else {
        out << " free(k=" << k << ")=" << (is_suspension_pk_free(g, k) ? "yes" : "no");
    }
    out << '\n';
    if (!out_path.empty()) {
        write_text_file(out_path, g6 + "\n");
        manifest.outputs.push_back(out_path);
        manifest.config_echo = {{"kind", kind}, {"n", n}, {"k", k}};
        manifest.finished = iso8601_now();
        write_manifest(manifest, out_path + ".manifest.json");
        out << "wrote " << out_path << '\n';
    } else {
        out << g6 << '\n';
    }
    return 0;
}

inline int run_check(const std::string& path, int k, std::ostream& out, std::ostream& err) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::string line;
    std::size_t lineno = 0, processed = 0, free_count = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty()) continue;
        Graph g;
        try {
            g = from_graph6(line);
        } catch (const graph6_parse_error& e) {
            err << path << ":" << lineno << ": " << e.what() << '\n';
            return 1;
        }
        ++processed;
        out << "graph " << processed << ": n=" << g.vertex_count() << " edges=" << g.edge_count()
            << " triangles=" << count_triangles(g);
        if (const auto violation = find_suspension_violation(g, k)) {
            out << " free=no center=" << violation->center << " path=";
            for (std::size_t i = 0; i < violation->path.size(); ++i)
                out << (i ? " " : "") << violation->path[i];
        } else {
            out << " free=yes";
            ++free_count;
        }
        out << '\n';
    }
    out << "checked " << processed << " graphs, " << free_count << " free, "
        << (processed - free_count) << " not free\n";
    return 0;
}

inline int run_search_cmd(const std::vector<std::string>& args, const SearchConfig& config,
                          const std::string& out_dir, std::ostream& out) {
    RunManifest manifest;
    manifest.command_line = join_args(args);
    manifest.config_echo = to_json(config);
    manifest.seed = config.seed;
    manifest.started = iso8601_now();

    const ExtremalRecord record = run_search(config);

    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    const std::string base = record_basename(config.n, config.k, config.mode);
    const fs::path json_path = fs::path(out_dir) / (base + ".json");
    const fs::path g6_path = fs::path(out_dir) / (base + ".g6");
    write_text_file(json_path, to_json(record).dump(2) + "\n");
    std::string g6_lines;
    for (const auto& w : record.witnesses) g6_lines += w + "\n";
    write_text_file(g6_path, g6_lines);
    manifest.outputs.push_back(json_path.string());
    manifest.outputs.push_back(g6_path.string());
    manifest.finished = iso8601_now();
    write_manifest(manifest, fs::path(out_dir) / (base + ".manifest.json"));

    out << "value=" << record.value << " exact=" << (record.exact ? "yes" : "no")
        << " witness_count_total=" << record.witness_count_total << '\n';
    out << "record: " << json_path.string() << '\n';
    out << "witnesses: " << g6_path.string() << '\n';
    return 0;
}

inline int run_bounds(int n, int k, std::ostream& out) {
    out << to_json(make_bounds_report(n, k)).dump(2) << '\n';
    return 0;
}

inline std::optional<ExtremalRecord> load_cached_record(const std::string& cache_dir, int n,
                                                        int k) {
    namespace fs = std::filesystem;
    const fs::path p =
        fs::path(cache_dir) / (record_basename(n, k, SearchMode::exhaustive) + ".json");
    std::ifstream f(p);
    if (!f) return std::nullopt;
    try {
        nlohmann::json j;
        f >> j;
        return record_from_json(j);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

inline int run_report(const std::vector<std::string>& args, const std::string& range_spec, int k,
                      const std::string& cache_dir, const std::string& out_path,
                      std::ostream& out) {
    const auto [n_lo, n_hi] = parse_range(range_spec);
    std::ostringstream csv;
    csv << "n,k,lower,lower_applicable,exact,upper,f_value,t_hn,t_fnk,t_hnk\n";
    for (int n = n_lo; n <= n_hi; ++n) {
        csv << n << ',' << k << ',';
        // bound columns need n >= k >= 4; cells stay empty otherwise
        if (k >= 4 && n >= k) {
            const PropositionBounds pb = proposition_bounds(n, k);
            csv << pb.lower.str() << ',' << (pb.lower_applicable ? "true" : "false") << ',';
            if (const auto rec = load_cached_record(cache_dir, n, k); rec && rec->exact)
                csv << rec->value;
            csv << ',' << pb.upper.str() << ',';
        } else {
            csv << ",,";
            if (const auto rec = load_cached_record(cache_dir, n, k); rec && rec->exact)
                csv << rec->value;
            csv << ",,";
        }
        if (k >= 1 && n >= 0) csv << f_function(n, k).value;
        csv << ',';
        if (n >= 4) csv << triangles_hn_formula(n);
        csv << ',';
        const int qf = k >= 4 ? (k - 2) / 2 : 0;
        if (qf > 0 && n > 0 && n % (4 * qf) == 0) csv << triangles_fnk_formula(n, k);
        csv << ',';
        const int qh = k >= 4 ? k / 2 : 0;
        if (qh > 0 && n > 0 && n % (2 * qh) == 0) csv << triangles_hnk_formula(n, k);
        csv << '\n';
    }
    if (out_path.empty()) {
        out << csv.str();
    } else {
        RunManifest manifest;
        manifest.command_line = join_args(args);
        manifest.config_echo = {{"n", range_spec}, {"k", k}, {"cache", cache_dir}};
        manifest.started = iso8601_now();
        write_text_file(out_path, csv.str());
        manifest.outputs.push_back(out_path);
        manifest.finished = iso8601_now();
        write_manifest(manifest, out_path + ".manifest.json");
        out << "wrote " << out_path << '\n';
    }
    return 0;
}

}  // namespace detail

/// Entry point shared by the binary and the in-process CLI tests.
/// Exit codes: 0 success, 1 runtime error, 2 parameter error.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact search and verification for triangle maximization in graphs "
                 "with no suspended k-vertex path"};
    app.require_subcommand(1);

    // construct
    std::string c_kind;
    int c_n = 0, c_k = -1;
    std::string c_out;
    auto* construct = app.add_subcommand(
        "construct", "Build an extremal construction, print its counts, emit graph6");
    construct->add_option("kind", c_kind, "Hn | Fnk | Hnk")
        ->required()
        ->check(CLI::IsMember({"Hn", "Fnk", "Hnk"}));
    construct->add_option("n", c_n, "graph order")->required();
    construct->add_option("k", c_k, "path parameter (Fnk and Hnk)");
    construct->add_option("--out", c_out, "output graph6 file");

    // check
    std::string ch_path;
    int ch_k = 0;
    auto* check =
        app.add_subcommand("check", "Check each graph6 line for suspended-path freeness");
    check->add_option("file", ch_path, "graph6 file, one graph per line")->required();
    check->add_option("--k", ch_k, "forbidden suspended path order")->required()->check(CLI::Range(2, 4096));

    // search
    SearchConfig s_cfg;
    std::string s_mode = "exhaustive", s_out = "records";
    auto* search = app.add_subcommand("search", "Search for the extremal triangle count");
    search->add_option("n", s_cfg.n, "graph order")->required();
    search->add_option("k", s_cfg.k, "forbidden suspended path order")->required();
    search->add_option("--mode", s_mode, "exhaustive | local")
        ->check(CLI::IsMember({"exhaustive", "local"}));
    search->add_option("--seed", s_cfg.seed, "random seed (local mode)");
    search->add_option("--budget-secs", s_cfg.time_budget_seconds, "soft wall-clock limit");
    search->add_option("--workers", s_cfg.workers, "worker threads (exhaustive mode)");
    search->add_option("--restarts", s_cfg.restarts, "restarts (local mode)");
    search->add_option("--max-witnesses", s_cfg.max_witnesses, "witnesses to serialize");
    search->add_option("--out", s_out, "record directory (default: records)");

    // bounds
    int b_n = 0, b_k = 0;
    auto* bounds = app.add_subcommand("bounds", "Print the bound report for (n, k) as JSON");
    bounds->add_option("n", b_n, "graph order")->required();
    bounds->add_option("k", b_k, "path parameter")->required();

    // report
    std::string r_range, r_cache = "records", r_out;
    int r_k = 0;
    auto* report = app.add_subcommand(
        "report",
        "CSV table per n: columns n,k,lower,lower_applicable,exact,upper,f_value,t_hn,t_fnk,t_hnk; "
        "'exact' comes from cached exhaustive records; unknown cells stay empty");
    report->add_option("--n", r_range, "order range, e.g. 4..9")->required();
    report->add_option("--k", r_k, "path parameter")->required();
    report->add_option("--cache", r_cache, "record directory (default: records)");
    report->add_option("--out", r_out, "output CSV file (default: stdout)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand(construct)) return detail::run_construct(args, c_kind, c_n, c_k, c_out, out);
        if (app.got_subcommand(check)) return detail::run_check(ch_path, ch_k, out, err);
        if (app.got_subcommand(search)) {
            s_cfg.mode = search_mode_from_string(s_mode);
            return detail::run_search_cmd(args, s_cfg, s_out, out);
        }
        if (app.got_subcommand(bounds)) return detail::run_bounds(b_n, b_k, out);
        if (app.got_subcommand(report))
            return detail::run_report(args, r_range, r_k, r_cache, r_out, out);
    } catch (const graph6_parse_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace suspath::cli
