// Acceptance suite: runs every top-level criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code is the number of
// failed criteria.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <suspath/suspath.hpp>

#include "test_support.hpp"

using namespace suspath;

namespace {

int g_failures = 0;

void report(const std::string& name, bool pass, const std::string& detail, double seconds) {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << name;
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << " (" << seconds << "s)\n";
    if (!pass) ++g_failures;
}

template <typename F>
void criterion(const std::string& name, F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(name, pass, detail, secs);
}

int search_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

ExtremalRecord run_exhaustive(int n, int k) {
    SearchConfig c;
    c.n = n;
    c.k = k;
    c.mode = SearchMode::exhaustive;
    c.workers = search_workers();
    return exhaustive_search(c);
}

// Exact values for the order-5 forbidden suspension at small orders, pinned
// from audited exhaustive runs (n <= 7 double-checked against a scan of all
// labeled graphs with a brute-force embedding filter; witnesses re-verified
// and hand-checked: two complete graphs sharing one vertex, K5*K_{n-4}).
constexpr std::int64_t pinned_k5_values[] = {10, 10, 11, 14, 20};  // n = 5..9

std::vector<ExtremalRecord> g_records_k4;
std::vector<ExtremalRecord> g_records_k5;

}  // namespace

int main() {
    std::cout << "acceptance suite, library version " << library_version << "\n";

    criterion("exact ladder for forbidden suspended 4-path (n=4..9)", [&](std::string& detail) {
        const std::int64_t expected[] = {4, 4, 5, 8, 8, 10};
        bool ok = true;
        std::ostringstream got;
        for (int n = 4; n <= 9; ++n) {
            const ExtremalRecord rec = run_exhaustive(n, 4);
            g_records_k4.push_back(rec);
            got << (n > 4 ? "," : "") << rec.value;
            if (!rec.exact || rec.value != expected[n - 4]) ok = false;
        }
        detail = "values " + got.str() + " expected 4,4,5,8,8,10";
        return ok;
    });

    criterion("exact ladder for forbidden suspended 5-path (n=5..9)", [&](std::string& detail) {
        bool ok = true;
        std::ostringstream got;
        for (int n = 5; n <= 9; ++n) {
            const ExtremalRecord rec = run_exhaustive(n, 5);
            g_records_k5.push_back(rec);
            got << (n > 5 ? "," : "") << rec.value;
            if (!rec.exact) ok = false;
            if (rec.value != pinned_k5_values[n - 5]) ok = false;
            if (n == 5) {
                if (rec.witness_count_total != 1) ok = false;
                if (rec.witnesses.empty() ||
                    canonical_form(from_graph6(rec.witnesses[0])) !=
                        canonical_form(complete_graph(5)))
                    ok = false;
            }
        }
        std::ostringstream want;
        for (int i = 0; i < 5; ++i) want << (i ? "," : "") << pinned_k5_values[i];
        detail = "values " + got.str() + " expected " + want.str() + ", unique K5 at n=5";
        return ok;
    });

    criterion("construction triangle identities", [&](std::string& detail) {
        for (int n = 4; n <= 200; ++n)
            if (count_triangles(build_hn(n)) != static_cast<std::int64_t>(n) * n / 8) {
                detail = "matching construction mismatch at n=" + std::to_string(n);
                return false;
            }
        for (const int k : {4, 6, 8, 10}) {
            const int qf = (k - 2) / 2;
            for (int n = 4 * qf; n <= 240; n += 4 * qf)
                if (count_triangles(build_fnk(n, k)) != triangles_fnk_formula(n, k)) {
                    detail = "bipartite blocks mismatch at (" + std::to_string(n) + "," +
                             std::to_string(k) + ")";
                    return false;
                }
            const int qh = k / 2;
            for (int n = 2 * qh; n <= 240; n += 2 * qh)
                if (count_triangles(build_hnk(n, k)) != triangles_hnk_formula(n, k)) {
                    detail = "clique blocks mismatch at (" + std::to_string(n) + "," +
                             std::to_string(k) + ")";
                    return false;
                }
        }
        detail = "orders up to 200 (matching) and 240 (blocks), exact equality";
        return true;
    });

    criterion("construction freeness certificates", [&](std::string& detail) {
        for (int n = 4; n <= 60; ++n) {
            const Graph g = build_hn(n);
            if (!is_suspension_pk_free(g, 4) || !is_suspension_pk_free(g, 5)) {
                detail = "matching construction not free at n=" + std::to_string(n);
                return false;
            }
        }
        for (int k = 4; k <= 8; ++k) {
            const int qf = (k - 2) / 2;
            for (int n = 4 * qf; n <= 120; n += 4 * qf)
                if (!is_suspension_pk_free(build_fnk(n, k), k)) {
                    detail = "bipartite blocks not free at (" + std::to_string(n) + "," +
                             std::to_string(k) + ")";
                    return false;
                }
            const int qh = k / 2;
            for (int n = 2 * qh; n <= 120; n += 2 * qh)
                if (!is_suspension_pk_free(build_hnk(n, k), k)) {
                    detail = "clique blocks not free at (" + std::to_string(n) + "," +
                             std::to_string(k) + ")";
                    return false;
                }
        }
        detail = "all constructions free at every tested order";
        return true;
    });

    criterion("clique blocks dominate bipartite blocks", [&](std::string& detail) {
        int sites = 0;
        for (const int k : {6, 8, 10}) {
            const int qf = (k - 2) / 2, qh = k / 2;
            for (int n = 1; n <= 960; ++n) {
                if (n % (4 * qf) != 0 || n % (2 * qh) != 0) continue;
                ++sites;
                if (triangles_hnk_formula(n, k) <= triangles_fnk_formula(n, k)) {
                    detail = "no dominance at (" + std::to_string(n) + "," + std::to_string(k) + ")";
                    return false;
                }
            }
        }
        detail = "strict at all " + std::to_string(sites) + " comparable orders up to 960";
        return true;
    });

    criterion("bound sandwich around every exact value", [&](std::string& detail) {
        int checked = 0;
        auto check_all = [&](const std::vector<ExtremalRecord>& records) {
            for (const ExtremalRecord& rec : records) {
                if (!rec.exact || rec.n < rec.k) continue;
                const PropositionBounds pb = proposition_bounds(rec.n, rec.k);
                if (pb.lower_applicable && pb.lower > Rational(rec.value)) return false;
                if (Rational(rec.value) > pb.upper) return false;
                ++checked;
            }
            return true;
        };
        const bool ok = check_all(g_records_k4) && check_all(g_records_k5);
        detail = std::to_string(checked) + " exact values inside their bounds";
        return ok;
    });

    criterion("oracle equivalence on all 7-vertex classes", [&](std::string& detail) {
        std::uint64_t classes = 0, path_checks = 0;
        bool ok = true;
        for (int n = 1; n <= 7 && ok; ++n) {
            EnumerationOptions opt;
            opt.n = n;
            SearchStats stats;
            enumerate_classes(
                opt,
                [&](const Graph& g) {
                    if (!ok) return;
                    ++classes;
                    if (n == 7) {
                        for (const int k : {4, 5})
                            if (is_suspension_pk_free(g, k) !=
                                testsupport::suspension_pk_free_brute(g, k))
                                ok = false;
                    }
                    const int longest = testsupport::longest_path_brute(g);
                    for (int k = 1; k <= 8; ++k, ++path_checks)
                        if (has_path(g, k) != (k <= longest)) ok = false;
                },
                stats);
        }
        detail = std::to_string(classes) + " classes, " + std::to_string(path_checks) +
                 " path queries, zero disagreements";
        return ok;
    });

    criterion("structural invariants on random graphs", [&](std::string& detail) {
        std::mt19937_64 rng(20240817);
        // triangle handshake and partition identity
        for (int rep = 0; rep < 500; ++rep) {
            const int n = 1 + static_cast<int>(rng() % 12);
            const Graph g = testsupport::random_graph(rng, n, 0.5);
            std::int64_t sum = 0;
            for (int v = 0; v < n; ++v) sum += count_triangles_at(g, v);
            if (sum != 3 * count_triangles(g)) {
                detail = "handshake violation";
                return false;
            }
            std::vector<int> part1;
            for (int v = 0; v < n; ++v)
                if (rng() & 1) part1.push_back(v);
            const TriangleClassification c =
                classify_triangles(g, Bipartition::from_part1(g, part1));
            if (c.total() != count_triangles(g)) {
                detail = "partition identity violation";
                return false;
            }
        }
        // edge-addition monotonicity
        for (int rep = 0; rep < 500; ++rep) {
            const int n = 2 + static_cast<int>(rng() % 11);
            Graph g = testsupport::random_graph(rng, n, 0.4);
            const std::int64_t before = count_triangles(g);
            const int i = static_cast<int>(rng() % n);
            const int j = (i + 1 + static_cast<int>(rng() % (n - 1))) % n;
            g.add_edge(i, j);
            if (count_triangles(g) < before) {
                detail = "monotonicity violation";
                return false;
            }
        }
        // freeness heredity under edge deletion
        int checked = 0;
        while (checked < 500) {
            const int n = 4 + static_cast<int>(rng() % 7);
            const int k = 4 + static_cast<int>(rng() % 3);
            Graph g = testsupport::random_graph(rng, n, 0.3);
            while (!is_suspension_pk_free(g, k)) {
                std::vector<std::pair<int, int>> edges;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (g.has_edge(i, j)) edges.emplace_back(i, j);
                const auto [a, b] = edges[rng() % edges.size()];
                g.remove_edge(a, b);
            }
            if (g.edge_count() == 0) continue;
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (g.has_edge(i, j)) edges.emplace_back(i, j);
            const auto [a, b] = edges[rng() % edges.size()];
            g.remove_edge(a, b);
            if (!is_suspension_pk_free(g, k)) {
                detail = "heredity violation";
                return false;
            }
            ++checked;
        }
        detail = "handshake, partition, monotonicity, heredity: 500 graphs each, zero violations";
        return true;
    });

    criterion("uniqueness probe at the matching-construction value", [&](std::string& detail) {
        // Reporting criterion: wherever an exact k=5 value equals
        // floor(n^2/8), record the extremal class count and whether the
        // witness is the matching construction. Never asserts beyond having
        // the data to report.
        std::ostringstream note;
        int sites = 0;
        for (const ExtremalRecord& rec : g_records_k5) {
            if (!rec.exact) {
                detail = "incomplete search at n=" + std::to_string(rec.n);
                return false;
            }
            if (rec.value != static_cast<std::int64_t>(rec.n) * rec.n / 8) continue;
            ++sites;
            const bool is_hn =
                !rec.witnesses.empty() && canonical_form(from_graph6(rec.witnesses[0])) ==
                                              canonical_form(build_hn(rec.n));
            note << " n=" << rec.n << ": classes=" << rec.witness_count_total
                 << " matches_construction=" << (is_hn ? "yes" : "no") << ";";
        }
        if (sites == 0)
            detail = "no order in 5..9 attains floor(n^2/8); the extremal value exceeds it at "
                     "small orders";
        else
            detail = "sites:" + note.str();
        return true;
    });

    std::cout << (g_failures == 0 ? "all criteria passed\n"
                                  : std::to_string(g_failures) + " criteria failed\n");
    return g_failures;
}
