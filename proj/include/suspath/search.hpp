#pragma once

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "constructions.hpp"
#include "generation.hpp"
#include "graph.hpp"
#include "paths.hpp"
#include "triangles.hpp"

namespace suspath {

enum class SearchMode { exhaustive, local };

inline std::string to_string(SearchMode m) {
    return m == SearchMode::exhaustive ? "exhaustive" : "local";
}

inline SearchMode search_mode_from_string(std::string_view s) {
    if (s == "exhaustive") return SearchMode::exhaustive;
    if (s == "local") return SearchMode::local;
    throw std::invalid_argument("unknown search mode: " + std::string(s));
}

struct SearchConfig {
    int n = 0;
    int k = 4;
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t seed = 0;
    double time_budget_seconds = 0;  // 0 = unlimited
    int restarts = 8;                // local mode only
    bool collect_witnesses = true;
    int max_witnesses = 10;
    int workers = 1;

    void validate() const {
        if (k < 4) throw std::invalid_argument("k must be at least 4");
        if (mode == SearchMode::exhaustive) {
            if (n < 1 || n > 12)
                throw std::invalid_argument("exhaustive mode supports 1 <= n <= 12");
        } else {
            if (n < 1 || n > 512) throw std::invalid_argument("local mode supports 1 <= n <= 512");
            if (restarts < 1) throw std::invalid_argument("restarts must be positive");
        }
        if (max_witnesses < 0) throw std::invalid_argument("max_witnesses must be nonnegative");
        if (workers < 1) throw std::invalid_argument("workers must be positive");
    }
};

inline nlohmann::json to_json(const SearchConfig& c) {
    return nlohmann::json{{"n", c.n},
                          {"k", c.k},
                          {"mode", to_string(c.mode)},
                          {"seed", c.seed},
                          {"time_budget_seconds", c.time_budget_seconds},
                          {"restarts", c.restarts},
                          {"collect_witnesses", c.collect_witnesses},
                          {"max_witnesses", c.max_witnesses},
                          {"workers", c.workers}};
}

/// Result of a search run. Witnesses are graph6 strings; in exhaustive mode
/// they are canonical representatives ordered by canonical form, and
/// witness_count_total is the number of extremal isomorphism classes among
/// the edge-maximal graphs scored.
struct ExtremalRecord {
    int n = 0, k = 0;
    std::int64_t value = -1;
    bool exact = false;
    std::vector<std::string> witnesses;
    std::uint64_t witness_count_total = 0;
    SearchStats stats;
};

inline nlohmann::json to_json(const ExtremalRecord& r) {
    return nlohmann::json{{"n", r.n},
                          {"k", r.k},
                          {"value", r.value},
                          {"exact", r.exact},
                          {"witnesses", r.witnesses},
                          {"witness_count_total", r.witness_count_total},
                          {"stats",
                           {{"nodes", r.stats.nodes},
                            {"tested", r.stats.tested},
                            {"pruned_free", r.stats.pruned_free},
                            {"pruned_canon", r.stats.pruned_canon},
                            {"seconds", r.stats.seconds}}}};
}

inline ExtremalRecord record_from_json(const nlohmann::json& j) {
    ExtremalRecord r;
    r.n = j.at("n").get<int>();
    r.k = j.at("k").get<int>();
    r.value = j.at("value").get<std::int64_t>();
    r.exact = j.at("exact").get<bool>();
    r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
    r.witness_count_total = j.at("witness_count_total").get<std::uint64_t>();
    const auto& s = j.at("stats");
    r.stats.nodes = s.at("nodes").get<std::uint64_t>();
    r.stats.tested = s.at("tested").get<std::uint64_t>();
    r.stats.pruned_free = s.at("pruned_free").get<std::uint64_t>();
    r.stats.pruned_canon = s.at("pruned_canon").get<std::uint64_t>();
    r.stats.seconds = s.at("seconds").get<double>();
    return r;
}

/// Independent re-check of a claimed witness, built from the counting and
/// freeness primitives only.
struct WitnessReport {
    int n = 0;
    std::int64_t edges = 0;
    bool free = false;
    std::int64_t triangles = 0;
};

inline WitnessReport verify_witness(std::string_view g6, int k) {
    const Graph g = from_graph6(g6);
    WitnessReport r;
    r.n = g.vertex_count();
    r.edges = g.edge_count();
    r.free = is_suspension_pk_free(g, k);
    r.triangles = count_triangles(g);
    return r;
}

/// Adds {i,j} if the graph stays free of suspended k-paths, else leaves the
/// graph unchanged. Only the neighborhoods of i, j and their common
/// neighbours can change, so only those are checked.
inline bool try_add_edge_free(Graph& g, int k, int i, int j) {
    g.add_edge(i, j);
    std::vector<int> affected{i, j};
    const auto ri = g.row(i);
    const auto rj = g.row(j);
    for (int w = 0; w < g.words_per_row(); ++w) {
        std::uint64_t word = ri[w] & rj[w];
        while (word != 0) {
            affected.push_back(w * 64 + std::countr_zero(word));
            word &= word - 1;
        }
    }
    if (neighborhoods_pk_free(g, k, affected)) return true;
    g.remove_edge(i, j);
    return false;
}

/// Greedy single pass over non-edges in index order. Adding an edge can only
/// shrink the set of admissible additions, so one pass reaches an
/// edge-maximal free supergraph deterministically.
inline Graph saturate_free(Graph g, int k) {
    const int n = g.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.has_edge(i, j)) try_add_edge_free(g, k, i, j);
    return g;
}

namespace detail {

inline void verify_record(const ExtremalRecord& r) {
    for (const std::string& w : r.witnesses) {
        const WitnessReport rep = verify_witness(w, r.k);
        if (rep.n != r.n || !rep.free || rep.triangles != r.value)
            throw std::logic_error("witness failed re-verification: " + w);
    }
}

}  // namespace detail

/// Exact maximum triangle count over all graphs on config.n vertices with no
/// suspended k-path, by isomorph-free generation. Every generated graph is
/// greedily saturated with admissible edges before scoring; edge additions
/// never decrease the triangle count, so the maximum over the saturated
/// graphs is the maximum over all free graphs. Ties are collected as
/// canonical forms, which makes witness output stable and countable.
inline ExtremalRecord exhaustive_search(const SearchConfig& config) {
    config.validate();
    if (config.mode != SearchMode::exhaustive)
        throw std::invalid_argument("exhaustive_search requires exhaustive mode");

    std::int64_t best = -1;
    std::set<std::string> ties;
    std::mutex merge_mutex;

    EnumerationOptions opt;
    opt.n = config.n;
    opt.free_k = config.k;
    opt.budget_seconds = config.time_budget_seconds;
    opt.workers = config.workers;

    SearchStats stats;
    const bool completed = enumerate_classes(
        opt,
        [&](const Graph& g) {
            const Graph saturated = saturate_free(g, config.k);
            const std::int64_t t = count_triangles(saturated);
            const CanonicalForm canon = canonical_form(saturated);
            const std::lock_guard<std::mutex> lock(merge_mutex);
            if (t > best) {
                best = t;
                ties.clear();
                ties.insert(canon.bytes);
            } else if (t == best) {
                ties.insert(canon.bytes);
            }
        },
        stats);

    ExtremalRecord r;
    r.n = config.n;
    r.k = config.k;
    r.value = best;
    r.exact = completed;
    r.witness_count_total = ties.size();
    r.stats = stats;
    if (config.collect_witnesses) {
        int left = config.max_witnesses;
        for (const std::string& bytes : ties) {
            if (left-- <= 0) break;
            r.witnesses.push_back(to_graph6(decode_canonical_form(CanonicalForm{bytes})));
        }
    }
    detail::verify_record(r);
    return r;
}

namespace detail {

class LocalSearch {
public:
    explicit LocalSearch(const SearchConfig& config)
        : config_(config), rng_(config.seed), n_(config.n) {
        const auto t0 = Clock::now();
        has_deadline_ = config.time_budget_seconds > 0;
        deadline_ = has_deadline_ ? t0 + std::chrono::duration_cast<Clock::duration>(
                                        std::chrono::duration<double>(config.time_budget_seconds))
                                  : Clock::time_point::max();
        start_ = t0;
    }

    ExtremalRecord run() {
        for (int r = 0; r < config_.restarts && !expired(); ++r) climb(seed_graph(r));
        ExtremalRecord rec;
        rec.n = n_;
        rec.k = config_.k;
        rec.value = best_value_;
        rec.exact = false;
        rec.witness_count_total = best_graphs_.size();
        if (config_.collect_witnesses) {
            int left = config_.max_witnesses;
            for (const std::string& g6 : best_graphs_) {
                if (left-- <= 0) break;
                rec.witnesses.push_back(g6);
            }
        }
        stats_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
        rec.stats = stats_;
        verify_record(rec);
        return rec;
    }

private:
    bool expired() const { return has_deadline_ && Clock::now() >= deadline_; }

    Graph seed_graph(int restart) {
        // 0 = hn, 1 = fnk, 2 = hnk, 3 = empty, 4 = clique packing
        std::vector<int> usable;
        if (n_ >= 4) usable.push_back(0);
        const int qf = (config_.k - 2) / 2;
        if (qf > 0 && n_ % (4 * qf) == 0) usable.push_back(1);
        const int qh = config_.k / 2;
        if (n_ % (2 * qh) == 0 && n_ >= 2 * qh) usable.push_back(2);
        usable.push_back(3);
        usable.push_back(4);
        if (restart < static_cast<int>(usable.size())) {
            switch (usable[restart]) {
                case 0: return build_hn(n_);
                case 1: return build_fnk(n_, config_.k);
                case 2: return build_hnk(n_, config_.k);
                case 3: return Graph(n_);  // greedy growth from scratch
                default: {
                    // Disjoint k-cliques plus a leftover clique: neighborhoods
                    // have at most k-1 vertices, so the packing is free.
                    Graph g(n_);
                    for (int base = 0; base < n_; base += config_.k) {
                        const int hi = std::min(n_, base + config_.k);
                        for (int i = base; i < hi; ++i)
                            for (int j = i + 1; j < hi; ++j) g.add_edge(i, j);
                    }
                    return g;
                }
            }
        }
        // Random near-balanced complete bipartite seed; trivially free.
        if (n_ == 1) return Graph(1);
        const int spread = std::max(1, n_ / 8);
        const int a = std::clamp(n_ / 2 + static_cast<int>(rng_() % (2 * spread + 1)) - spread, 1,
                                 n_ - 1);
        return complete_bipartite(a, n_ - a);
    }

    void record_optimum(const Graph& g, std::int64_t t) {
        if (t > best_value_) {
            best_value_ = t;
            best_graphs_.clear();
        }
        if (t == best_value_ && best_graphs_.size() < 4096) best_graphs_.insert(to_graph6(g));
    }

    // Highest-gain admissible addition, ties toward the smallest pair.
    // Inadmissible pairs stay inadmissible while edges are only added, so
    // each pair is tested at most once until the next removal.
    bool add_best_edge(Graph& g, std::int64_t& t, std::vector<char>& dead,
                       std::optional<std::pair<int, int>> tabu) {
        std::vector<std::tuple<std::int64_t, int, int>> candidates;
        const int words = g.words_per_row();
        for (int i = 0; i < n_; ++i) {
            const auto ri = g.row(i);
            for (int j = i + 1; j < n_; ++j) {
                if (g.has_edge(i, j) || dead[i * n_ + j]) continue;
                if (tabu && tabu->first == i && tabu->second == j) continue;
                const auto rj = g.row(j);
                std::int64_t gain = 0;
                for (int w = 0; w < words; ++w) gain += std::popcount(ri[w] & rj[w]);
                candidates.emplace_back(gain, i, j);
            }
        }
        std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
            if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) > std::get<0>(b);
            if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
            return std::get<2>(a) < std::get<2>(b);
        });
        for (const auto& [gain, i, j] : candidates) {
            if (expired()) return false;
            ++stats_.tested;
            if (try_add_edge_free(g, config_.k, i, j)) {
                t += gain;
                ++stats_.nodes;
                return true;
            }
            ++stats_.pruned_free;
            dead[i * n_ + j] = 1;
        }
        return false;
    }

    void climb(Graph g) {
        std::int64_t t = count_triangles(g);
        ++stats_.nodes;
        std::vector<char> dead(static_cast<std::size_t>(n_) * n_, 0);
        std::optional<std::pair<int, int>> tabu;
        int escapes_left = 8;
        for (;;) {
            if (expired()) {
                record_optimum(g, t);
                return;
            }
            if (add_best_edge(g, t, dead, tabu)) {
                tabu.reset();
                continue;
            }
            if (tabu) {
                // Nothing else is admissible; return to the previous optimum.
                g.add_edge(tabu->first, tabu->second);
                t = count_triangles(g);
                tabu.reset();
            }
            record_optimum(g, t);
            if (escapes_left-- <= 0 || g.edge_count() == 0) return;
            // Plateau escape: drop the edge carrying the fewest triangles and
            // look for a different completion.
            const int words = g.words_per_row();
            std::int64_t best_part = -1;
            int bi = -1, bj = -1;
            for (int i = 0; i < n_; ++i) {
                const auto ri = g.row(i);
                for (int j = i + 1; j < n_; ++j) {
                    if (!g.has_edge(i, j)) continue;
                    const auto rj = g.row(j);
                    std::int64_t part = 0;
                    for (int w = 0; w < words; ++w) part += std::popcount(ri[w] & rj[w]);
                    if (best_part < 0 || part < best_part) {
                        best_part = part;
                        bi = i;
                        bj = j;
                    }
                }
            }
            g.remove_edge(bi, bj);
            t -= best_part;
            ++stats_.nodes;
            std::fill(dead.begin(), dead.end(), 0);
            tabu = std::make_pair(bi, bj);
        }
    }

    SearchConfig config_;
    std::mt19937_64 rng_;
    int n_;
    bool has_deadline_ = false;
    Clock::time_point deadline_, start_;
    SearchStats stats_;
    std::int64_t best_value_ = -1;
    std::set<std::string> best_graphs_;
};

}  // namespace detail

/// Heuristic lower bound for larger orders: greedy edge additions over free
/// graphs with plateau escapes and construction-seeded restarts. The value is
/// the best triangle count among visited free graphs, so it is always a valid
/// lower bound. Deterministic for a fixed seed.
inline ExtremalRecord local_search(const SearchConfig& config) {
    config.validate();
    if (config.mode != SearchMode::local)
        throw std::invalid_argument("local_search requires local mode");
    detail::LocalSearch ls(config);
    return ls.run();
}

inline ExtremalRecord run_search(const SearchConfig& config) {
    return config.mode == SearchMode::exhaustive ? exhaustive_search(config)
                                                 : local_search(config);
}

}  // namespace suspath
