#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace suspath {

inline constexpr int max_canonical_vertices = 16;

/// Canonical byte string for a graph: byte 0 is the order, followed by the
/// upper triangle of the canonically relabeled adjacency matrix packed
/// MSB-first. Two graphs have equal forms iff they are isomorphic.
struct CanonicalForm {
    std::string bytes;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
    CanonicalForm form;
    std::vector<int> to_position;  // vertex -> position in the canonical order
};

namespace detail {

/// Exact canonical labeling by individualization-refinement with full
/// backtracking, for graphs on at most 16 vertices. The ordered partition is
/// refined to equitability by neighbour counts against every cell; each
/// member of the first non-singleton cell is individualized in turn. The
/// canonical labeling is the lexicographic minimum over all discrete leaves.
/// Automorphisms discovered from coinciding leaves prune candidates that are
/// equivalent under permutations fixing the current branching prefix, which
/// keeps highly symmetric inputs (complete or empty graphs) tractable.
class CanonicalSearch {
public:
    CanonicalSearch(const Graph& g, int root) : n_(g.vertex_count()) {
        if (n_ > max_canonical_vertices)
            throw std::invalid_argument("canonical labeling supports at most " +
                                        std::to_string(max_canonical_vertices) + " vertices, got " +
                                        std::to_string(n_));
        adj_.fill(0);
        for (int v = 0; v < n_; ++v)
            g.for_each_neighbor(v, [&](int w) { adj_[v] |= std::uint16_t(1) << w; });

        initial_.starts = 0;
        int at = 0;
        if (root >= 0) {
            initial_.order[at++] = static_cast<std::uint8_t>(root);
            initial_.starts |= 1u;                      // cell {root}
            if (n_ > 1) initial_.starts |= 1u << 1;     // cell with everything else
        } else if (n_ > 0) {
            initial_.starts |= 1u;
        }
        for (int v = 0; v < n_; ++v)
            if (v != root) initial_.order[at++] = static_cast<std::uint8_t>(v);
    }

    CanonicalLabeling run() {
        if (n_ == 0) {
            CanonicalLabeling out;
            out.form.bytes = std::string(1, '\0');
            return out;
        }
        search(initial_);
        CanonicalLabeling out;
        out.form.bytes = best_enc_;
        out.to_position.resize(n_);
        for (int p = 0; p < n_; ++p) out.to_position[best_order_[p]] = p;
        return out;
    }

private:
    struct Partition {
        std::array<std::uint8_t, max_canonical_vertices> order{};
        std::uint32_t starts = 0;  // bit p set iff a cell starts at position p
    };

    int cell_end(const Partition& p, int start) const {
        int e = start + 1;
        while (e < n_ && !((p.starts >> e) & 1u)) ++e;
        return e;
    }

    // One-dimensional refinement: split cells by neighbour counts into every
    // current cell until the partition is equitable.
    void refine(Partition& p) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int ss = 0; ss < n_ && !changed; ss = cell_end(p, ss)) {
                const int se = cell_end(p, ss);
                std::uint16_t splitter = 0;
                for (int t = ss; t < se; ++t) splitter |= std::uint16_t(1) << p.order[t];
                for (int cs = 0; cs < n_; cs = cell_end(p, cs)) {
                    const int ce = cell_end(p, cs);
                    if (ce - cs < 2) continue;
                    std::array<std::pair<int, std::uint8_t>, max_canonical_vertices> keyed;
                    bool uniform = true;
                    for (int t = cs; t < ce; ++t) {
                        const int cnt = std::popcount(static_cast<unsigned>(adj_[p.order[t]] & splitter));
                        keyed[t - cs] = {cnt, p.order[t]};
                        if (cnt != keyed[0].first) uniform = false;
                    }
                    if (uniform) continue;
                    std::stable_sort(keyed.begin(), keyed.begin() + (ce - cs),
                                     [](const auto& a, const auto& b) { return a.first < b.first; });
                    for (int t = cs; t < ce; ++t) {
                        p.order[t] = keyed[t - cs].second;
                        if (t > cs && keyed[t - cs].first != keyed[t - cs - 1].first)
                            p.starts |= 1u << t;
                    }
                    changed = true;
                    break;
                }
            }
        }
    }

    std::string encode(const std::array<std::uint8_t, max_canonical_vertices>& order) const {
        std::string out;
        out.reserve(1 + static_cast<std::size_t>(n_ * (n_ - 1) / 2 + 7) / 8);
        out.push_back(static_cast<char>(n_));
        int bit = 7;
        unsigned char cur = 0;
        for (int i = 0; i < n_; ++i) {
            for (int j = i + 1; j < n_; ++j) {
                if ((adj_[order[i]] >> order[j]) & 1u) cur |= 1u << bit;
                if (--bit < 0) {
                    out.push_back(static_cast<char>(cur));
                    cur = 0;
                    bit = 7;
                }
            }
        }
        if (bit != 7) out.push_back(static_cast<char>(cur));
        return out;
    }

    void record_automorphism(const std::array<std::uint8_t, max_canonical_vertices>& a,
                             const std::array<std::uint8_t, max_canonical_vertices>& b) {
        std::array<std::uint8_t, max_canonical_vertices> sigma{};
        bool identity = true;
        for (int t = 0; t < n_; ++t) {
            sigma[b[t]] = a[t];
            if (a[t] != b[t]) identity = false;
        }
        if (identity) return;
        for (int v = 0; v < n_; ++v) {
            std::uint16_t image = 0;
            std::uint16_t m = adj_[v];
            while (m != 0) {
                image |= std::uint16_t(1) << sigma[std::countr_zero(m)];
                m &= m - 1;
            }
            if (image != adj_[sigma[v]])
                throw std::logic_error("canonical labeling produced a non-automorphism");
        }
        autos_.push_back(sigma);
    }

    bool equivalent_to_tried(int v, const std::vector<int>& tried) const {
        if (tried.empty() || autos_.empty()) return false;
        std::array<std::uint8_t, max_canonical_vertices> parent{};
        for (int t = 0; t < n_; ++t) parent[t] = static_cast<std::uint8_t>(t);
        auto find = [&](int x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        for (const auto& sigma : autos_) {
            bool fixes_base = true;
            for (const int b : base_)
                if (sigma[b] != b) {
                    fixes_base = false;
                    break;
                }
            if (!fixes_base) continue;
            for (int x = 0; x < n_; ++x) {
                const int a = find(x), b = find(sigma[x]);
                if (a != b) parent[a] = static_cast<std::uint8_t>(b);
            }
        }
        const int rv = find(v);
        for (const int u : tried)
            if (find(u) == rv) return true;
        return false;
    }

    void search(Partition p) {
        refine(p);
        int cs = -1, ce = -1;
        for (int s = 0; s < n_; s = cell_end(p, s)) {
            const int e = cell_end(p, s);
            if (e - s >= 2) {
                cs = s;
                ce = e;
                break;
            }
        }
        if (cs < 0) {
            const std::string enc = encode(p.order);
            if (!have_first_) {
                have_first_ = true;
                first_enc_ = enc;
                first_order_ = p.order;
            } else if (enc == first_enc_) {
                record_automorphism(first_order_, p.order);
            }
            if (best_enc_.empty() || enc < best_enc_) {
                best_enc_ = enc;
                best_order_ = p.order;
            } else if (enc == best_enc_) {
                record_automorphism(best_order_, p.order);
            }
            return;
        }
        std::vector<int> tried;
        tried.reserve(ce - cs);
        for (int t = cs; t < ce; ++t) {
            const int v = p.order[t];
            if (equivalent_to_tried(v, tried)) continue;
            tried.push_back(v);
            Partition q = p;
            for (int u = t; u > cs; --u) q.order[u] = q.order[u - 1];
            q.order[cs] = static_cast<std::uint8_t>(v);
            q.starts |= 1u << (cs + 1);
            base_.push_back(v);
            search(q);
            base_.pop_back();
        }
    }

    int n_;
    std::array<std::uint16_t, max_canonical_vertices> adj_{};
    Partition initial_;

    bool have_first_ = false;
    std::string first_enc_, best_enc_;
    std::array<std::uint8_t, max_canonical_vertices> first_order_{}, best_order_{};
    std::vector<std::array<std::uint8_t, max_canonical_vertices>> autos_;
    std::vector<int> base_;
};

}  // namespace detail

inline CanonicalLabeling canonical_labeling(const Graph& g) {
    detail::CanonicalSearch cs(g, -1);
    return cs.run();
}

inline CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

/// Canonical form of the graph with one vertex distinguished: the initial
/// partition places `root` in its own leading cell. Two vertices yield the
/// same rooted form iff some automorphism maps one to the other.
inline CanonicalForm canonical_form_rooted(const Graph& g, int root) {
    if (root < 0 || root >= g.vertex_count())
        throw std::out_of_range("root vertex out of range");
    detail::CanonicalSearch cs(g, root);
    return cs.run().form;
}

inline bool same_automorphism_orbit(const Graph& g, int u, int v) {
    if (u == v) return true;
    return canonical_form_rooted(g, u) == canonical_form_rooted(g, v);
}

/// Rebuilds the canonical representative graph from its byte form.
inline Graph decode_canonical_form(const CanonicalForm& f) {
    if (f.bytes.empty()) throw std::invalid_argument("empty canonical form");
    const int n = static_cast<unsigned char>(f.bytes[0]);
    const std::size_t nbits = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
    if (f.bytes.size() != 1 + (nbits + 7) / 8)
        throw std::invalid_argument("canonical form has wrong length");
    Graph g(n);
    std::size_t bitindex = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++bitindex) {
            const unsigned char byte = static_cast<unsigned char>(f.bytes[1 + (bitindex >> 3)]);
            if ((byte >> (7 - (bitindex & 7))) & 1u) g.add_edge(i, j);
        }
    }
    return g;
}

}  // namespace suspath
