#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace suspath {

/// Thrown when graph6 input cannot be decoded. Carries the byte offset of
/// the first offending byte.
class graph6_parse_error : public std::runtime_error {
public:
    graph6_parse_error(const std::string& what, std::size_t byte_offset)
        : std::runtime_error(what + " at byte " + std::to_string(byte_offset)),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const noexcept { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

/// Simple undirected graph with bitset adjacency rows: bit j of row i is set
/// iff {i,j} is an edge. Rows are fixed-width arrays of 64-bit words sized at
/// construction, so adjacency intersection is a straight word loop. The
/// public interface keeps the matrix symmetric and loop-free at all times.
class Graph {
public:
    static constexpr int max_vertices = 4096;

    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > max_vertices)
            throw std::invalid_argument("graph order " + std::to_string(n) + " outside [0, " +
                                        std::to_string(max_vertices) + "]");
        words_ = (n + 63) / 64;
        bits_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(words_), 0);
    }

    int vertex_count() const noexcept { return n_; }
    int words_per_row() const noexcept { return words_; }

    bool has_edge(int i, int j) const {
        check_vertex(i);
        check_vertex(j);
        return (bits_[row_offset(i) + static_cast<std::size_t>(j >> 6)] >> (j & 63)) & 1u;
    }

    /// Adds edge {i,j}; idempotent. Loops are rejected.
    void add_edge(int i, int j) {
        check_vertex(i);
        check_vertex(j);
        if (i == j)
            throw std::invalid_argument("loop at vertex " + std::to_string(i) + " rejected");
        bits_[row_offset(i) + static_cast<std::size_t>(j >> 6)] |= std::uint64_t{1} << (j & 63);
        bits_[row_offset(j) + static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
    }

    void remove_edge(int i, int j) {
        check_vertex(i);
        check_vertex(j);
        if (i == j) return;
        bits_[row_offset(i) + static_cast<std::size_t>(j >> 6)] &= ~(std::uint64_t{1} << (j & 63));
        bits_[row_offset(j) + static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63));
    }

    int degree(int v) const {
        check_vertex(v);
        const std::uint64_t* r = bits_.data() + row_offset(v);
        int d = 0;
        for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
        return d;
    }

    std::int64_t edge_count() const {
        std::int64_t total = 0;
        for (const std::uint64_t word : bits_) total += std::popcount(word);
        return total / 2;
    }

    std::span<const std::uint64_t> row(int v) const {
        check_vertex(v);
        return {bits_.data() + row_offset(v), static_cast<std::size_t>(words_)};
    }

    template <typename F>
    void for_each_neighbor(int v, F&& f) const {
        check_vertex(v);
        const std::uint64_t* r = bits_.data() + row_offset(v);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t word = r[w];
            while (word != 0) {
                f(w * 64 + std::countr_zero(word));
                word &= word - 1;
            }
        }
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(degree(v)));
        for_each_neighbor(v, [&](int w) { out.push_back(w); });
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

    /// Structural self-check: symmetry, loop-freeness, no bits at positions >= n.
    bool check_invariants() const {
        for (int i = 0; i < n_; ++i) {
            const std::uint64_t* r = bits_.data() + row_offset(i);
            if ((r[i >> 6] >> (i & 63)) & 1u) return false;
            for (int w = 0; w < words_; ++w) {
                std::uint64_t word = r[w];
                while (word != 0) {
                    const int j = w * 64 + std::countr_zero(word);
                    word &= word - 1;
                    if (j >= n_) return false;
                    if (!((bits_[row_offset(j) + static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u))
                        return false;
                }
            }
        }
        return true;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                                    std::to_string(n_));
    }

    std::size_t row_offset(int v) const noexcept {
        return static_cast<std::size_t>(v) * static_cast<std::size_t>(words_);
    }

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Subgraph induced on the neighborhood of a vertex, together with the map
/// from new indices back to the original vertex labels.
struct InducedNeighborhood {
    Graph graph;
    std::vector<int> vertices;  // new index -> original vertex
};

inline InducedNeighborhood neighborhood_induced(const Graph& g, int v) {
    InducedNeighborhood out;
    out.vertices = g.neighbors(v);
    const int d = static_cast<int>(out.vertices.size());
    out.graph = Graph(d);
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b)
            if (g.has_edge(out.vertices[a], out.vertices[b])) out.graph.add_edge(a, b);
    return out;
}

/// Encodes in the standard graph6 convention: header N(n), then the upper
/// triangle in column-major order packed into 6-bit groups offset by 63.
/// Orders up to 62 use the one-byte header, larger orders the four-byte one.
inline std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int bit = 5;
    unsigned char cur = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (g.has_edge(i, j)) cur |= 1u << bit;
            if (--bit < 0) {
                out.push_back(static_cast<char>(63 + cur));
                cur = 0;
                bit = 5;
            }
        }
    }
    if (bit != 5) out.push_back(static_cast<char>(63 + cur));
    return out;
}

inline Graph from_graph6(std::string_view s) {
    if (s.empty()) throw graph6_parse_error("empty graph6 input", 0);
    std::size_t pos = 0;
    long n = 0;
    const unsigned char c0 = static_cast<unsigned char>(s[0]);
    if (c0 == 126) {
        if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126)
            throw graph6_parse_error("graph6 orders above 258047 not supported", 1);
        if (s.size() < 4) throw graph6_parse_error("truncated graph6 size header", s.size());
        for (std::size_t t = 1; t <= 3; ++t) {
            const unsigned char c = static_cast<unsigned char>(s[t]);
            if (c < 63 || c > 126) throw graph6_parse_error("invalid graph6 size byte", t);
            n = (n << 6) | (c - 63);
        }
        pos = 4;
    } else {
        if (c0 < 63 || c0 > 125) throw graph6_parse_error("invalid graph6 header byte", 0);
        n = c0 - 63;
        pos = 1;
    }
    if (n > Graph::max_vertices)
        throw graph6_parse_error("graph6 order exceeds supported maximum", 0);
    Graph g(static_cast<int>(n));
    const std::size_t nbits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1 > 0 ? n - 1 : 0) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (s.size() < pos + nbytes) throw graph6_parse_error("truncated graph6 body", s.size());
    if (s.size() > pos + nbytes) throw graph6_parse_error("trailing bytes after graph6 body", pos + nbytes);
    std::size_t bitindex = 0;
    int i = 0, j = 1;
    for (std::size_t b = 0; b < nbytes; ++b) {
        const unsigned char c = static_cast<unsigned char>(s[pos + b]);
        if (c < 63 || c > 126) throw graph6_parse_error("invalid graph6 data byte", pos + b);
        const unsigned val = c - 63;
        for (int t = 5; t >= 0; --t, ++bitindex) {
            const bool bit = (val >> t) & 1u;
            if (bitindex < nbits) {
                if (bit) g.add_edge(i, j);
                if (++i == j) {
                    i = 0;
                    ++j;
                }
            } else if (bit) {
                throw graph6_parse_error("nonzero padding bit", pos + b);
            }
        }
    }
    return g;
}

// Small graph factories used throughout the test and search code.

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

/// Star with the center at index 0.
inline Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = a; j < a + b; ++j) g.add_edge(i, j);
    return g;
}

}  // namespace suspath
