#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace commspec {

// Simple undirected graph on [0, n) with bit-packed adjacency rows.
class AdjacencyMatrix {
public:
    AdjacencyMatrix() = default;

    explicit AdjacencyMatrix(int n)
        : n_(n), words_(static_cast<std::size_t>((n + 63) / 64)),
          rows_(static_cast<std::size_t>(n) * words_, 0) {}

    int size() const { return n_; }
    std::size_t words_per_row() const { return words_; }

    bool at(int u, int v) const {
        return (rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1;
    }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        set_bit(u, v);
        set_bit(v, u);
    }

    const std::uint64_t* row(int u) const { return rows_.data() + static_cast<std::size_t>(u) * words_; }

    int degree(int u) const {
        int d = 0;
        const std::uint64_t* r = row(u);
        for (std::size_t w = 0; w < words_; ++w) d += __builtin_popcountll(r[w]);
        return d;
    }

    long long edge_count() const {
        long long total = 0;
        for (int u = 0; u < n_; ++u) total += degree(u);
        return total / 2;
    }

    bool operator==(const AdjacencyMatrix& other) const {
        return n_ == other.n_ && rows_ == other.rows_;
    }
    bool operator!=(const AdjacencyMatrix& other) const { return !(*this == other); }

private:
    void set_bit(int u, int v) {
        rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v >> 6)] |= 1ULL << (v & 63);
    }

    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> rows_;
};

// Partition of a graph into vertex-disjoint complete subgraphs with no cross
// edges. Clique ids follow discovery order by least vertex index.
struct CliqueDecomposition {
    std::vector<int> clique_sizes;      // indexed by clique id
    std::vector<int> clique_assignment; // vertex -> clique id

    std::vector<int> sorted_sizes() const {
        auto s = clique_sizes;
        std::sort(s.begin(), s.end());
        return s;
    }
};

// Present iff every connected component is complete.
inline std::optional<CliqueDecomposition> clique_decomposition(const AdjacencyMatrix& a) {
    const int n = a.size();
    CliqueDecomposition d;
    d.clique_assignment.assign(static_cast<std::size_t>(n), -1);
    for (int start = 0; start < n; ++start) {
        if (d.clique_assignment[static_cast<std::size_t>(start)] >= 0) continue;
        int id = static_cast<int>(d.clique_sizes.size());
        // component by BFS
        std::vector<int> comp{start};
        d.clique_assignment[static_cast<std::size_t>(start)] = id;
        for (std::size_t head = 0; head < comp.size(); ++head) {
            int u = comp[head];
            for (int v = 0; v < n; ++v) {
                if (a.at(u, v) && d.clique_assignment[static_cast<std::size_t>(v)] < 0) {
                    d.clique_assignment[static_cast<std::size_t>(v)] = id;
                    comp.push_back(v);
                }
            }
        }
        // complete iff every member has degree |comp| - 1 within the graph
        for (int u : comp)
            if (a.degree(u) != static_cast<int>(comp.size()) - 1) return std::nullopt;
        d.clique_sizes.push_back(static_cast<int>(comp.size()));
    }
    return d;
}

// Block-diagonal union of complete graphs with the given sizes.
inline AdjacencyMatrix adjacency_from_clique_sizes(const std::vector<int>& sizes) {
    int n = 0;
    for (int s : sizes) n += s;
    AdjacencyMatrix a(n);
    int base = 0;
    for (int s : sizes) {
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j) a.add_edge(base + i, base + j);
        base += s;
    }
    return a;
}

// Rebuild adjacency from a clique assignment (for the reconstruction check).
inline AdjacencyMatrix adjacency_from_assignment(const std::vector<int>& assignment) {
    const int n = static_cast<int>(assignment.size());
    AdjacencyMatrix a(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (assignment[static_cast<std::size_t>(u)] == assignment[static_cast<std::size_t>(v)]) a.add_edge(u, v);
    return a;
}

} // namespace commspec
