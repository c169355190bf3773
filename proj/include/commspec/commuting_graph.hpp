#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "commspec/graph.hpp"
#include "commspec/group_table.hpp"

namespace commspec {

// Commuting graph on the non-central elements of a group: vertices are the
// element indices outside the centre, adjacency means the elements commute.
struct CommutingGraph {
    int group_order = 0;
    int center_size = 0;
    std::string family;
    std::vector<int> vertices;             // parent element indices, ascending
    std::vector<std::string> vertex_labels;
    AdjacencyMatrix adj;
    long long edge_count = 0;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
};

inline CommutingGraph build_commuting_graph(const GroupTable& g) {
    ElementSet z = center(g);
    if (z.size() == g.order)
        throw std::invalid_argument("commuting graph is defined only for non-abelian groups");

    CommutingGraph cg;
    cg.group_order = g.order;
    cg.center_size = z.size();
    cg.family = g.family;
    for (int x = 0; x < g.order; ++x) {
        if (!z.test(x)) {
            cg.vertices.push_back(x);
            cg.vertex_labels.push_back(g.labels[static_cast<std::size_t>(x)]);
        }
    }
    const int v = cg.vertex_count();
    cg.adj = AdjacencyMatrix(v);
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j)
            if (g.commutes(cg.vertices[static_cast<std::size_t>(i)], cg.vertices[static_cast<std::size_t>(j)]))
                cg.adj.add_edge(i, j);
    cg.edge_count = cg.adj.edge_count();
    return cg;
}

// Deterministic DOT text: vertices as "idx:label", edges emitted once with
// the lower vertex first, cliques rendered as clusters when the graph
// decomposes into them.
inline std::string export_dot(const CommutingGraph& cg) {
    std::ostringstream os;
    os << "graph commuting {\n";
    os << "  label=\"" << cg.family << "\";\n";
    auto node = [&](int i) {
        os << "  v" << cg.vertices[static_cast<std::size_t>(i)] << " [label=\""
           << cg.vertices[static_cast<std::size_t>(i)] << ":" << cg.vertex_labels[static_cast<std::size_t>(i)]
           << "\"];\n";
    };
    auto decomp = clique_decomposition(cg.adj);
    if (decomp) {
        for (std::size_t c = 0; c < decomp->clique_sizes.size(); ++c) {
            os << "  subgraph cluster_" << c << " {\n";
            for (int i = 0; i < cg.vertex_count(); ++i)
                if (decomp->clique_assignment[static_cast<std::size_t>(i)] == static_cast<int>(c)) {
                    os << "  ";
                    node(i);
                }
            os << "  }\n";
        }
    } else {
        for (int i = 0; i < cg.vertex_count(); ++i) node(i);
    }
    for (int i = 0; i < cg.vertex_count(); ++i)
        for (int j = i + 1; j < cg.vertex_count(); ++j)
            if (cg.adj.at(i, j))
                os << "  v" << cg.vertices[static_cast<std::size_t>(i)] << " -- v"
                   << cg.vertices[static_cast<std::size_t>(j)] << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace commspec
