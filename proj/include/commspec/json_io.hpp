#pragma once

#include <json.hpp>

#include "commspec/commuting_graph.hpp"
#include "commspec/group_table.hpp"
#include "commspec/int_polynomial.hpp"
#include "commspec/spectrum.hpp"

namespace commspec {

using Json = nlohmann::ordered_json;

// Coefficients fitting a 64-bit integer are emitted as numbers, anything
// larger as a decimal string.
inline Json poly_to_json(const IntPolynomial& p) {
    Json arr = Json::array();
    static const BigInt lo = std::numeric_limits<long long>::min();
    static const BigInt hi = std::numeric_limits<long long>::max();
    for (const auto& c : p.coeffs()) {
        if (c >= lo && c <= hi) arr.push_back(static_cast<long long>(c));
        else arr.push_back(c.str());
    }
    return arr;
}

inline Json spectrum_to_json(const Spectrum& s) {
    Json j;
    j["eigenvalues"] = Json::array();
    for (const auto& e : s.eigenvalues)
        j["eigenvalues"].push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
    j["residual"] = poly_to_json(s.residual);
    j["integral"] = s.is_integral;
    return j;
}

inline Json table_to_json(const GroupTable& g) {
    Json j;
    j["order"] = g.order;
    j["mul"] = Json::array();
    for (auto v : g.mul) j["mul"].push_back(v);
    j["identity"] = g.identity;
    j["inv"] = Json::array();
    for (auto v : g.inv) j["inv"].push_back(v);
    j["labels"] = g.labels;
    j["family"] = g.family;
    return j;
}

inline Json graph_to_json(const CommutingGraph& cg) {
    Json j;
    j["vertices"] = cg.vertices;
    Json edges = Json::array();
    for (int i = 0; i < cg.vertex_count(); ++i)
        for (int k = i + 1; k < cg.vertex_count(); ++k)
            if (cg.adj.at(i, k))
                edges.push_back({cg.vertices[static_cast<std::size_t>(i)], cg.vertices[static_cast<std::size_t>(k)]});
    j["edges"] = std::move(edges);
    return j;
}

} // namespace commspec
