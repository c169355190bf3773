#pragma once

#include <atomic>
#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "commspec/charpoly.hpp"
#include "commspec/closed_forms.hpp"
#include "commspec/commuting_graph.hpp"
#include "commspec/families.hpp"
#include "commspec/group_table.hpp"
#include "commspec/json_io.hpp"
#include "commspec/spec_parse.hpp"
#include "commspec/spectrum.hpp"

namespace commspec {

enum class VerifyMethod { Clique, CharPoly, Both };

inline const char* to_string(VerifyMethod m) {
    switch (m) {
        case VerifyMethod::Clique: return "clique";
        case VerifyMethod::CharPoly: return "charpoly";
        case VerifyMethod::Both: return "both";
    }
    return "?";
}

struct VerificationCase {
    std::string id;
    std::string group; // group-spec string
    VerifyMethod method = VerifyMethod::Both;
    std::optional<PredictedSpectrum> predicted;
    std::optional<IntPolynomial> expected_charpoly; // literal comparison route
    bool expect_integral = true;
    // (printed-form -1 exponent total, vertex count) for errata cases; the
    // two are expected to disagree.
    std::optional<std::pair<long long, long long>> display_defect;
};

struct CaseResult {
    std::string id;
    std::string group;
    VerifyMethod method = VerifyMethod::Both;
    long long order = 0;
    long long center_order = 0;
    bool ac = false;
    std::optional<std::vector<int>> clique_sizes; // sorted ascending
    std::optional<Spectrum> brute;
    std::optional<Spectrum> predicted;
    bool paths_agree = true; // meaningful for method == Both
    bool match = false;
    bool errata = false;
    bool display_defect_confirmed = false; // printed form fails the vertex count
    std::string error;
    double runtime_ms = 0.0;
};

struct VerificationReport {
    std::vector<CaseResult> cases;
    int total = 0;
    int matched = 0;
    bool all_match() const { return matched == total; }
};

namespace detail {

inline CaseResult run_case(const VerificationCase& c, long long max_order, const CharPolyOptions& cp_opts) {
    CaseResult r;
    r.id = c.id;
    r.group = c.group;
    r.method = c.method;
    r.errata = c.predicted && c.predicted->errata_flag;
    auto start = std::chrono::steady_clock::now();
    try {
        GroupTable g = build_group(parse_group_spec(c.group), max_order);
        r.order = g.order;
        ElementSet z = center(g);
        r.center_order = z.size();
        r.ac = is_ac_group(g);
        CommutingGraph cg = build_commuting_graph(g);
        auto decomp = clique_decomposition(cg.adj);
        if (decomp) r.clique_sizes = decomp->sorted_sizes();

        std::optional<Spectrum> clique_spec;
        std::optional<Spectrum> charpoly_spec;
        if (c.method == VerifyMethod::Clique || c.method == VerifyMethod::Both) {
            if (!decomp) throw std::runtime_error("graph is not a disjoint union of cliques");
            clique_spec = clique_union_spectrum(*decomp);
        }
        if (c.method == VerifyMethod::CharPoly || c.method == VerifyMethod::Both)
            charpoly_spec = integer_spectrum(char_poly(cg, cp_opts));

        if (c.method == VerifyMethod::Both) r.paths_agree = (*clique_spec == *charpoly_spec);
        r.brute = charpoly_spec ? std::move(charpoly_spec) : std::move(clique_spec);

        bool ok = r.paths_agree;
        if (c.expected_charpoly) {
            // literal characteristic-polynomial route (the non-integral case)
            IntPolynomial cp = char_poly(cg, cp_opts);
            ok = ok && cp == *c.expected_charpoly;
            ok = ok && r.brute->is_integral == c.expect_integral;
        }
        if (c.predicted) {
            r.predicted = c.predicted->spectrum;
            ok = ok && *r.brute == c.predicted->spectrum;
        }
        ok = ok && (r.brute->is_integral == c.expect_integral);
        if (c.display_defect) {
            r.display_defect_confirmed = c.display_defect->first != c.display_defect->second;
            ok = ok && r.display_defect_confirmed;
        }
        r.match = ok;
    } catch (const std::exception& e) {
        r.error = e.what();
        r.match = false;
    }
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace detail

// The full reproduction suite: the planar, toroidal and complement-planar
// classification lists plus parameter sweeps over every family with a
// closed-form spectrum.
inline std::vector<VerificationCase> default_suite() {
    std::vector<VerificationCase> cases;
    auto add = [&](std::string id, std::string group, VerifyMethod method, PredictedSpectrum pred,
                   std::optional<std::pair<long long, long long>> defect = std::nullopt) {
        VerificationCase c;
        c.id = std::move(id);
        c.group = std::move(group);
        c.method = method;
        c.predicted = std::move(pred);
        c.display_defect = defect;
        cases.push_back(std::move(c));
    };

    // centralizer data of the two product bases, for the G x A corollary route
    const std::vector<long long> d6_orders{3, 2, 2, 2};
    const std::vector<long long> a4_orders{4, 3, 3, 3, 3};

    // ---- planar classification list ----
    add("planar/D6", "D:6", VerifyMethod::Both, spec_dihedral(3));
    add("planar/D8", "D:8", VerifyMethod::Both, spec_dihedral(4));
    add("planar/D10", "D:10", VerifyMethod::Both, spec_dihedral(5));
    add("planar/D12", "D:12", VerifyMethod::Both, spec_dihedral(6));
    add("planar/Q8", "Q:8", VerifyMethod::Both, spec_quaternion(2));
    add("planar/Q12", "Q:12", VerifyMethod::Both, spec_quaternion(3));
    add("planar/Z2xD8", "Z:2 x D:8", VerifyMethod::Both, spec_central_quotient_pp(2, 4));
    add("planar/Z2xQ8", "Z:2 x Q:8", VerifyMethod::Both, spec_central_quotient_pp(2, 4));
    add("planar/M16", "M16", VerifyMethod::Both, spec_central_quotient_pp(2, 4));
    add("planar/Z4sZ4", "Z4sZ4", VerifyMethod::Both, spec_central_quotient_pp(2, 4));
    add("planar/D8cZ4", "D8cZ4", VerifyMethod::Both, spec_central_quotient_pp(2, 4));
    add("planar/SG16_3", "SG16_3", VerifyMethod::Both, spec_central_quotient_pp(2, 4));
    add("planar/A4", "A:4", VerifyMethod::Both, spec_fixed_group("A4"));
    add("planar/A5", "A:5", VerifyMethod::Both, spec_psl2(2));
    add("planar/SL23", "SL2:3", VerifyMethod::Both, spec_fixed_group("SL23"));
    add("planar/Sz2", "F20", VerifyMethod::Both, spec_sz2_quotient(1));
    {
        // S4: the one non-integral spectrum; verified at the polynomial level
        VerificationCase s4;
        s4.id = "planar/S4";
        s4.group = "S:4";
        s4.method = VerifyMethod::CharPoly;
        s4.expect_integral = false;
        IntPolynomial x2m5{-5, 0, 1};
        s4.expected_charpoly = IntPolynomial{-1, 1}.pow(7) * IntPolynomial{1, 1}.pow(10) *
                               x2m5 * x2m5 * IntPolynomial{-2, -3, 1};
        cases.push_back(std::move(s4));
    }

    // ---- toroidal classification list ----
    add("toroidal/D14", "D:14", VerifyMethod::Both, spec_dihedral(7));
    add("toroidal/D16", "D:16", VerifyMethod::Both, spec_dihedral(8));
    add("toroidal/Q16", "Q:16", VerifyMethod::Both, spec_quaternion(4));
    add("toroidal/QD16", "QD:16", VerifyMethod::Both, spec_quasidihedral(4));
    add("toroidal/D6xZ3", "D:6 x Z:3", VerifyMethod::Both, spec_ac_times_abelian(d6_orders, 1, 3),
        std::make_pair(4 + ac_times_abelian_display_neg_one_exponent(d6_orders, 1, 3), 3LL * 5));
    add("toroidal/A4xZ2", "A:4 x Z:2", VerifyMethod::Both, spec_ac_times_abelian(a4_orders, 1, 2),
        std::make_pair(5 + ac_times_abelian_display_neg_one_exponent(a4_orders, 1, 2), 2LL * 11));
    add("toroidal/Z7sZ3", "PQ:3:7", VerifyMethod::Both, spec_pq(3, 7),
        std::make_pair(1 + 7 + pq_display_neg_one_exponent(3, 7), 3LL * 7 - 1));

    // ---- complement-planar list ----
    add("complement/D6", "D:6", VerifyMethod::Both, spec_dihedral(3));
    add("complement/D8", "D:8", VerifyMethod::Both, spec_dihedral(4));
    add("complement/Q8", "Q:8", VerifyMethod::Both, spec_quaternion(2));

    // ---- parameter sweeps ----
    for (long long m = 3; m <= 10; ++m)
        add("sweep/D" + std::to_string(2 * m), "D:" + std::to_string(2 * m), VerifyMethod::Both, spec_dihedral(m));
    for (long long n = 2; n <= 8; ++n)
        add("sweep/Q" + std::to_string(4 * n), "Q:" + std::to_string(4 * n), VerifyMethod::Both, spec_quaternion(n));
    add("sweep/QD16", "QD:16", VerifyMethod::Both, spec_quasidihedral(4));
    add("sweep/QD32", "QD:32", VerifyMethod::Both, spec_quasidihedral(5));
    add("sweep/PSL2_4", "PSL2:4", VerifyMethod::Both, spec_psl2(2));
    add("sweep/PSL2_8", "PSL2:8", VerifyMethod::Both, spec_psl2(3));
    add("sweep/GL2_3", "GL2:3", VerifyMethod::Both, spec_gl2(3));
    add("sweep/GL2_4", "GL2:4", VerifyMethod::Both, spec_gl2(4));
    add("sweep/GL2_5", "GL2:5", VerifyMethod::Both, spec_gl2(5));
    add("sweep/HA2", "HA:2", VerifyMethod::Both, spec_hanaki_a(2));
    add("sweep/HA3", "HA:3", VerifyMethod::Both, spec_hanaki_a(3));
    add("sweep/HB2_1", "HB:2:1", VerifyMethod::Both, spec_hanaki_b(2, 1));
    add("sweep/HB3_1", "HB:3:1", VerifyMethod::Both, spec_hanaki_b(3, 1));
    add("sweep/HB2_2", "HB:2:2", VerifyMethod::Both, spec_hanaki_b(2, 2));
    add("sweep/PQ3_7", "PQ:3:7", VerifyMethod::Both, spec_pq(3, 7),
        std::make_pair(1 + 7 + pq_display_neg_one_exponent(3, 7), 3LL * 7 - 1));
    add("sweep/PQ5_11", "PQ:5:11", VerifyMethod::Both, spec_pq(5, 11),
        std::make_pair(1 + 11 + pq_display_neg_one_exponent(5, 11), 5LL * 11 - 1));
    add("sweep/PQ3_13", "PQ:3:13", VerifyMethod::Both, spec_pq(3, 13),
        std::make_pair(1 + 13 + pq_display_neg_one_exponent(3, 13), 3LL * 13 - 1));
    add("sweep/Sz2xZ2", "F20 x Z:2", VerifyMethod::Both, spec_sz2_quotient(2));

    return cases;
}

// Executes the cases (concurrently when jobs > 1); individual failures are
// recorded in the report, never thrown.
inline VerificationReport run_suite(const std::vector<VerificationCase>& cases, int jobs = 1,
                                    long long max_order = kDefaultMaxOrder,
                                    const CharPolyOptions& cp_opts = {}) {
    VerificationReport report;
    report.cases.resize(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= cases.size()) break;
            report.cases[i] = detail::run_case(cases[i], max_order, cp_opts);
        }
    };
    if (jobs > 1) {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    } else {
        worker();
    }
    report.total = static_cast<int>(report.cases.size());
    for (const auto& c : report.cases)
        if (c.match) ++report.matched;
    return report;
}

inline Json report_to_json(const VerificationReport& report, bool include_runtimes = false) {
    Json j;
    j["summary"] = {{"total", report.total},
                    {"matched", report.matched},
                    {"mismatched", report.total - report.matched}};
    j["cases"] = Json::array();
    for (const auto& c : report.cases) {
        Json jc;
        jc["id"] = c.id;
        jc["group"] = c.group;
        jc["method"] = to_string(c.method);
        jc["order"] = c.order;
        jc["center_order"] = c.center_order;
        jc["ac"] = c.ac;
        if (c.clique_sizes) jc["clique_sizes"] = *c.clique_sizes;
        else jc["clique_sizes"] = nullptr;
        if (c.brute) jc["brute"] = spectrum_to_json(*c.brute);
        if (c.predicted) jc["predicted"] = spectrum_to_json(*c.predicted);
        jc["paths_agree"] = c.paths_agree;
        jc["match"] = c.match;
        jc["errata"] = c.errata;
        if (c.errata) jc["display_defect_confirmed"] = c.display_defect_confirmed;
        if (!c.error.empty()) jc["error"] = c.error;
        if (include_runtimes) jc["runtime_ms"] = c.runtime_ms;
        j["cases"].push_back(std::move(jc));
    }
    return j;
}

} // namespace commspec
