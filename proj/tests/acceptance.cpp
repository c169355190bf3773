// Acceptance suite: runs every criterion end-to-end against the exact
// arithmetic paths and prints one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "commspec/charpoly.hpp"
#include "commspec/closed_forms.hpp"
#include "commspec/commuting_graph.hpp"
#include "commspec/families.hpp"
#include "commspec/group_table.hpp"
#include "commspec/spec_parse.hpp"
#include "commspec/spectrum.hpp"
#include "commspec/verifier.hpp"

using namespace commspec;

namespace {

int failures = 0;

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

void criterion(int number, const std::string& title, double budget_seconds,
               const std::function<void(Check&)>& body) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
        body(check);
    } catch (const std::exception& e) {
        check.require(false, std::string("exception: ") + e.what());
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.require(elapsed < budget_seconds, "exceeded time budget");
    std::printf("[%s] %2d. %s (%.2fs < %.0fs)%s%s\n", check.ok ? "PASS" : "FAIL", number, title.c_str(),
                elapsed, budget_seconds, check.detail.empty() ? "" : " -- ", check.detail.c_str());
    std::fflush(stdout);
    if (!check.ok) ++failures;
}

GroupTable build(const std::string& spec) { return build_group(parse_group_spec(spec)); }

CommutingGraph graph_of(const std::string& spec) { return build_commuting_graph(build(spec)); }

Spectrum brute(const std::string& spec) { return integer_spectrum(char_poly(graph_of(spec))); }

Spectrum clique_path(const std::string& spec) {
    auto d = clique_decomposition(graph_of(spec).adj);
    if (!d) throw std::runtime_error(spec + ": no clique decomposition");
    return clique_union_spectrum(*d);
}

Spectrum literal(std::initializer_list<std::pair<long long, long long>> entries) {
    return make_spectrum(std::vector<std::pair<long long, long long>>(entries));
}

// distinct groups of the default suite, keyed by spec string
std::vector<std::string> suite_groups() {
    std::set<std::string> seen;
    std::vector<std::string> out;
    for (const auto& c : default_suite())
        if (seen.insert(c.group).second) out.push_back(c.group);
    return out;
}

} // namespace

int main() {
    criterion(1, "quasidihedral spectra QD16, QD32 (each under 1s)", 2.0, [](Check& c) {
        for (auto [order, n, expected] : std::vector<std::tuple<int, int, Spectrum>>{
                 {16, 4, literal({{5, 1}, {1, 4}, {-1, 9}})},
                 {32, 5, literal({{13, 1}, {1, 8}, {-1, 21}})}}) {
            auto t0 = std::chrono::steady_clock::now();
            auto s = brute("QD:" + std::to_string(order));
            double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            c.require(s == expected, "QD" + std::to_string(order) + " spectrum mismatch");
            c.require(s == spec_quasidihedral(n).spectrum, "QD" + std::to_string(order) + " formula mismatch");
            c.require(dt < 1.0, "QD" + std::to_string(order) + " exceeded 1s");
        }
    });

    criterion(2, "PSL(2,4) brute spectrum; PSL(2,8) clique structure and spectrum", 60.0, [](Check& c) {
        c.require(brute("PSL2:4") == literal({{3, 6}, {2, 5}, {1, 10}, {-1, 38}}), "PSL(2,4) spectrum mismatch");
        auto cg = graph_of("PSL2:8");
        c.require(cg.vertex_count() == 503, "PSL(2,8) vertex count");
        auto d = clique_decomposition(cg.adj);
        c.require(d.has_value(), "PSL(2,8) graph must decompose into cliques");
        if (d) {
            std::map<int, int> hist;
            for (int s : d->clique_sizes) ++hist[s];
            c.require(hist == std::map<int, int>{{6, 36}, {7, 9}, {8, 28}},
                      "PSL(2,8) clique multiset is not {7^9, 6^36, 8^28}");
            c.require(clique_union_spectrum(*d) == spec_psl2(3).spectrum, "PSL(2,8) clique-path spectrum mismatch");
        }
        // charpoly path is within the spectral cap here; exercise it too
        c.require(integer_spectrum(char_poly(cg)) == spec_psl2(3).spectrum,
                  "PSL(2,8) charpoly-path spectrum mismatch");
    });

    criterion(3, "GL(2,q) spectra for q = 3, 4, 5", 30.0, [](Check& c) {
        auto gl3 = brute("GL2:3");
        c.require(gl3 == literal({{5, 3}, {3, 4}, {1, 6}, {-1, 33}}), "GL(2,3) spectrum mismatch");
        c.require(gl3 == spec_gl2(3).spectrum, "GL(2,3) formula mismatch");
        c.require(clique_path("GL2:4") == spec_gl2(4).spectrum, "GL(2,4) clique-path mismatch");
        c.require(clique_path("GL2:5") == spec_gl2(5).spectrum, "GL(2,5) clique-path mismatch");
    });

    criterion(4, "Sz(2) theorem: F20 and F20 x Z2", 5.0, [](Check& c) {
        c.require(brute("F20") == literal({{3, 1}, {2, 5}, {-1, 13}}), "F20 spectrum mismatch");
        auto f20z2 = brute("F20 x Z:2");
        c.require(f20z2 == literal({{7, 1}, {5, 5}, {-1, 32}}), "F20 x Z2 spectrum mismatch");
        c.require(f20z2 == spec_sz2_quotient(2).spectrum, "F20 x Z2 formula mismatch");
    });

    criterion(5, "Hanaki families A(n,theta) and A(n,p)", 30.0, [](Check& c) {
        c.require(brute("HA:2") == literal({{3, 3}, {-1, 9}}), "A(2,theta) spectrum mismatch");
        c.require(brute("HA:3") == literal({{7, 7}, {-1, 49}}), "A(3,theta) spectrum mismatch");
        c.require(brute("HB:2:1") == literal({{1, 3}, {-1, 3}}), "A(1,2) spectrum mismatch");
        c.require(brute("HB:3:1") == literal({{5, 4}, {-1, 20}}), "A(1,3) spectrum mismatch");
        c.require(brute("HB:2:2") == spec_hanaki_b(2, 2).spectrum, "A(2,2) formula mismatch");
    });

    criterion(6, "dihedral m = 3..10 and generalized quaternion n = 2..8 sweeps", 5.0, [](Check& c) {
        for (long long m = 3; m <= 10; ++m)
            c.require(brute("D:" + std::to_string(2 * m)) == spec_dihedral(m).spectrum,
                      "D_" + std::to_string(2 * m) + " mismatch");
        for (long long n = 2; n <= 8; ++n)
            c.require(brute("Q:" + std::to_string(4 * n)) == spec_quaternion(n).spectrum,
                      "Q_" + std::to_string(4 * n) + " mismatch");
    });

    criterion(7, "all six order-16 groups have spectrum {3^3, (-1)^9}", 5.0, [](Check& c) {
        auto expected = literal({{3, 3}, {-1, 9}});
        for (const char* g : {"Z:2 x D:8", "Z:2 x Q:8", "M16", "Z4sZ4", "D8cZ4", "SG16_3"})
            c.require(brute(g) == expected, std::string(g) + " mismatch");
    });

    criterion(8, "order-pq spectra; displayed -1 exponent fails the vertex count", 5.0, [](Check& c) {
        c.require(brute("PQ:3:7") == literal({{5, 1}, {1, 7}, {-1, 12}}), "Z7:Z3 spectrum mismatch");
        auto z11z5 = brute("PQ:5:11");
        c.require(z11z5 == spec_pq(5, 11).spectrum, "Z11:Z5 formula mismatch");
        c.require(z11z5 == literal({{9, 1}, {3, 11}, {-1, 42}}), "Z11:Z5 spectrum mismatch");
        for (auto [p, q] : std::vector<std::pair<long long, long long>>{{3, 7}, {5, 11}}) {
            long long displayed_total = 1 + q + pq_display_neg_one_exponent(p, q);
            long long vertices = p * q - 1;
            c.require(displayed_total != vertices, "displayed exponent unexpectedly passes the identity");
            c.require(spec_pq(p, q).spectrum.integer_multiplicity_total() == vertices,
                      "corrected exponent fails the identity");
        }
    });

    criterion(9, "S4 characteristic polynomial and non-integrality", 1.0, [](Check& c) {
        IntPolynomial expected = IntPolynomial{-1, 1}.pow(7) * IntPolynomial{1, 1}.pow(10) *
                                 IntPolynomial{-5, 0, 1} * IntPolynomial{-5, 0, 1} *
                                 IntPolynomial{-2, -3, 1};
        auto cp = char_poly(graph_of("S:4"));
        c.require(cp == expected, "S4 characteristic polynomial mismatch");
        c.require(!integer_spectrum(cp).is_integral, "S4 must not be integral");
    });

    criterion(10, "integrality across the planar, toroidal and complement-planar lists", 60.0, [](Check& c) {
        for (const char* g : {"D:6", "D:8", "D:10", "D:12", "Q:8", "Q:12", "Z:2 x D:8", "Z:2 x Q:8",
                              "M16", "Z4sZ4", "D8cZ4", "SG16_3", "A:4", "A:5", "SL2:3", "F20"})
            c.require(brute(g).is_integral, std::string("planar-list group not integral: ") + g);
        c.require(!brute("S:4").is_integral, "S4 must be the only non-integral planar case");
        for (const char* g : {"D:14", "D:16", "Q:16", "QD:16", "D:6 x Z:3", "A:4 x Z:2", "PQ:3:7"})
            c.require(brute(g).is_integral, std::string("toroidal-list group not integral: ") + g);
        for (const char* g : {"D:6", "D:8", "Q:8"})
            c.require(brute(g).is_integral, std::string("complement-list group not integral: ") + g);
    });

    criterion(11, "property suites: clique unions, axioms, intersections, coefficient identities", 120.0,
              [](Check& c) {
        // (a) 200 random clique unions, fixed seed
        std::mt19937_64 rng(0xC11C0DE5);
        for (int t = 0; t < 200; ++t) {
            std::vector<int> sizes;
            int budget = 1 + static_cast<int>(rng() % 60);
            while (budget > 0) {
                int s = 1 + static_cast<int>(rng() % std::min(budget, 12));
                sizes.push_back(s);
                budget -= s;
            }
            auto adj = adjacency_from_clique_sizes(sizes);
            if (clique_union_spectrum(sizes) != integer_spectrum(char_poly(adj))) {
                c.require(false, "clique-union spectrum mismatch at trial " + std::to_string(t));
                break;
            }
        }
        // (b)-(d) over every distinct group in the suite
        for (const std::string& spec : suite_groups()) {
            GroupTable g = build(spec);
            try {
                verify_axioms(g);
            } catch (const std::exception& e) {
                c.require(false, spec + ": " + e.what());
                continue;
            }
            auto z = center(g);
            bool ac = is_ac_group(g);
            if (ac) {
                auto fam = centralizer_family(g);
                for (std::size_t i = 0; i < fam.members.size() && c.ok; ++i)
                    for (std::size_t j = i + 1; j < fam.members.size(); ++j)
                        if (fam.members[i].intersect(fam.members[j]) != z) {
                            c.require(false, spec + ": centralizer intersection is not the centre");
                            break;
                        }
            }
            auto cg = build_commuting_graph(g);
            CharPolyOptions validated;
            validated.bareiss_check_max = validated.max_vertices; // full-size determinant cross-check
            auto cp = char_poly(cg, validated);
            int v = cg.vertex_count();
            c.require(cp[v - 1] == 0, spec + ": nonzero trace coefficient");
            c.require(cp[v - 2] == -BigInt(cg.edge_count), spec + ": edge-count coefficient mismatch");
        }
    });

    criterion(12, "full verification suite matches throughout", 600.0, [](Check& c) {
        auto report = run_suite(default_suite());
        c.require(report.total >= 40, "suite too small");
        for (const auto& r : report.cases)
            if (!r.match) {
                c.require(false, r.id + " failed" + (r.error.empty() ? "" : (": " + r.error)));
                break;
            }
    });

    if (failures == 0) std::printf("RESULT: all %d criteria passed\n", 12);
    else std::printf("RESULT: %d criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
