#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "commspec/charpoly.hpp"
#include "commspec/commuting_graph.hpp"
#include "commspec/families.hpp"
#include "commspec/spec_parse.hpp"
#include "commspec/spectrum.hpp"

using namespace commspec;

namespace {

CommutingGraph graph_of(const std::string& spec) {
    return build_commuting_graph(build_group(parse_group_spec(spec)));
}

// Independent oracle: Faddeev-LeVerrier over exact integers, O(V^4).
// p(x) = x^n + c_{n-1} x^{n-1} + ... + c_0 with
// M_1 = A, c_{n-k} = -tr(M_k)/k, M_{k+1} = A (M_k + c_{n-k} I).
IntPolynomial faddeev_leverrier(const AdjacencyMatrix& a) {
    const int n = a.size();
    std::vector<std::vector<BigInt>> A(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A[i][j] = a.at(i, j) ? 1 : 0;
    std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1, 0);
    coeffs[static_cast<std::size_t>(n)] = 1;
    auto M = A;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            // M = A * (M + c I)
            const BigInt& c = coeffs[static_cast<std::size_t>(n - k + 1)];
            auto T = M;
            for (int i = 0; i < n; ++i) T[i][i] += c;
            std::vector<std::vector<BigInt>> next(static_cast<std::size_t>(n),
                                                  std::vector<BigInt>(static_cast<std::size_t>(n), 0));
            for (int i = 0; i < n; ++i)
                for (int l = 0; l < n; ++l) {
                    if (A[i][l] == 0) continue;
                    for (int j = 0; j < n; ++j) next[i][j] += T[l][j];
                }
            M = std::move(next);
        }
        BigInt tr = 0;
        for (int i = 0; i < n; ++i) tr += M[i][i];
        coeffs[static_cast<std::size_t>(n - k)] = -tr / k; // exact
    }
    return IntPolynomial(std::move(coeffs));
}

AdjacencyMatrix random_graph(int n, double p, std::mt19937_64& rng) {
    AdjacencyMatrix a(n);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) a.add_edge(i, j);
    return a;
}

const IntPolynomial s4_literal = IntPolynomial{-1, 1}.pow(7) * IntPolynomial{1, 1}.pow(10) *
                                 IntPolynomial{-5, 0, 1} * IntPolynomial{-5, 0, 1} *
                                 IntPolynomial{-2, -3, 1};

} // namespace

TEST_CASE("characteristic polynomials of tiny graphs") {
    CHECK(char_poly(adjacency_from_clique_sizes({3})) == IntPolynomial{-2, -3, 0, 1}); // (x-2)(x+1)^2
    CHECK(char_poly(adjacency_from_clique_sizes({1, 1, 1})) == IntPolynomial{0, 0, 0, 1}); // x^3
    CHECK(char_poly(adjacency_from_clique_sizes({2})) == IntPolynomial{-1, 0, 1});         // x^2 - 1
    CHECK(char_poly(AdjacencyMatrix(0)) == IntPolynomial::one());
    CHECK(char_poly(AdjacencyMatrix(1)) == IntPolynomial{0, 1});
}

TEST_CASE("modular CRT path agrees with the Faddeev-LeVerrier oracle") {
    for (const char* spec : {"D:6", "Q:8", "A:4", "QD:16", "S:4", "SL2:3", "GL2:3"}) {
        INFO(spec);
        auto cg = graph_of(spec);
        CHECK(char_poly(cg) == faddeev_leverrier(cg.adj));
    }
    std::mt19937_64 rng(20250810);
    for (int t = 0; t < 12; ++t) {
        auto a = random_graph(4 + static_cast<int>(rng() % 16), 0.4, rng);
        INFO("random graph " << t << " on " << a.size() << " vertices");
        CHECK(char_poly(a) == faddeev_leverrier(a));
    }
}

TEST_CASE("S4 characteristic polynomial matches the factored literal") {
    auto cg = graph_of("S:4");
    CHECK(cg.vertex_count() == 23);
    CHECK(char_poly(cg) == s4_literal);
}

TEST_CASE("trace and edge-count coefficient identities") {
    for (const char* spec : {"D:8", "QD:16", "S:4", "GL2:3", "F20", "HB:2:2"}) {
        INFO(spec);
        auto cg = graph_of(spec);
        auto cp = char_poly(cg);
        int v = cg.vertex_count();
        CHECK(cp.degree() == v);
        CHECK(cp[v - 1] == 0);                    // zero trace
        CHECK(cp[v - 2] == -BigInt(cg.edge_count)); // -|E|
    }
}

TEST_CASE("bareiss determinant basics") {
    CHECK(bareiss_determinant({}) == 1);
    CHECK(bareiss_determinant({{BigInt(7)}}) == 7);
    CHECK(bareiss_determinant({{BigInt(1), BigInt(2)}, {BigInt(3), BigInt(4)}}) == -2);
    CHECK(bareiss_determinant({{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(0)}}) == -1); // needs a pivot swap
    CHECK(bareiss_determinant({{BigInt(1), BigInt(2)}, {BigInt(2), BigInt(4)}}) == 0);
    // det(-A) = (-1)^n char_poly(0)
    auto cg = graph_of("A:4");
    const int n = cg.vertex_count();
    std::vector<std::vector<BigInt>> neg(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) neg[i][j] = cg.adj.at(i, j) ? -1 : 0;
    BigInt det = bareiss_determinant(neg);
    CHECK(det == char_poly(cg)[0]);
}

TEST_CASE("spectral cap is enforced") {
    AdjacencyMatrix big(601);
    CHECK_THROWS_AS(char_poly(big), CapExceededError);
    CharPolyOptions loose;
    loose.max_vertices = 700;
    CHECK(char_poly(big, loose) == IntPolynomial::monomial(601));
}

TEST_CASE("charpoly options do not change the result") {
    auto cg = graph_of("QD:32");
    CharPolyOptions threaded;
    threaded.threads = 2;
    CharPolyOptions no_check;
    no_check.bareiss_check_max = 0;
    auto base = char_poly(cg);
    CHECK(base == char_poly(cg, threaded));
    CHECK(base == char_poly(cg, no_check));
}

TEST_CASE("integer spectrum extraction") {
    // complete graph K6
    auto k6 = integer_spectrum(char_poly(adjacency_from_clique_sizes({6})));
    CHECK(k6.eigenvalues == std::vector<EigenEntry>{{5, 1}, {-1, 5}});
    CHECK(k6.is_integral);
    CHECK(k6.residual == IntPolynomial::one());

    // S4: two integer eigenvalues plus a degree-6 residual
    auto s4 = integer_spectrum(s4_literal);
    CHECK(s4.eigenvalues == std::vector<EigenEntry>{{1, 7}, {-1, 10}});
    CHECK_FALSE(s4.is_integral);
    CHECK(s4.residual == IntPolynomial{-5, 0, 1} * IntPolynomial{-5, 0, 1} * IntPolynomial{-2, -3, 1});

    // A5 = PSL(2,4)
    auto a5 = integer_spectrum(char_poly(graph_of("A:5")));
    CHECK(a5.eigenvalues == std::vector<EigenEntry>{{3, 6}, {2, 5}, {1, 10}, {-1, 38}});
    CHECK(a5.is_integral);

    CHECK_THROWS_AS(integer_spectrum(IntPolynomial{1, 2}), std::invalid_argument);

    // zero roots are peeled off first
    auto with_zeros = integer_spectrum(IntPolynomial{0, 0, -1, 1}); // x^2 (x - 1)
    CHECK(with_zeros.eigenvalues == std::vector<EigenEntry>{{1, 1}, {0, 2}});

    // roots beyond the degree bound are still found through the constant term
    auto big_root = integer_spectrum(IntPolynomial{-1000000, 1}); // x - 10^6
    CHECK(big_root.eigenvalues == std::vector<EigenEntry>{{1000000, 1}});
}

TEST_CASE("clique union spectra") {
    CHECK(clique_union_spectrum({6, 2, 2, 2, 2}).eigenvalues ==
          std::vector<EigenEntry>{{5, 1}, {1, 4}, {-1, 9}});
    CHECK(clique_union_spectrum({3, 3}).eigenvalues == std::vector<EigenEntry>{{2, 2}, {-1, 4}});
    CHECK(clique_union_spectrum({1, 1, 1}).eigenvalues == std::vector<EigenEntry>{{0, 3}});
    CHECK_THROWS_AS(clique_union_spectrum(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("clique-union spectra equal charpoly spectra on random unions") {
    std::mt19937_64 rng(424242);
    for (int t = 0; t < 60; ++t) {
        std::vector<int> sizes;
        int budget = 3 + static_cast<int>(rng() % 58);
        while (budget > 0) {
            int s = 1 + static_cast<int>(rng() % std::min(budget, 9));
            sizes.push_back(s);
            budget -= s;
        }
        INFO("trial " << t);
        auto adj = adjacency_from_clique_sizes(sizes);
        auto via_formula = clique_union_spectrum(sizes);
        auto cp = char_poly(adj);
        auto via_charpoly = integer_spectrum(cp);
        CHECK(via_formula == via_charpoly);
        CHECK(reassemble_char_poly(via_charpoly) == cp);
    }
}

TEST_CASE("spectrum dimension and trace identities on group graphs") {
    for (const char* spec : {"QD:16", "S:4", "GL2:3", "A:5", "PQ:3:7"}) {
        INFO(spec);
        auto cg = graph_of(spec);
        auto s = integer_spectrum(char_poly(cg));
        CHECK(s.dimension() == cg.vertex_count());
        BigInt trace = 0;
        for (const auto& e : s.eigenvalues) trace += BigInt(e.value) * e.multiplicity;
        if (!s.is_integral) trace -= s.residual[s.residual.degree() - 1]; // sum of residual roots
        CHECK(trace == 0);
    }
}

TEST_CASE("spectrum formatting") {
    auto s = clique_union_spectrum({6, 2, 2, 2, 2});
    CHECK(s.to_string() == "{5^1, 1^4, (-1)^9}");
    CHECK(make_spectrum({}).to_string() == "{}");
}
