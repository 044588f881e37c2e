#include "doctest.h"

#include <cmath>
#include <random>

#include "sg/construct.hpp"
#include "sg/enumerate.hpp"
#include "sg/spectra.hpp"
#include "sg/tu.hpp"
#include "sg/verify.hpp"

using namespace sg;

namespace {

RealSpectrum spec_of(const SignedGraph& g) { return eigenvalues(adjacency_matrix(g)); }

RealSpectrum make_spectrum(std::vector<double> v) { return RealSpectrum::from_values(std::move(v)); }

} // namespace

TEST_CASE("partial transpose moves exactly the off-diagonal cross edges") {
    SignedGraph g = example31_graph();
    SignedGraph gt = partial_transpose(g, {3});
    CHECK_FALSE(gt.edge_sign(0, 5).has_value());
    CHECK(gt.edge_sign(2, 3) == Sign::positive);  // (u1,v3) -> (u3,v1)
    CHECK(gt.edge_sign(0, 3) == Sign::negative);  // diagonal cross edge kept
    CHECK(gt.edge_sign(0, 1) == Sign::positive);  // intra edges kept

    // no cross edges: fixed point
    SignedGraph intra = SignedGraph::build(4, {{0, 1, Sign::negative}, {2, 3, Sign::positive}});
    CHECK(partial_transpose(intra, {2}) == intra);

    // symmetric cross edges: fixed point
    SignedGraph sym = SignedGraph::build(4, {{0, 3, Sign::negative}, {1, 2, Sign::negative}});
    CHECK(partial_transpose(sym, {2}) == sym);

    CHECK_THROWS_AS(partial_transpose(SignedGraph::build(3, {}), Bipartition{1}), error);
}

TEST_CASE("partial transpose is an involution and preserves total degree") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 20; ++t) {
        int k = 2 + static_cast<int>(rng() % 3);
        SignedGraph g = random_signed_graph(2 * k, rng);
        SignedGraph gt = partial_transpose(g, {k});
        CHECK(partial_transpose(gt, {k}) == g);
        int before = 0, after = 0;
        for (int v = 0; v < 2 * k; ++v) {
            before += g.degree(v);
            after += gt.degree(v);
        }
        CHECK(before == after);
    }
}

TEST_CASE("path family matches the published octics at n=4") {
    TheoremFamily fam = theorem31_family(4);
    IntPolynomial first = IntPolynomial::from_descending(
        {1, -18, 131, -498, 1061, -1256, 764, -200, 16});
    IntPolynomial second = IntPolynomial::from_descending(
        {1, -18, 131, -498, 1065, -1288, 848, -280, 36});
    CHECK(char_poly_exact(laplacian_matrix(fam.gamma1)) == first);
    CHECK(char_poly_exact(laplacian_matrix(fam.gamma1_tau)) == first);
    CHECK(char_poly_exact(laplacian_matrix(fam.gamma2)) == second);
    CHECK(char_poly_exact(laplacian_matrix(fam.gamma3)) == second);
    CHECK(fam.gamma1_tau == partial_transpose(fam.gamma1, {4}));
    CHECK_THROWS_AS(theorem31_family(2), error);
}

TEST_CASE("path family pairs stay cospectral and non-isomorphic as n grows") {
    for (int n = 3; n <= 7; ++n) {
        TheoremFamily fam = theorem31_family(n);
        CHECK(laplacian_cospectral(fam.gamma1, fam.gamma1_tau));
        CHECK(laplacian_cospectral(fam.gamma2, fam.gamma3));
        CHECK_FALSE(signed_isomorphic(fam.gamma1, fam.gamma1_tau, 2 * n).has_value());
        CHECK_FALSE(signed_isomorphic(fam.gamma2, fam.gamma3, 2 * n).has_value());
    }
}

TEST_CASE("cycle family at n=4, i=1, j=3") {
    TheoremFamily fam = theorem32_family(4, 1, 3);
    CHECK(char_poly_exact(laplacian_matrix(fam.gamma1)) ==
          IntPolynomial::from_descending({1, -22, 197, -928, 2476, -3736, 2976, -1056, 128}));
    CHECK(laplacian_cospectral(fam.gamma1, fam.gamma1_tau));
    REQUIRE(fam.gamma4.has_value());
    REQUIRE(fam.gamma5.has_value());
    CHECK(laplacian_cospectral(fam.gamma2, fam.gamma3));
    CHECK(laplacian_cospectral(*fam.gamma4, *fam.gamma5));
    CHECK_FALSE(signed_isomorphic(fam.gamma2, fam.gamma3).has_value());
    CHECK_FALSE(signed_isomorphic(*fam.gamma4, *fam.gamma5).has_value());

    CHECK_THROWS_AS(theorem32_family(3, 1, 3), error);
    CHECK_THROWS_AS(theorem32_family(5, 1, 2), error); // adjacent on the cycle
    CHECK_THROWS_AS(theorem32_family(5, 1, 5), error); // wraparound neighbors
}

TEST_CASE("cycle family pairs for larger n with i=1") {
    for (auto [n, i, j] : std::vector<std::tuple<int, int, int>>{{5, 1, 3}, {6, 1, 4}, {7, 1, 3}}) {
        TheoremFamily fam = theorem32_family(n, i, j);
        CHECK(laplacian_cospectral(fam.gamma1, fam.gamma1_tau));
        CHECK(laplacian_cospectral(fam.gamma2, fam.gamma3));
        CHECK(laplacian_cospectral(*fam.gamma4, *fam.gamma5));
        CHECK_FALSE(signed_isomorphic(fam.gamma1, fam.gamma1_tau, 2 * n).has_value());
        CHECK_FALSE(signed_isomorphic(fam.gamma2, fam.gamma3, 2 * n).has_value());
        CHECK_FALSE(signed_isomorphic(*fam.gamma4, *fam.gamma5, 2 * n).has_value());
    }
}

TEST_CASE("subdivision") {
    SignedGraph k2 = SignedGraph::build(2, {{0, 1, Sign::positive}});
    SignedGraph s = subdivision(k2, default_orientation(k2));
    CHECK(s.order() == 3);
    CHECK(s.edge_sign(0, 2) == Sign::positive);
    CHECK(s.edge_sign(1, 2) == Sign::negative);
    CHECK(switching_isomorphic(s, path_graph(3, Sign::positive)));
    CHECK(approx_equal(spec_of(s), make_spectrum({std::sqrt(2.0), 0.0, -std::sqrt(2.0)})));

    SignedGraph c3 = cycle_graph(3, 0);
    SignedGraph sc3 = subdivision(c3, default_orientation(c3));
    CHECK_FALSE(is_balanced(sc3)); // six-cycle with sign -1
    double r3 = std::sqrt(3.0);
    CHECK(approx_equal(spec_of(sc3), make_spectrum({r3, r3, 0.0, 0.0, -r3, -r3})));

    SignedGraph sm = subdivision(c3_minus(), default_orientation(c3_minus()));
    CHECK(approx_equal(spec_of(sm), make_spectrum({2, 1, 1, -1, -1, -2})));
}

TEST_CASE("s_p agrees with subdivision at p=1 and follows the spectrum law") {
    std::mt19937_64 rng(59);
    for (int t = 0; t < 10; ++t) {
        SignedGraph g = random_connected_signed_graph(4 + static_cast<int>(rng() % 2), rng);
        CHECK(s_p(g, 1) == subdivision(g, default_orientation(g)));
    }

    SignedGraph s2 = s_p(c3_minus(), 2);
    CHECK(s2.order() == 9);
    CHECK(s2.size() == 12);
    CHECK(approx_equal(spec_of(s2),
                       make_spectrum({std::sqrt(8.0), std::sqrt(2.0), std::sqrt(2.0), 0, 0, 0,
                                      -std::sqrt(2.0), -std::sqrt(2.0), -std::sqrt(8.0)})));

    CHECK_THROWS_AS(s_p(c3_minus(), 0), error);
    CHECK_THROWS_AS(s_p(SignedGraph::build(4, {{0, 1, Sign::positive}}), 2), error);
}

TEST_CASE("s_p_k block structure and spectrum") {
    SignedGraph s11 = s_p_k(c3_minus(), 1, 1);
    CHECK(s11.order() == 12);
    CHECK(s11.size() == 24);
    CHECK(approx_equal(spec_of(s11),
                       make_spectrum({4, 2, 2, 0, 0, 0, 0, 0, 0, -2, -2, -4})));

    CHECK_THROWS_AS(s_p_k(c3_minus(), 2, 0), error);
    CHECK_THROWS_AS(s_p_k(SignedGraph::build(3, {{0, 1, Sign::positive}}), 1, 1), error);

    // adjacency decomposes into incidence blocks: every (vertex block a,
    // edge block b) slot equals B, everything else is zero
    SignedGraph g = cycle_graph(4, 1);
    IntMatrix b = incidence_matrix(g, default_orientation(g));
    const int n = g.order(), m = g.size();
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}}) {
        SignedGraph spk = s_p_k(g, p, k);
        IntMatrix a = adjacency_matrix(spk);
        auto vrow = [&](int blk, int v) { return blk * (n + m) + v; };
        auto ecol = [&](int blk, int j) { return blk * (n + m) + n + j; };
        for (int pa = 0; pa <= p; ++pa)
            for (int kb = 0; kb <= k; ++kb)
                for (int v = 0; v < n; ++v)
                    for (int j = 0; j < m; ++j)
                        CHECK(a.at(vrow(pa, v), ecol(kb, j)) == b.at(v, j));
        // vertex blocks never touch each other
        for (int pa = 0; pa <= p; ++pa)
            for (int pb = 0; pb <= p; ++pb)
                for (int v = 0; v < n; ++v)
                    for (int w = 0; w < n; ++w)
                        CHECK(a.at(vrow(pa, v), vrow(pb, w)) == 0);
    }
}

TEST_CASE("predicted spectra") {
    RealSpectrum unicyc = make_spectrum({4, 1, 1});
    CHECK(approx_equal(predicted_sp_spectrum(unicyc, 3, 3, 1, false),
                       make_spectrum({2, 1, 1, -1, -1, -2})));
    CHECK(approx_equal(predicted_sp_spectrum(make_spectrum({2, 0}), 2, 1, 1, true),
                       make_spectrum({std::sqrt(2.0), 0.0, -std::sqrt(2.0)})));
    CHECK(approx_equal(predicted_spk_spectrum(unicyc, 3, 3, 1, 1, false),
                       make_spectrum({4, 2, 2, 0, 0, 0, 0, 0, 0, -2, -2, -4})));

    // (p, k) = (1, 0) scales like p' = 2 on the nonzero part
    auto a = predicted_spk_spectrum(unicyc, 3, 3, 1, 0, false).expanded();
    auto b = predicted_sp_spectrum(unicyc, 3, 3, 2, false).expanded();
    std::vector<double> nz_a, nz_b;
    for (double v : a)
        if (std::abs(v) > 1e-9) nz_a.push_back(v);
    for (double v : b)
        if (std::abs(v) > 1e-9) nz_b.push_back(v);
    CHECK(nz_a == nz_b);

    // entry counts
    CHECK(predicted_spk_spectrum(unicyc, 3, 3, 2, 1, false).total_multiplicity() ==
          3 * 3 + 2 * 3);

    CHECK_THROWS_AS(predicted_sp_spectrum(make_spectrum({3, -1}), 2, 1, 1, false), error);
    CHECK_THROWS_AS(predicted_sp_spectrum(make_spectrum({3, 2}), 2, 1, 1, true), error);
    CHECK_THROWS_AS(predicted_spk_spectrum(unicyc, 3, 3, 2, 0, false), error);
}

TEST_CASE("products") {
    SignedGraph k1 = SignedGraph::build(1, {});
    std::mt19937_64 rng(61);
    for (int t = 0; t < 5; ++t) {
        SignedGraph g = random_signed_graph(4, rng);
        SignedGraph gp = cartesian_product(g, k1);
        CHECK(signed_isomorphic(g, gp).has_value());
    }

    for (int t = 0; t < 5; ++t) {
        SignedGraph g1 = random_signed_graph(3, rng);
        SignedGraph g2 = random_signed_graph(4, rng);
        CHECK(adjacency_matrix(kronecker_product(g1, g2)) ==
              kronecker_matrix(adjacency_matrix(g1), adjacency_matrix(g2)));

        auto e1 = spec_of(g1).expanded();
        auto e2 = spec_of(g2).expanded();
        std::vector<double> sums;
        for (double x : e1)
            for (double y : e2) sums.push_back(x + y);
        CHECK(approx_equal(eigenvalues(adjacency_matrix(cartesian_product(g1, g2)), 1e-7),
                           RealSpectrum::from_values(std::move(sums), 1e-7), 1e-7));
    }

    SignedGraph k2 = SignedGraph::build(2, {{0, 1, Sign::positive}});
    SignedGraph s = subdivision(c3_minus(), default_orientation(c3_minus()));
    CHECK(approx_equal(spec_of(cartesian_product(s, k2)),
                       make_spectrum({3, 2, 2, 1, 0, 0, 0, 0, -1, -2, -2, -3})));
    CHECK(approx_equal(spec_of(kronecker_product(s, k2)),
                       make_spectrum({2, 2, 1, 1, 1, 1, -1, -1, -1, -1, -2, -2})));
}

TEST_CASE("equienergetic product check") {
    EquienergeticReport rep = equienergetic_subdivision_check(c3_minus());
    CHECK(rep.noncospectral);
    CHECK(rep.equienergetic);
    CHECK(rep.condition_mu_n_ge_1);

    for (SignedGraph g : {cycle_graph(4, 1), cycle_graph(5, 1)}) {
        EquienergeticReport r = equienergetic_subdivision_check(g);
        CHECK((r.noncospectral && r.equienergetic) == r.condition_mu_n_ge_1);
    }

    CHECK_THROWS_AS(equienergetic_subdivision_check(cycle_graph(4, 0)), error); // balanced
    CHECK_THROWS_AS(equienergetic_subdivision_check(path_graph(3, Sign::negative)), error);
}

TEST_CASE("spectrum laws on small connected graphs") {
    for (int n = 2; n <= 4; ++n) {
        for (const SignedGraph& g : enumerate_signed_graphs(n, true)) {
            bool balanced = is_balanced(g);
            RealSpectrum lap = eigenvalues(laplacian_matrix(g));
            for (int p = 1; p <= 2; ++p)
                CHECK(approx_equal(spec_of(s_p(g, p)),
                                   predicted_sp_spectrum(lap, g.order(), g.size(), p, balanced)));
            CHECK(approx_equal(spec_of(s_p_k(g, 1, 1)),
                               predicted_spk_spectrum(lap, g.order(), g.size(), 1, 1, balanced)));
        }
    }
}

TEST_CASE("energy scaling for the cloning operations") {
    std::mt19937_64 rng(67);
    for (int t = 0; t < 6; ++t) {
        SignedGraph g = random_connected_signed_graph(5, rng);
        double base = energy(subdivision(g, default_orientation(g)));
        for (int p : {2, 3})
            CHECK(energy(s_p(g, p)) == doctest::Approx(std::sqrt(double(p)) * base).epsilon(1e-10));
        CHECK(energy(s_p_k(g, 1, 0)) ==
              doctest::Approx(std::sqrt(2.0) * base).epsilon(1e-10));
    }
}

TEST_CASE("cospectral pairs survive the cloning pipeline") {
    TheoremFamily fam = theorem31_family(3);
    SignedGraph a = s_p(fam.gamma1, 2);
    SignedGraph b = s_p(fam.gamma1_tau, 2);
    CHECK(cospectral(a, b));
    CHECK_FALSE(signed_isomorphic(a, b, a.order()).has_value());
}
