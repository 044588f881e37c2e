#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "sg/linalg.hpp"
#include "sg/enumerate.hpp"
#include "sg/verify.hpp"

using namespace sg;

TEST_CASE("adjacency and laplacian matrices") {
    SignedGraph k2 = SignedGraph::build(2, {{0, 1, Sign::positive}});
    IntMatrix a = adjacency_matrix(k2);
    CHECK(a.at(0, 1) == 1);
    CHECK(a.at(1, 0) == 1);
    CHECK(a.at(0, 0) == 0);

    IntMatrix l = laplacian_matrix(k2);
    CHECK(l.at(0, 0) == 1);
    CHECK(l.at(0, 1) == -1);

    SignedGraph k2n = SignedGraph::build(2, {{0, 1, Sign::negative}});
    IntMatrix ln = laplacian_matrix(k2n); // signless form
    CHECK(ln.at(0, 0) == 1);
    CHECK(ln.at(0, 1) == 1);

    IntMatrix ac = adjacency_matrix(c3_minus());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(ac.at(i, j) == (i == j ? 0 : -1));

    IntMatrix lc = laplacian_matrix(c3_minus());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(lc.at(i, j) == (i == j ? 2 : 1));

    CHECK(adjacency_matrix(SignedGraph::build(3, {})) == IntMatrix(3, 3));
}

TEST_CASE("default orientation convention") {
    SignedGraph k2 = SignedGraph::build(2, {{0, 1, Sign::positive}});
    CHECK(default_orientation(k2).incidences[0] == std::pair{1, -1});

    SignedGraph k2n = SignedGraph::build(2, {{0, 1, Sign::negative}});
    CHECK(default_orientation(k2n).incidences[0] == std::pair{1, 1});

    for (auto inc : default_orientation(c3_minus()).incidences) CHECK(inc == std::pair{1, 1});
}

TEST_CASE("incidence matrix factorizes the laplacian") {
    SignedGraph k2 = SignedGraph::build(2, {{0, 1, Sign::positive}});
    IntMatrix b = incidence_matrix(k2, default_orientation(k2));
    CHECK(b.at(0, 0) == 1);
    CHECK(b.at(1, 0) == -1);
    CHECK(b * b.transpose() == laplacian_matrix(k2));

    IntMatrix bc = incidence_matrix(c3_minus(), default_orientation(c3_minus()));
    IntMatrix prod = bc * bc.transpose();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(prod.at(i, j) == (i == j ? 2 : 1));

    // any valid orientation works: reversing a column keeps condition (c)
    SignedGraph p4 = path_graph(4, Sign::positive);
    Orientation o = default_orientation(p4);
    o.incidences[1] = {-1, 1};
    IntMatrix bp = incidence_matrix(p4, o);
    CHECK(bp * bp.transpose() == laplacian_matrix(p4));
    CHECK(rank_exact(bp) == 3); // tree: n-1

    Orientation bad = default_orientation(p4);
    bad.incidences[0] = {1, 1}; // violates (c) on a positive edge
    CHECK_THROWS_AS(incidence_matrix(p4, bad), error);
}

TEST_CASE("exact characteristic polynomials") {
    SignedGraph k2 = SignedGraph::build(2, {{0, 1, Sign::positive}});
    CHECK(char_poly_exact(laplacian_matrix(k2)) ==
          IntPolynomial::from_descending({1, -2, 0}));

    CHECK(char_poly_exact(laplacian_matrix(c3_minus())) ==
          IntPolynomial::from_descending({1, -6, 9, -4}));

    CHECK(char_poly_exact(laplacian_matrix(example31_graph())) ==
          IntPolynomial::from_descending({1, -14, 73, -176, 196, -88, 12}));

    CHECK_THROWS_AS(char_poly_exact(IntMatrix(2, 3)), error);
}

TEST_CASE("floating eigenvalues with merging") {
    RealSpectrum sa = eigenvalues(adjacency_matrix(c3_minus()));
    REQUIRE(sa.entries().size() == 2);
    CHECK(sa.entries()[0].value == doctest::Approx(1.0));
    CHECK(sa.entries()[0].multiplicity == 2);
    CHECK(sa.entries()[1].value == doctest::Approx(-2.0));

    RealSpectrum sl = eigenvalues(laplacian_matrix(c3_minus()));
    REQUIRE(sl.entries().size() == 2);
    CHECK(sl.entries()[0].value == doctest::Approx(4.0));
    CHECK(sl.entries()[1].multiplicity == 2);

    RealSpectrum zero = eigenvalues(IntMatrix(3, 3));
    REQUIRE(zero.entries().size() == 1);
    CHECK(zero.entries()[0].multiplicity == 3);

    IntMatrix asym(2, 2);
    asym.at(0, 1) = 1;
    CHECK_THROWS_AS(eigenvalues(asym), error);
}

TEST_CASE("kronecker matrix") {
    IntMatrix q(2, 2);
    q.at(0, 0) = 5;
    q.at(1, 1) = -3;
    q.at(0, 1) = 2;
    q.at(1, 0) = 2;
    IntMatrix block = kronecker_matrix(IntMatrix::identity(2), q);
    CHECK(block.at(0, 0) == 5);
    CHECK(block.at(2, 2) == 5);
    CHECK(block.at(0, 2) == 0);

    IntMatrix swap(2, 2);
    swap.at(0, 1) = 1;
    swap.at(1, 0) = 1;
    IntMatrix one(1, 1);
    one.at(0, 0) = 2;
    IntMatrix k = kronecker_matrix(swap, one);
    CHECK(k.at(0, 1) == 2);
    CHECK(k.at(1, 0) == 2);
    CHECK(k.at(0, 0) == 0);

    // eigenvalues multiply
    std::mt19937_64 rng(5);
    for (int t = 0; t < 5; ++t) {
        IntMatrix p(3, 3), r(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j) {
                p.at(i, j) = p.at(j, i) = static_cast<int>(rng() % 5) - 2;
                r.at(i, j) = r.at(j, i) = static_cast<int>(rng() % 5) - 2;
            }
        auto ep = eigenvalues(p).expanded();
        auto er = eigenvalues(r).expanded();
        std::vector<double> prods;
        for (double x : ep)
            for (double y : er) prods.push_back(x * y);
        CHECK(approx_equal(eigenvalues(kronecker_matrix(p, r), 1e-7),
                           RealSpectrum::from_values(std::move(prods), 1e-7), 1e-7));
    }
}

TEST_CASE("exact rank") {
    SignedGraph p3 = path_graph(3, Sign::positive);
    CHECK(rank_exact(incidence_matrix(p3, default_orientation(p3))) == 2);
    CHECK(rank_exact(incidence_matrix(c3_minus(), default_orientation(c3_minus()))) == 3);
    CHECK(rank_exact(IntMatrix(4, 4)) == 0);
}

TEST_CASE("characteristic polynomial is relabelling invariant") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 10; ++t) {
        SignedGraph g = random_signed_graph(5, rng);
        IntMatrix a = adjacency_matrix(g);
        std::vector<int> perm{0, 1, 2, 3, 4};
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(char_poly_exact(a) == char_poly_exact(a.permuted(perm)));
    }
}

TEST_CASE("exact polynomial vanishes at floating eigenvalues") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 10; ++t) {
        SignedGraph g = random_signed_graph(6, rng);
        IntPolynomial p = char_poly_exact(adjacency_matrix(g));
        double scale = 0.0;
        for (const Int& c : p.ascending())
            scale = std::max(scale, std::abs(c.convert_to<double>()));
        for (double lambda : eigenvalues(adjacency_matrix(g)).expanded())
            CHECK(std::abs(p(lambda)) <= 1e-6 * std::max(1.0, scale));
    }
}

TEST_CASE("polynomial arithmetic basics") {
    IntPolynomial p(std::vector<Int>{Int(-4), Int(9), Int(-6), Int(1)});
    CHECK(p.degree() == 3);
    CHECK(p.pretty() == "x^3 - 6*x^2 + 9*x - 4");
    CHECK(p.coeff_list() == "[1, -6, 9, -4]");
    CHECK(p(Int(4)) == 0);
    CHECK(p(Int(1)) == 0);

    auto q = p.deflate(4);
    REQUIRE(q.has_value());
    CHECK(*q == IntPolynomial::from_descending({1, -2, 1}));
    CHECK_FALSE(p.deflate(7).has_value());

    // trailing zeros trim to the zero polynomial
    CHECK(IntPolynomial(std::vector<Int>{Int(0), Int(0)}).is_zero());

    IntPolynomial x2 = IntPolynomial::from_descending({1, 0, 0});
    IntPolynomial quad = IntPolynomial::from_descending({1, 0, -16});
    CHECK((x2 * quad).coeff_list() == "[1, 0, -16, 0, 0]");
}
