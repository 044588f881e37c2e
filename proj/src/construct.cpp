#include "sg/construct.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sg/spectra.hpp"

namespace sg {

SignedGraph partial_transpose(const SignedGraph& g, const Bipartition& bp) {
    const int k = bp.half_size;
    if (g.order() != 2 * k)
        fail(errc::odd_order, "partial transpose needs order 2k, got order " +
                                  std::to_string(g.order()) + " with half size " +
                                  std::to_string(k));
    std::vector<SignedEdge> edges;
    edges.reserve(g.size());
    for (const auto& e : g.edges()) {
        if (e.u < k && e.v >= k) {
            int i = e.u, j = e.v - k;
            if (i != j) {
                edges.push_back({j, k + i, e.sign});
                continue;
            }
        }
        edges.push_back(e);
    }
    auto by_pair = [](const SignedEdge& a, const SignedEdge& b) {
        return std::pair{a.u, a.v} < std::pair{b.u, b.v};
    };
    std::sort(edges.begin(), edges.end(), by_pair);
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v)
            fail(errc::edge_collision, "transposed edge (" + std::to_string(edges[i].u) + "," +
                                           std::to_string(edges[i].v) +
                                           ") collides with a surviving edge");
    return SignedGraph::build(g.order(), std::move(edges));
}

namespace {

// family helpers work on a mutable edge list before canonicalization
void set_sign(std::vector<SignedEdge>& edges, int u, int v, Sign s) {
    if (u > v) std::swap(u, v);
    for (auto& e : edges)
        if (e.u == u && e.v == v) {
            e.sign = s;
            return;
        }
    fail(errc::index_out_of_range,
         "edge (" + std::to_string(u) + "," + std::to_string(v) + ") not present");
}

void negate_edge(std::vector<SignedEdge>& edges, int u, int v) {
    if (u > v) std::swap(u, v);
    for (auto& e : edges)
        if (e.u == u && e.v == v) {
            e.sign = opposite(e.sign);
            return;
        }
    fail(errc::index_out_of_range,
         "edge (" + std::to_string(u) + "," + std::to_string(v) + ") not present");
}

void remove_edge(std::vector<SignedEdge>& edges, int u, int v) {
    if (u > v) std::swap(u, v);
    for (auto it = edges.begin(); it != edges.end(); ++it)
        if (it->u == u && it->v == v) {
            edges.erase(it);
            return;
        }
    fail(errc::index_out_of_range,
         "edge (" + std::to_string(u) + "," + std::to_string(v) + ") not present");
}

} // namespace

TheoremFamily theorem31_family(int n) {
    if (n < 3) fail(errc::too_small, "theorem31_family needs n >= 3");
    std::vector<SignedEdge> base;
    for (int t = 0; t + 1 < n; ++t) {
        base.push_back({t, t + 1, Sign::positive});
        base.push_back({n + t, n + t + 1, Sign::positive});
    }
    std::vector<SignedEdge> e1 = base;
    e1.push_back({0, n - 1, Sign::positive});      // (u1, un)
    e1.push_back({0, n, Sign::negative});          // (u1, v1)
    e1.push_back({0, 2 * n - 1, Sign::positive});  // (u1, vn)

    TheoremFamily fam;
    fam.gamma1 = SignedGraph::build(2 * n, e1);
    fam.gamma1_tau = partial_transpose(fam.gamma1, {n});

    // Published pair: keep (u1,v1) negative and unbalance the u-cycle at one
    // edge; the two inequivalent edge positions give the cospectral,
    // non-isomorphic gamma2/gamma3 (gamma3 is a relabelled partial transpose
    // of gamma2).
    std::vector<SignedEdge> e2 = e1;
    negate_edge(e2, n - 2, n - 1); // (u_{n-1}, u_n)
    std::vector<SignedEdge> e3 = e1;
    negate_edge(e3, 0, 1); // (u_1, u_2)
    fam.gamma2 = SignedGraph::build(2 * n, std::move(e2));
    fam.gamma3 = SignedGraph::build(2 * n, std::move(e3));
    return fam;
}

TheoremFamily theorem32_family(int n, int i, int j) {
    if (n < 4) fail(errc::too_small, "theorem32_family needs n >= 4");
    if (i < 1 || j > n || i >= j) fail(errc::index_out_of_range, "need 1 <= i < j <= n");
    bool adjacent = (j - i == 1) || (i == 1 && j == n);
    if (adjacent) fail(errc::adjacent_pair, "u_i and u_j must be non-adjacent on the cycle");

    std::vector<SignedEdge> base;
    for (int t = 0; t + 1 < n; ++t) {
        base.push_back({t, t + 1, Sign::positive});
        base.push_back({n + t, n + t + 1, Sign::positive});
    }
    base.push_back({0, n - 1, Sign::positive});
    base.push_back({n, 2 * n - 1, Sign::positive});

    std::vector<SignedEdge> e1 = base;
    e1.push_back({i - 1, j - 1, Sign::positive});      // (u_i, u_j)
    e1.push_back({i - 1, n + i - 1, Sign::negative});  // (u_i, v_i)
    e1.push_back({i - 1, n + j - 1, Sign::positive});  // (u_i, v_j)

    TheoremFamily fam;
    fam.gamma1 = SignedGraph::build(2 * n, e1);
    fam.gamma1_tau = partial_transpose(fam.gamma1, {n});

    // literal replacements; "(u_1, v_1)" stays literal even for i > 1
    auto tau_edges = fam.gamma1_tau.edges();

    std::vector<SignedEdge> e2 = e1;
    negate_edge(e2, n - 2, n - 1);       // (u_{n-1}, u_n)
    negate_edge(e2, j - 2, j - 1);       // (u_{j-1}, u_j)
    remove_edge(e2, i - 1, n + i - 1);   // drop negative (u_i, v_i)
    e2.push_back({0, n, Sign::positive}); // add positive (u_1, v_1)

    std::vector<SignedEdge> e3 = tau_edges;
    negate_edge(e3, n - 2, n - 1);
    negate_edge(e3, j - 2, j - 1);

    std::vector<SignedEdge> e4 = e1;
    negate_edge(e4, 2 * n - 2, 2 * n - 1); // (v_{n-1}, v_n)
    negate_edge(e4, j - 2, j - 1);
    remove_edge(e4, i - 1, n + i - 1);
    e4.push_back({0, n, Sign::positive});

    std::vector<SignedEdge> e5 = tau_edges;
    negate_edge(e5, 2 * n - 2, 2 * n - 1);
    negate_edge(e5, j - 2, j - 1);

    fam.gamma2 = SignedGraph::build(2 * n, std::move(e2));
    fam.gamma3 = SignedGraph::build(2 * n, std::move(e3));
    fam.gamma4 = SignedGraph::build(2 * n, std::move(e4));
    fam.gamma5 = SignedGraph::build(2 * n, std::move(e5));
    return fam;
}

namespace {

Sign incidence_sign(int theta) { return theta > 0 ? Sign::positive : Sign::negative; }

void check_orientation(const SignedGraph& g, const Orientation& o) {
    if (static_cast<int>(o.incidences.size()) != g.size())
        fail(errc::inconsistent_orientation, "orientation size does not match edge count");
    for (int j = 0; j < g.size(); ++j) {
        auto [tu, tv] = o.incidences[j];
        if (tu * tv != -to_int(g.edges()[j].sign))
            fail(errc::inconsistent_orientation, "orientation violates condition (c) at edge " +
                                                     std::to_string(j));
    }
}

} // namespace

SignedGraph subdivision(const SignedGraph& g, const Orientation& o) {
    check_orientation(g, o);
    const int n = g.order(), m = g.size();
    std::vector<SignedEdge> edges;
    edges.reserve(2 * m);
    for (int j = 0; j < m; ++j) {
        const auto& e = g.edges()[j];
        auto [tu, tv] = o.incidences[j];
        edges.push_back({e.u, n + j, incidence_sign(tu)});
        edges.push_back({e.v, n + j, incidence_sign(tv)});
    }
    return SignedGraph::build(n + m, std::move(edges));
}

SignedGraph s_p(const SignedGraph& g, int p) {
    if (p < 1) fail(errc::zero_p, "s_p needs p >= 1");
    if (!g.connected()) fail(errc::disconnected, "s_p needs a connected graph");
    const int n = g.order(), m = g.size();
    Orientation o = default_orientation(g);
    std::vector<SignedEdge> edges;
    edges.reserve(std::size_t(2) * p * m);
    for (int t = 0; t < p; ++t)
        for (int j = 0; j < m; ++j) {
            const auto& e = g.edges()[j];
            auto [tu, tv] = o.incidences[j];
            int mid = n + t * m + j;
            edges.push_back({e.u, mid, incidence_sign(tu)});
            edges.push_back({e.v, mid, incidence_sign(tv)});
        }
    return SignedGraph::build(n + p * m, std::move(edges));
}

SignedGraph s_p_k(const SignedGraph& g, int p, int k) {
    if (p < 1) fail(errc::zero_p, "s_p_k needs p >= 1");
    if (k != p && k != p - 1) fail(errc::bad_k, "s_p_k needs k = p or k = p-1");
    if (!g.connected()) fail(errc::disconnected, "s_p_k needs a connected graph");
    const int n = g.order(), m = g.size();
    Orientation o = default_orientation(g);
    // blocks alternate: V_a at a*(n+m), E_b at b*(n+m)+n; for k = p-1 the
    // last vertex block has no edge block after it
    auto vertex_block = [&](int a, int v) { return a * (n + m) + v; };
    auto edge_block = [&](int b, int j) { return b * (n + m) + n + j; };
    std::vector<SignedEdge> edges;
    edges.reserve(std::size_t(2) * (p + 1) * (k + 1) * m);
    for (int a = 0; a <= p; ++a)
        for (int b = 0; b <= k; ++b)
            for (int j = 0; j < m; ++j) {
                const auto& e = g.edges()[j];
                auto [tu, tv] = o.incidences[j];
                edges.push_back({vertex_block(a, e.u), edge_block(b, j), incidence_sign(tu)});
                edges.push_back({vertex_block(a, e.v), edge_block(b, j), incidence_sign(tv)});
            }
    return SignedGraph::build((p + 1) * n + (k + 1) * m, std::move(edges));
}

namespace {

RealSpectrum predicted_spectrum(const RealSpectrum& lap, int n, int zero_count, double factor,
                                bool balanced) {
    if (lap.total_multiplicity() != n)
        fail(errc::index_out_of_range, "laplacian spectrum must carry n eigenvalues");
    const double tol = lap.merge_tolerance();
    std::vector<double> mu = lap.expanded(); // descending
    for (double v : mu)
        if (v < -tol)
            fail(errc::negative_laplacian_eigenvalue,
                 "laplacian eigenvalue " + std::to_string(v) + " is negative");
    if (balanced) {
        if (mu.empty() || std::abs(mu.back()) > tol)
            fail(errc::balanced_without_zero,
                 "balanced graph must have a zero laplacian eigenvalue");
        mu.pop_back();
    }
    if (zero_count < 0)
        fail(errc::index_out_of_range, "inconsistent order/size for predicted spectrum");
    std::vector<double> values(std::size_t(zero_count), 0.0);
    for (double v : mu) {
        double root = std::sqrt(factor * std::max(v, 0.0));
        values.push_back(root);
        values.push_back(-root);
    }
    return RealSpectrum::from_values(std::move(values), tol);
}

} // namespace

RealSpectrum predicted_sp_spectrum(const RealSpectrum& lap, int n, int m, int p, bool balanced) {
    if (p < 1) fail(errc::zero_p, "predicted_sp_spectrum needs p >= 1");
    int zeros = balanced ? p * m - n + 2 : p * m - n;
    return predicted_spectrum(lap, n, zeros, double(p), balanced);
}

RealSpectrum predicted_spk_spectrum(const RealSpectrum& lap, int n, int m, int p, int k,
                                    bool balanced) {
    if (p < 1) fail(errc::zero_p, "predicted_spk_spectrum needs p >= 1");
    if (k != p && k != p - 1) fail(errc::bad_k, "predicted_spk_spectrum needs k = p or k = p-1");
    int zeros = (p - 1) * n + (k + 1) * m + (balanced ? 2 : 0);
    return predicted_spectrum(lap, n, zeros, double(p + 1) * (k + 1), balanced);
}

SignedGraph cartesian_product(const SignedGraph& g1, const SignedGraph& g2) {
    const int n2 = g2.order();
    std::vector<SignedEdge> edges;
    edges.reserve(std::size_t(g1.size()) * n2 + std::size_t(g2.size()) * g1.order());
    for (const auto& e : g1.edges())
        for (int j = 0; j < n2; ++j) edges.push_back({e.u * n2 + j, e.v * n2 + j, e.sign});
    for (const auto& e : g2.edges())
        for (int i = 0; i < g1.order(); ++i) edges.push_back({i * n2 + e.u, i * n2 + e.v, e.sign});
    return SignedGraph::build(g1.order() * n2, std::move(edges));
}

SignedGraph kronecker_product(const SignedGraph& g1, const SignedGraph& g2) {
    const int n2 = g2.order();
    std::vector<SignedEdge> edges;
    edges.reserve(std::size_t(2) * g1.size() * g2.size());
    for (const auto& e1 : g1.edges())
        for (const auto& e2 : g2.edges()) {
            Sign s = e1.sign * e2.sign;
            edges.push_back({e1.u * n2 + e2.u, e1.v * n2 + e2.v, s});
            edges.push_back({e1.u * n2 + e2.v, e1.v * n2 + e2.u, s});
        }
    return SignedGraph::build(g1.order() * n2, std::move(edges));
}

EquienergeticReport equienergetic_subdivision_check(const SignedGraph& g, double tol) {
    if (g.size() == 0 || !g.connected() || g.size() != g.order() || is_balanced(g))
        fail(errc::not_unbalanced_unicyclic,
             "equienergetic check needs a connected unbalanced unicyclic graph");
    SignedGraph k2 = SignedGraph::build(2, {{0, 1, Sign::positive}});
    SignedGraph s = subdivision(g, default_orientation(g));
    SignedGraph cart = cartesian_product(s, k2);
    SignedGraph kron = kronecker_product(s, k2);

    EquienergeticReport rep;
    rep.noncospectral = !cospectral(cart, kron);
    rep.equienergetic = std::abs(energy(cart) - energy(kron)) <= tol;
    rep.condition_mu_n_ge_1 = eigenvalues(laplacian_matrix(g), tol).min_value() >= 1.0 - tol;
    return rep;
}

} // namespace sg
