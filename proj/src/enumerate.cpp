#include "sg/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sg/core.hpp"

namespace sg {

namespace {

// Vertex pairs (u,v), u<v, in lexicographic order; a graph on n <= 7 vertices
// is a <= 21-bit mask over them.
struct PairTable {
    int n;
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<int>> index; // index[u][v]

    explicit PairTable(int n_) : n(n_), index(n_, std::vector<int>(n_, -1)) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                index[u][v] = static_cast<int>(pairs.size());
                index[v][u] = index[u][v];
                pairs.emplace_back(u, v);
            }
    }
    int count() const { return static_cast<int>(pairs.size()); }
};

// For every permutation of S_n, where each pair index lands.
std::vector<std::vector<int>> permutation_edge_maps(const PairTable& pt) {
    std::vector<int> perm(pt.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> maps;
    do {
        std::vector<int> m(pt.count());
        for (int e = 0; e < pt.count(); ++e) {
            auto [u, v] = pt.pairs[e];
            m[e] = pt.index[perm[u]][perm[v]];
        }
        maps.push_back(std::move(m));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return maps;
}

std::uint32_t apply_edge_map(std::uint32_t mask, const std::vector<int>& map) {
    std::uint32_t out = 0;
    for (std::uint32_t bits = mask; bits; bits &= bits - 1)
        out |= std::uint32_t(1) << map[std::countr_zero(bits)];
    return out;
}

std::uint32_t canonical_mask(std::uint32_t mask, const std::vector<std::vector<int>>& maps) {
    std::uint32_t best = mask;
    for (const auto& m : maps) best = std::min(best, apply_edge_map(mask, m));
    return best;
}

// Non-isomorphic underlying graphs with n vertices, grown one edge at a time
// with canonical-form dedup; sorted by (edge count, mask).
std::vector<std::uint32_t> underlying_graphs(const PairTable& pt,
                                             const std::vector<std::vector<int>>& maps,
                                             int threads) {
    std::vector<std::uint32_t> result{0};
    std::vector<std::uint32_t> level{0};
    for (int edges = 1; edges <= pt.count(); ++edges) {
        std::vector<std::uint32_t> candidates;
        for (std::uint32_t g : level)
            for (int e = 0; e < pt.count(); ++e)
                if (!(g >> e & 1)) candidates.push_back(g | (std::uint32_t(1) << e));
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

        std::vector<std::uint32_t> canon(candidates.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads > 0 ? threads : omp_get_max_threads())
#endif
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(candidates.size()); ++i)
            canon[i] = canonical_mask(candidates[i], maps);

        std::sort(canon.begin(), canon.end());
        canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
        result.insert(result.end(), canon.begin(), canon.end());
        level = std::move(canon);
        if (level.empty()) break;
    }
    std::sort(result.begin(), result.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return result;
}

struct UnderlyingGraph {
    const PairTable* pt;
    std::uint32_t mask;
    std::vector<int> edge_of_bit;   // positions of set bits, ascending
    std::vector<int> bit_of_edge;   // inverse into 0..m-1
    std::vector<std::vector<int>> aut_edge_maps; // restricted to present edges
    // spanning forest data over present-edge indices
    std::vector<int> bfs_order;        // vertices in visit order
    std::vector<int> parent_edge;      // local edge index into tree, -1 at roots
    std::vector<int> parent_vertex;
    std::vector<int> cotree_edges;     // local edge indices
    bool connected = false;

    UnderlyingGraph(const PairTable& table, std::uint32_t m,
                    const std::vector<std::vector<int>>& maps)
        : pt(&table), mask(m), bit_of_edge(table.count(), -1) {
        for (std::uint32_t bits = m; bits; bits &= bits - 1) {
            int b = std::countr_zero(bits);
            bit_of_edge[b] = static_cast<int>(edge_of_bit.size());
            edge_of_bit.push_back(b);
        }
        for (const auto& emap : maps) {
            std::uint32_t image = apply_edge_map(m, emap);
            if (image != m) continue;
            std::vector<int> local(edge_of_bit.size());
            for (std::size_t e = 0; e < edge_of_bit.size(); ++e)
                local[e] = bit_of_edge[emap[edge_of_bit[e]]];
            aut_edge_maps.push_back(std::move(local));
        }
        build_forest();
    }

    int edge_count() const { return static_cast<int>(edge_of_bit.size()); }

    void build_forest() {
        int n = pt->n;
        std::vector<std::vector<std::pair<int, int>>> adj(n); // (neighbor, local edge)
        for (int e = 0; e < edge_count(); ++e) {
            auto [u, v] = pt->pairs[edge_of_bit[e]];
            adj[u].emplace_back(v, e);
            adj[v].emplace_back(u, e);
        }
        parent_edge.assign(n, -1);
        parent_vertex.assign(n, -1);
        std::vector<char> seen(n, 0), edge_in_tree(edge_count(), 0);
        int components = 0;
        for (int root = 0; root < n; ++root) {
            if (seen[root]) continue;
            ++components;
            seen[root] = 1;
            bfs_order.push_back(root);
            std::size_t head = bfs_order.size() - 1;
            while (head < bfs_order.size()) {
                int u = bfs_order[head++];
                for (auto [v, e] : adj[u]) {
                    if (seen[v]) continue;
                    seen[v] = 1;
                    parent_edge[v] = e;
                    parent_vertex[v] = u;
                    edge_in_tree[e] = 1;
                    bfs_order.push_back(v);
                }
            }
        }
        connected = components <= 1;
        for (int e = 0; e < edge_count(); ++e)
            if (!edge_in_tree[e]) cotree_edges.push_back(e);
    }

    // Switch the signature (bit = negative) so every forest edge is positive;
    // unique representative of the switching class.
    std::uint32_t normalize(std::uint32_t sig) const {
        std::uint32_t pot = 0; // bit v = potential -1
        for (int v : bfs_order) {
            if (parent_edge[v] < 0) continue;
            std::uint32_t parent_pot = (pot >> parent_vertex[v]) & 1;
            std::uint32_t edge_neg = (sig >> parent_edge[v]) & 1;
            pot |= (parent_pot ^ edge_neg) << v;
        }
        std::uint32_t out = 0;
        for (int e = 0; e < edge_count(); ++e) {
            auto [u, v] = pt->pairs[edge_of_bit[e]];
            std::uint32_t b = ((sig >> e) ^ (pot >> u) ^ (pot >> v)) & 1;
            out |= b << e;
        }
        return out;
    }

    std::uint32_t canonical_signature(std::uint32_t sig) const {
        std::uint32_t best = normalize(sig);
        for (const auto& amap : aut_edge_maps) {
            std::uint32_t moved = 0;
            for (int e = 0; e < edge_count(); ++e) moved |= ((sig >> e) & 1) << amap[e];
            best = std::min(best, normalize(moved));
        }
        return best;
    }

    // All canonical signatures, one per switching-isomorphism class.
    std::vector<std::uint32_t> signature_classes() const {
        std::vector<std::uint32_t> out;
        std::unordered_set<std::uint32_t> seen;
        const int c = static_cast<int>(cotree_edges.size());
        for (std::uint64_t k = 0; k < (std::uint64_t(1) << c); ++k) {
            std::uint32_t sig = 0;
            for (int b = 0; b < c; ++b)
                if (k >> b & 1) sig |= std::uint32_t(1) << cotree_edges[b];
            std::uint32_t key = canonical_signature(sig);
            if (seen.insert(key).second) out.push_back(key);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    SignedGraph realize(std::uint32_t sig) const {
        std::vector<SignedEdge> edges;
        edges.reserve(edge_count());
        for (int e = 0; e < edge_count(); ++e) {
            auto [u, v] = pt->pairs[edge_of_bit[e]];
            edges.push_back({u, v, (sig >> e & 1) ? Sign::negative : Sign::positive});
        }
        return SignedGraph::build(pt->n, std::move(edges));
    }
};

} // namespace

std::vector<SignedGraph> enumerate_signed_graphs(int n, bool connected_only, int threads) {
    if (n < 0 || n > kEnumerationOrderLimit)
        fail(errc::size_limit_exceeded,
             "enumeration limited to order " + std::to_string(kEnumerationOrderLimit));
    if (n == 0) return {SignedGraph::build(0, {})};

    PairTable pt(n);
    auto maps = permutation_edge_maps(pt);
    auto masks = underlying_graphs(pt, maps, threads);

    std::vector<std::vector<SignedGraph>> per_mask(masks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads > 0 ? threads : omp_get_max_threads())
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(masks.size()); ++i) {
        UnderlyingGraph ug(pt, masks[i], maps);
        if (connected_only && !ug.connected) continue;
        for (std::uint32_t sig : ug.signature_classes()) per_mask[i].push_back(ug.realize(sig));
    }

    std::vector<SignedGraph> out;
    for (auto& group : per_mask)
        for (auto& g : group) out.push_back(std::move(g));
    return out;
}

std::vector<PairReport> find_cospectral_pairs(int n, SpectrumKind mode, int threads) {
    auto reps = enumerate_signed_graphs(n, false, threads);

    std::vector<std::vector<Int>> polys(reps.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads > 0 ? threads : omp_get_max_threads())
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(reps.size()); ++i) {
        IntMatrix m = mode == SpectrumKind::adjacency ? adjacency_matrix(reps[i])
                                                      : laplacian_matrix(reps[i]);
        polys[i] = char_poly_exact(m).ascending();
    }

    std::map<std::vector<Int>, std::vector<int>> groups;
    for (std::size_t i = 0; i < reps.size(); ++i) groups[polys[i]].push_back(static_cast<int>(i));

    std::vector<std::pair<int, int>> pairs;
    for (const auto& [poly, members] : groups)
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                pairs.emplace_back(members[a], members[b]);
    std::sort(pairs.begin(), pairs.end());

    std::vector<PairReport> out;
    out.reserve(pairs.size());
    for (auto [a, b] : pairs) {
        PairReport r;
        r.graph_a = reps[a];
        r.graph_b = reps[b];
        r.mode = mode;
        r.isomorphic_strict = signed_isomorphic(reps[a], reps[b]).has_value();
        r.switching_iso = switching_isomorphic(reps[a], reps[b]);
        r.shared_poly = IntPolynomial(polys[a]);
        out.push_back(std::move(r));
    }
    return out;
}

SignedGraph random_signed_graph(int n, std::mt19937_64& rng) {
    std::vector<SignedEdge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (rng() & 1)
                edges.push_back({u, v, (rng() & 1) ? Sign::positive : Sign::negative});
        }
    return SignedGraph::build(n, std::move(edges));
}

SignedGraph random_connected_signed_graph(int n, std::mt19937_64& rng) {
    for (;;) {
        SignedGraph g = random_signed_graph(n, rng);
        if (g.connected()) return g;
    }
}

} // namespace sg
