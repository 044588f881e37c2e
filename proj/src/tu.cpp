#include "sg/tu.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sg {

namespace {

// Union-find with sign potentials relative to the root. find() returns
// (root, sign of the path), so cycle signs come out of one pass.
struct SignedForest {
    std::vector<int> parent;
    std::vector<int8_t> rel; // +1/-1 potential relative to parent
    std::vector<int> size;
    std::vector<int8_t> has_cycle;

    explicit SignedForest(int n) : parent(n), rel(n, 1), size(n, 1), has_cycle(n, 0) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    std::pair<int, int> find(int v) {
        int sign = 1;
        int root = v;
        while (parent[root] != root) {
            sign *= rel[root];
            root = parent[root];
        }
        // path compression, keeping potentials consistent
        int walk = v, walk_sign = sign;
        while (parent[walk] != root) {
            int next = parent[walk];
            int next_sign = walk_sign * rel[walk];
            parent[walk] = root;
            rel[walk] = static_cast<int8_t>(walk_sign);
            walk = next;
            walk_sign = next_sign;
        }
        return {root, sign};
    }

    // Returns false when the subset stops being TU-feasible: either a second
    // independent cycle in one component, or a balanced cycle.
    bool add_edge(int u, int v, int edge_sign) {
        auto [ru, su] = find(u);
        auto [rv, sv] = find(v);
        if (ru == rv) {
            int cycle_sign = su * sv * edge_sign;
            if (cycle_sign > 0) return false; // balanced cycle
            if (has_cycle[ru]) return false;  // would be bicyclic
            has_cycle[ru] = 1;
            return true;
        }
        if (size[ru] < size[rv]) {
            std::swap(ru, rv);
            std::swap(su, sv);
        }
        if (has_cycle[ru] && has_cycle[rv]) {
            // merging two unicyclic components is fine (they stay separate
            // cycles only if disjoint) -- but a bridge between them makes one
            // component with two cycles
            return false;
        }
        parent[rv] = ru;
        rel[rv] = static_cast<int8_t>(su * sv * edge_sign);
        size[ru] += size[rv];
        has_cycle[ru] |= has_cycle[rv];
        return true;
    }
};

// Weight of one spanning TU subgraph given by an edge bitmask, or 0 when the
// subset is not TU. Fits comfortably in 64 bits for m <= kTuEdgeLimit.
unsigned long long tu_weight_of_mask(const SignedGraph& g, std::uint32_t mask) {
    SignedForest forest(g.order());
    for (std::uint32_t bits = mask; bits; bits &= bits - 1) {
        int j = std::countr_zero(bits);
        const auto& e = g.edges()[j];
        if (!forest.add_edge(e.u, e.v, to_int(e.sign))) return 0;
    }
    unsigned long long w = 1;
    for (int v = 0; v < g.order(); ++v) {
        auto [root, sign] = forest.find(v);
        if (root != v) continue;
        if (forest.has_cycle[root])
            w *= 4;
        else
            w *= static_cast<unsigned long long>(forest.size[root]);
    }
    return w;
}

void check_size(const SignedGraph& g) {
    if (g.size() > kTuEdgeLimit)
        fail(errc::size_limit_exceeded, "TU enumeration limited to " +
                                            std::to_string(kTuEdgeLimit) + " edges, got " +
                                            std::to_string(g.size()));
}

IntPolynomial sums_to_poly(const SignedGraph& g, const std::vector<Int>& sums) {
    const int n = g.order();
    std::vector<Int> coeffs(n + 1);
    coeffs[n] = 1;
    for (int i = 1; i <= n && i < static_cast<int>(sums.size()); ++i) {
        Int a = sums[i];
        if (i % 2 == 1) a = -a;
        coeffs[n - i] = a;
    }
    return IntPolynomial(std::move(coeffs));
}

} // namespace

std::optional<TUSubgraph> classify_spanning_subgraph(const SignedGraph& g,
                                                     std::span<const int> edge_subset) {
    TUSubgraph out;
    out.edge_subset.assign(edge_subset.begin(), edge_subset.end());
    std::sort(out.edge_subset.begin(), out.edge_subset.end());
    for (std::size_t i = 0; i < out.edge_subset.size(); ++i) {
        int j = out.edge_subset[i];
        if (j < 0 || j >= g.size())
            fail(errc::index_out_of_range, "edge index " + std::to_string(j) + " out of range");
        if (i > 0 && out.edge_subset[i - 1] == j)
            fail(errc::index_out_of_range, "duplicate edge index " + std::to_string(j));
    }
    SignedForest forest(g.order());
    for (int j : out.edge_subset) {
        const auto& e = g.edges()[j];
        if (!forest.add_edge(e.u, e.v, to_int(e.sign))) return std::nullopt;
    }

    std::vector<int> root_index(g.order(), -1);
    for (int v = 0; v < g.order(); ++v) {
        auto [root, sign] = forest.find(v);
        if (root_index[root] < 0) {
            root_index[root] = static_cast<int>(out.components.size());
            TUComponent comp;
            comp.kind = forest.has_cycle[root] ? TUComponentKind::unbalanced_unicyclic
                                               : TUComponentKind::tree;
            out.components.push_back(std::move(comp));
        }
        out.components[root_index[root]].vertices.push_back(v);
    }
    for (const auto& comp : out.components) {
        if (comp.kind == TUComponentKind::unbalanced_unicyclic) {
            ++out.unbalanced_count;
            out.weight *= 4;
        } else {
            out.weight *= static_cast<int>(comp.vertices.size());
        }
    }
    return out;
}

std::vector<Int> tu_weight_sums(const SignedGraph& g, int threads) {
    check_size(g);
    const int m = g.size();
    const std::uint64_t total = std::uint64_t(1) << m;
    std::vector<unsigned long long> sums(m + 1, 0);

#ifdef _OPENMP
    if (threads <= 0) threads = omp_get_max_threads();
#pragma omp parallel num_threads(threads)
    {
        std::vector<unsigned long long> local(m + 1, 0);
#pragma omp for schedule(static)
        for (std::int64_t mask = 0; mask < static_cast<std::int64_t>(total); ++mask) {
            unsigned long long w = tu_weight_of_mask(g, static_cast<std::uint32_t>(mask));
            if (w) local[std::popcount(static_cast<std::uint32_t>(mask))] += w;
        }
#pragma omp critical
        for (int i = 0; i <= m; ++i) sums[i] += local[i];
    }
#else
    (void)threads;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        unsigned long long w = tu_weight_of_mask(g, static_cast<std::uint32_t>(mask));
        if (w) sums[std::popcount(static_cast<std::uint32_t>(mask))] += w;
    }
#endif
    return std::vector<Int>(sums.begin(), sums.end());
}

IntPolynomial laplacian_charpoly_via_tu(const SignedGraph& g, int threads) {
    return sums_to_poly(g, tu_weight_sums(g, threads));
}

IntPolynomial laplacian_charpoly_via_tu_serial(const SignedGraph& g) {
    check_size(g);
    const int m = g.size();
    std::vector<Int> sums(m + 1, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
        unsigned long long w = tu_weight_of_mask(g, static_cast<std::uint32_t>(mask));
        if (w) sums[std::popcount(static_cast<std::uint32_t>(mask))] += w;
    }
    return sums_to_poly(g, sums);
}

bool comparable(const SignedGraph& g1, const SignedGraph& g2, int threads) {
    auto s1 = tu_weight_sums(g1, threads);
    auto s2 = tu_weight_sums(g2, threads);
    std::size_t len = std::max(s1.size(), s2.size());
    s1.resize(len, 0);
    s2.resize(len, 0);
    return s1 == s2;
}

} // namespace sg
