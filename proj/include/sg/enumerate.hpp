#ifndef SG_ENUMERATE_HPP
#define SG_ENUMERATE_HPP

#include <cstdint>
#include <random>

#include "sg/linalg.hpp"

namespace sg {

struct RunConfig {
    double tolerance = kDefaultTolerance;
    int max_order = 7;
    int thread_count = 0; // 0 = all available
    std::uint64_t seed = 1;
};

inline constexpr int kEnumerationOrderLimit = 7;

// One representative per switching-isomorphism class: underlying graphs up to
// isomorphism, then signatures up to switching and underlying automorphism.
// Output order is deterministic (by size, underlying canonical form, then
// canonical signature).
std::vector<SignedGraph> enumerate_signed_graphs(int n, bool connected_only, int threads = 0);

enum class SpectrumKind { adjacency, laplacian };

struct PairReport {
    SignedGraph graph_a;
    SignedGraph graph_b;
    SpectrumKind mode = SpectrumKind::adjacency;
    bool isomorphic_strict = false;
    bool switching_iso = false;
    IntPolynomial shared_poly;
};

// All unordered pairs of enumerated representatives with equal exact
// characteristic polynomial of the chosen matrix.
std::vector<PairReport> find_cospectral_pairs(int n, SpectrumKind mode, int threads = 0);

// Seeded generators for property sweeps; bit-level use of mt19937_64 keeps
// runs reproducible across platforms.
SignedGraph random_signed_graph(int n, std::mt19937_64& rng);
SignedGraph random_connected_signed_graph(int n, std::mt19937_64& rng);

} // namespace sg

#endif
