#ifndef SG_TU_HPP
#define SG_TU_HPP

#include <optional>
#include <span>

#include "sg/linalg.hpp"

namespace sg {

// Edge-subset enumeration is capped here; 2^m subsets are scanned.
inline constexpr int kTuEdgeLimit = 20;

enum class TUComponentKind { tree, unbalanced_unicyclic };

struct TUComponent {
    std::vector<int> vertices;
    TUComponentKind kind = TUComponentKind::tree;
};

// A spanning edge subset whose components are all trees or unbalanced
// unicyclic; isolated vertices count as order-1 trees. Weight is
// 4^q * product of tree orders, q = number of unicyclic components.
struct TUSubgraph {
    std::vector<int> edge_subset;
    std::vector<TUComponent> components;
    int unbalanced_count = 0;
    Int weight = 1;
};

std::optional<TUSubgraph> classify_spanning_subgraph(const SignedGraph& g,
                                                     std::span<const int> edge_subset);

// Laplacian characteristic polynomial from the TU-subgraph expansion:
// a_i = (-1)^i * sum of weights over TU subgraphs with i edges. This is the
// combinatorial counterpart of char_poly_exact(laplacian_matrix(g)).
IntPolynomial laplacian_charpoly_via_tu(const SignedGraph& g, int threads = 0);

// Single-loop reference implementation kept for testing the parallel kernel.
IntPolynomial laplacian_charpoly_via_tu_serial(const SignedGraph& g);

// True iff the per-edge-count TU weight sums of the two graphs agree.
bool comparable(const SignedGraph& g1, const SignedGraph& g2, int threads = 0);

// Weight sums indexed by edge count (0..m); building block of the above.
std::vector<Int> tu_weight_sums(const SignedGraph& g, int threads = 0);

} // namespace sg

#endif
