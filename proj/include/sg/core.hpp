#ifndef SG_CORE_HPP
#define SG_CORE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "sg/error.hpp"

namespace sg {

enum class Sign : int { negative = -1, positive = +1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr Sign opposite(Sign s) { return s == Sign::positive ? Sign::negative : Sign::positive; }
constexpr Sign operator*(Sign a, Sign b) { return a == b ? Sign::positive : Sign::negative; }

inline Sign sign_from_int(int v) {
    if (v == 1) return Sign::positive;
    if (v == -1) return Sign::negative;
    fail(errc::invalid_sign, "edge sign must be +1 or -1");
}

struct SignedEdge {
    int u = 0;
    int v = 0;
    Sign sign = Sign::positive;

    friend auto operator<=>(const SignedEdge& a, const SignedEdge& b) = default;
};

// Simple signed graph on vertices 0..n-1. Canonical storage: u < v on every
// edge, edge list sorted lexicographically, no duplicates, no loops.
class SignedGraph {
public:
    SignedGraph() = default;

    // Canonicalizes endpoint order and edge order; rejects loops, duplicate
    // pairs and out-of-range endpoints.
    static SignedGraph build(int n, std::vector<SignedEdge> edges);

    int order() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<SignedEdge>& edges() const noexcept { return edges_; }

    std::optional<Sign> edge_sign(int u, int v) const;
    int degree(int v) const;
    std::vector<int> degrees() const;
    int negative_edge_count() const;
    bool connected() const;

    friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

private:
    int n_ = 0;
    std::vector<SignedEdge> edges_;
};

struct SwitchingSet {
    std::vector<int> members;
};

struct VertexPermutation {
    std::vector<int> image;
};

SignedGraph build_graph(int n, std::vector<SignedEdge> edges);

// Negates the sign of every edge with exactly one endpoint in X.
SignedGraph switched(const SignedGraph& g, const SwitchingSet& x);

SignedGraph negated(const SignedGraph& g);

// True iff some vertex potential pi: V -> {+-1} satisfies
// sign(u,v) = pi(u)*pi(v) on every edge; BFS propagation per component.
bool is_balanced(const SignedGraph& g);

inline constexpr int kIsomorphismOrderLimit = 10;

// Sign-preserving isomorphism witness, or nullopt. Plain backtracking with
// degree and signed-degree pruning; refuses orders above max_order.
std::optional<VertexPermutation> signed_isomorphic(const SignedGraph& g1, const SignedGraph& g2,
                                                   int max_order = kIsomorphismOrderLimit);

// True iff some underlying isomorphism maps g1 onto g2 up to switching
// (the per-edge sign discrepancy must form a balanced labelling).
bool switching_isomorphic(const SignedGraph& g1, const SignedGraph& g2,
                          int max_order = kIsomorphismOrderLimit);

} // namespace sg

#endif
