#ifndef SG_CONSTRUCT_HPP
#define SG_CONSTRUCT_HPP

#include <optional>

#include "sg/linalg.hpp"

namespace sg {

// Equal split of a 2k-vertex graph: part one is {0..k-1} (the paper-style
// u_1..u_k), part two is {k..2k-1} (v_1..v_k).
struct Bipartition {
    int half_size = 0;
};

// Replace every cross edge (u_i, v_j), i != j, by (u_j, v_i) with the same
// sign; diagonal cross edges and intra-part edges are untouched.
SignedGraph partial_transpose(const SignedGraph& g, const Bipartition& bp);

struct TheoremFamily {
    SignedGraph gamma1;
    SignedGraph gamma1_tau;
    SignedGraph gamma2;
    SignedGraph gamma3;
    std::optional<SignedGraph> gamma4;
    std::optional<SignedGraph> gamma5;
};

// Two all-positive n-paths joined by (u1,un), negative (u1,v1) and (u1,vn);
// gamma2/gamma3 negate one cycle edge each ((u_{n-1},u_n) resp. (u_1,u_2)),
// which reproduces the published cospectral pair.
TheoremFamily theorem31_family(int n);

// Two all-positive n-cycles joined by chord (u_i,u_j), negative (u_i,v_i) and
// cross (u_i,v_j); gamma2..gamma5 per the stated edge replacements (the
// (u_1,v_1) reference is literal, so members beyond gamma1/gamma1_tau are
// only meaningful for i = 1).
TheoremFamily theorem32_family(int n, int i, int j);

// Order n+m; vertex n+j subdivides edge j, with signs taken from the
// orientation's incidence entries.
SignedGraph subdivision(const SignedGraph& g, const Orientation& o);

// Operation replacing every edge by p parallel subdivision vertices; uses the
// default orientation. p = 1 coincides with subdivision().
SignedGraph s_p(const SignedGraph& g, int p);

// Clone original-side vertices p extra times and edge-side vertices k extra
// times (k = p or p-1); block layout alternates vertex and edge blocks.
SignedGraph s_p_k(const SignedGraph& g, int p, int k);

RealSpectrum predicted_sp_spectrum(const RealSpectrum& lap, int n, int m, int p, bool balanced);
RealSpectrum predicted_spk_spectrum(const RealSpectrum& lap, int n, int m, int p, int k,
                                    bool balanced);

SignedGraph cartesian_product(const SignedGraph& g1, const SignedGraph& g2);
SignedGraph kronecker_product(const SignedGraph& g1, const SignedGraph& g2);

struct EquienergeticReport {
    bool noncospectral = false;
    bool equienergetic = false;
    bool condition_mu_n_ge_1 = false;
};

// For an unbalanced unicyclic g: compares S(g) x K2 against S(g) (x) K2
// (exact polynomials for cospectrality, floating energies) and reports
// whether the smallest Laplacian eigenvalue is >= 1.
EquienergeticReport equienergetic_subdivision_check(const SignedGraph& g,
                                                    double tol = kDefaultTolerance);

} // namespace sg

#endif
