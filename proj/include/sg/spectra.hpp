#ifndef SG_SPECTRA_HPP
#define SG_SPECTRA_HPP

#include <memory>

#include "sg/linalg.hpp"

namespace sg {

struct SpectralSummary {
    IntPolynomial adjacency_poly;
    IntPolynomial laplacian_poly;
    RealSpectrum adjacency_spec;
    RealSpectrum laplacian_spec;
    double energy = 0.0;
};

// Shared, lazily filled per-graph-value cache. Concurrent callers may race to
// fill the same slot; the fill is idempotent so the cache behaves as if absent.
std::shared_ptr<const SpectralSummary> spectral_summary(const SignedGraph& g);

// Exact equality of adjacency characteristic polynomials.
bool cospectral(const SignedGraph& g1, const SignedGraph& g2);

// Exact equality of Laplacian characteristic polynomials.
bool laplacian_cospectral(const SignedGraph& g1, const SignedGraph& g2);

// Sum of absolute adjacency eigenvalues.
double energy(const SignedGraph& g);

// Exact decision via integer-root extraction from the adjacency
// characteristic polynomial (never by rounding floating eigenvalues).
bool is_integral(const SignedGraph& g);

// Coefficient test of Lemma-2.6 form: odd-codegree coefficients vanish and
// (-1)^k * coeff(x^(n-2k)) >= 0 for every k.
bool spectrum_symmetric(const SignedGraph& g);

} // namespace sg

#endif
