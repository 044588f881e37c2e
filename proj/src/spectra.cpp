#include "sg/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace sg {

namespace {

using GraphKey = std::pair<int, std::vector<SignedEdge>>;

GraphKey key_of(const SignedGraph& g) { return {g.order(), g.edges()}; }

std::shared_ptr<const SpectralSummary> compute_summary(const SignedGraph& g) {
    auto s = std::make_shared<SpectralSummary>();
    s->adjacency_poly = char_poly_exact(adjacency_matrix(g));
    s->laplacian_poly = char_poly_exact(laplacian_matrix(g));
    s->adjacency_spec = eigenvalues(adjacency_matrix(g));
    s->laplacian_spec = eigenvalues(laplacian_matrix(g));
    double e = 0.0;
    for (const auto& entry : s->adjacency_spec.entries())
        e += entry.multiplicity * std::abs(entry.value);
    s->energy = e;
    return s;
}

std::mutex cache_mutex;
std::map<GraphKey, std::shared_ptr<const SpectralSummary>> cache;

} // namespace

std::shared_ptr<const SpectralSummary> spectral_summary(const SignedGraph& g) {
    GraphKey key = key_of(g);
    {
        std::lock_guard lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto fresh = compute_summary(g);
    std::lock_guard lock(cache_mutex);
    auto [it, inserted] = cache.emplace(std::move(key), std::move(fresh));
    return it->second;
}

bool cospectral(const SignedGraph& g1, const SignedGraph& g2) {
    return spectral_summary(g1)->adjacency_poly == spectral_summary(g2)->adjacency_poly;
}

bool laplacian_cospectral(const SignedGraph& g1, const SignedGraph& g2) {
    return spectral_summary(g1)->laplacian_poly == spectral_summary(g2)->laplacian_poly;
}

double energy(const SignedGraph& g) { return spectral_summary(g)->energy; }

bool is_integral(const SignedGraph& g) {
    IntPolynomial p = spectral_summary(g)->adjacency_poly;
    int extracted = 0;
    // zero roots first
    while (!p.is_zero() && p.degree() > 0 && p.coeff(0) == 0) {
        p = *p.deflate(0);
        ++extracted;
    }
    // nonzero integer roots: adjacency eigenvalues are bounded by the maximum
    // degree, so only candidates in [-maxdeg, maxdeg] can occur
    int bound = 0;
    for (int d : g.degrees()) bound = std::max(bound, d);
    for (int r = -bound; r <= bound; ++r) {
        if (r == 0) continue;
        while (auto q = p.deflate(r)) {
            p = std::move(*q);
            ++extracted;
        }
    }
    return extracted == g.order();
}

bool spectrum_symmetric(const SignedGraph& g) {
    const IntPolynomial& p = spectral_summary(g)->adjacency_poly;
    const int n = g.order();
    for (int k = 1; 2 * k - 1 <= n; ++k)
        if (p.coeff(n - (2 * k - 1)) != 0) return false;
    for (int k = 1; 2 * k <= n; ++k) {
        Int b = p.coeff(n - 2 * k);
        if (k % 2 == 1) b = -b;
        if (b < 0) return false;
    }
    return true;
}

} // namespace sg
