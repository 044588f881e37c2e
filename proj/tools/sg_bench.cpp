// Compares the serial reference implementations against the OpenMP kernels:
// TU-subgraph polynomial expansion and the switching-class search. Exits
// nonzero if any kernel disagrees with its reference.

#include <chrono>
#include <iostream>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sg/enumerate.hpp"
#include "sg/tu.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& fn) {
    auto t0 = Clock::now();
    fn();
    auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main() {
#ifdef _OPENMP
    int max_threads = omp_get_max_threads();
#else
    int max_threads = 1;
#endif
    std::cout << "hardware threads available: " << max_threads << "\n\n";
    bool ok = true;

    {
        // dense-ish random graph near the enumeration cap
        std::mt19937_64 rng(7);
        sg::SignedGraph g;
        do {
            g = sg::random_signed_graph(7, rng);
        } while (g.size() < 16 || g.size() > 18);
        std::cout << "TU expansion on n=" << g.order() << ", m=" << g.size() << " ("
                  << (std::uint64_t(1) << g.size()) << " subsets)\n";

        sg::IntPolynomial serial, parallel;
        double t_serial = time_ms([&] { serial = sg::laplacian_charpoly_via_tu_serial(g); });
        std::cout << "  serial reference: " << t_serial << " ms\n";
        for (int threads : {1, 2, max_threads}) {
            double t = time_ms([&] { parallel = sg::laplacian_charpoly_via_tu(g, threads); });
            bool match = parallel == serial;
            ok = ok && match;
            std::cout << "  omp threads=" << threads << ": " << t << " ms, speedup "
                      << (t > 0 ? t_serial / t : 0.0) << (match ? "" : "  MISMATCH") << "\n";
        }
    }

    {
        std::cout << "\nswitching-class enumeration at n=6\n";
        std::vector<sg::SignedGraph> serial, parallel;
        double t_serial = time_ms([&] { serial = sg::enumerate_signed_graphs(6, false, 1); });
        std::cout << "  threads=1: " << t_serial << " ms (" << serial.size() << " classes)\n";
        double t_par = time_ms([&] { parallel = sg::enumerate_signed_graphs(6, false, max_threads); });
        bool match = serial == parallel;
        ok = ok && match;
        std::cout << "  threads=" << max_threads << ": " << t_par << " ms, speedup "
                  << (t_par > 0 ? t_serial / t_par : 0.0) << (match ? "" : "  MISMATCH") << "\n";
    }

    {
        std::cout << "\ncospectral pair search at n=5 (laplacian)\n";
        std::vector<sg::PairReport> serial, parallel;
        double t_serial = time_ms(
            [&] { serial = sg::find_cospectral_pairs(5, sg::SpectrumKind::laplacian, 1); });
        std::cout << "  threads=1: " << t_serial << " ms (" << serial.size() << " pairs)\n";
        double t_par = time_ms([&] {
            parallel = sg::find_cospectral_pairs(5, sg::SpectrumKind::laplacian, max_threads);
        });
        bool match = serial.size() == parallel.size();
        for (std::size_t i = 0; match && i < serial.size(); ++i)
            match = serial[i].graph_a == parallel[i].graph_a &&
                    serial[i].graph_b == parallel[i].graph_b &&
                    serial[i].shared_poly == parallel[i].shared_poly;
        ok = ok && match;
        std::cout << "  threads=" << max_threads << ": " << t_par << " ms, speedup "
                  << (t_par > 0 ? t_serial / t_par : 0.0) << (match ? "" : "  MISMATCH") << "\n";
    }

    std::cout << "\n" << (ok ? "all kernels match their references" : "KERNEL MISMATCH") << "\n";
    return ok ? 0 : 1;
}
