#ifndef SG_VERIFY_HPP
#define SG_VERIFY_HPP

#include <string>
#include <vector>

#include "sg/enumerate.hpp"

namespace sg {

struct VerifyItem {
    std::string name;
    std::vector<std::string> covers; // claim tags this fixture exercises
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyItem> items;

    bool all_passed() const;
    std::string render() const; // one PASS/FAIL line per item
};

// Runs the published-value fixture suite: exact polynomial fixtures, the
// subgraph-expansion cross-check, spectrum/energy laws for the subdivision
// operations, integrality and equienergetic instances. Deterministic for a
// fixed config.
VerifyReport verify_paper(const RunConfig& config = {});

// Reference graphs used across fixtures and tests.
SignedGraph example31_graph();                 // triangle + path joined by two cross edges
SignedGraph c3_minus();                        // all-negative triangle
SignedGraph complete_graph(int n, Sign sign);  // homogeneous K_n
SignedGraph path_graph(int n, Sign sign);
SignedGraph cycle_graph(int n, int negative_edges);

} // namespace sg

#endif
