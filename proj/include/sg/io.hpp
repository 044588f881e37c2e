#ifndef SG_IO_HPP
#define SG_IO_HPP

#include <string>

#include "sg/linalg.hpp"

namespace sg {

// Graph interchange format: {"n": <int>, "edges": [[u, v, s], ...]} with
// s in {1, -1}; emitted with u < v and edges sorted.
std::string to_json(const SignedGraph& g);
SignedGraph from_json(const std::string& text);

// DOT rendering: positive edges bold, negative edges dashed.
std::string to_dot(const SignedGraph& g, const std::string& name = "G");

// Floating spectrum, 12 significant digits, "value (xM)" per merged group.
std::string format_spectrum(const RealSpectrum& s);

} // namespace sg

#endif
