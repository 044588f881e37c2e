#include "sg/io.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace sg {

std::string to_json(const SignedGraph& g) {
    nlohmann::json j;
    j["n"] = g.order();
    j["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges()) j["edges"].push_back({e.u, e.v, to_int(e.sign)});
    return j.dump();
}

SignedGraph from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(errc::parse_error, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
        !j["n"].is_number_integer() || !j["edges"].is_array())
        fail(errc::parse_error, R"(expected {"n": <int>, "edges": [[u,v,s], ...]})");
    int n = j["n"].get<int>();
    std::vector<SignedEdge> edges;
    for (const auto& item : j["edges"]) {
        if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
            !item[1].is_number_integer() || !item[2].is_number_integer())
            fail(errc::parse_error, "each edge must be [u, v, s] with integer entries");
        edges.push_back({item[0].get<int>(), item[1].get<int>(),
                         sign_from_int(item[2].get<int>())});
    }
    return SignedGraph::build(n, std::move(edges));
}

std::string to_dot(const SignedGraph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
    for (const auto& e : g.edges()) {
        os << "  " << e.u << " -- " << e.v << " [style="
           << (e.sign == Sign::positive ? "bold" : "dashed") << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string format_spectrum(const RealSpectrum& s) {
    std::ostringstream os;
    os.precision(12);
    os << "{";
    bool first = true;
    for (const auto& e : s.entries()) {
        if (!first) os << ", ";
        first = false;
        os << e.value;
        if (e.multiplicity > 1) os << " (x" << e.multiplicity << ")";
    }
    os << "}";
    return os.str();
}

} // namespace sg
