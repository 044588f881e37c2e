#ifndef SG_ERROR_HPP
#define SG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sg {

enum class errc {
    duplicate_edge,
    loop_edge,
    vertex_out_of_range,
    index_out_of_range,
    size_limit_exceeded,
    non_square,
    non_symmetric,
    inconsistent_orientation,
    odd_order,
    edge_collision,
    too_small,
    adjacent_pair,
    disconnected,
    zero_p,
    bad_k,
    negative_laplacian_eigenvalue,
    balanced_without_zero,
    not_unbalanced_unicyclic,
    invalid_sign,
    parse_error,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace sg

#endif
