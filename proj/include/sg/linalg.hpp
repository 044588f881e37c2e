#ifndef SG_LINALG_HPP
#define SG_LINALG_HPP

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sg/core.hpp"

namespace sg {

using Int = boost::multiprecision::cpp_int;

inline constexpr double kDefaultTolerance = 1e-9;

// Dense matrix over arbitrary-precision integers. Everything that decides a
// cospectrality question goes through this type; doubles are display-only.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}
    static IntMatrix identity(int n);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }
    bool symmetric() const;

    Int& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    Int trace() const;

    // conjugation by a vertex permutation: result(p[i],p[j]) = (*this)(i,j)
    IntMatrix permuted(const std::vector<int>& p) const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Integer polynomial stored by ascending power; no trailing zero coefficient
// except for the zero polynomial (empty coefficient list).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> ascending);
    static IntPolynomial from_descending(std::vector<Int> descending);

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const Int& coeff(int power) const;
    const std::vector<Int>& ascending() const noexcept { return c_; }
    std::vector<Int> descending() const;

    Int operator()(const Int& x) const;
    double operator()(double x) const;

    // exact division by (x - root); nullopt if root is not a root
    std::optional<IntPolynomial> deflate(const Int& root) const;

    std::string pretty() const;       // "x^3 - 6*x^2 + 9*x - 4"
    std::string coeff_list() const;   // "[1, -6, 9, -4]" (descending)

    IntPolynomial operator*(const IntPolynomial& rhs) const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    std::vector<Int> c_;
    static const Int kZero;
};

struct SpectrumEntry {
    double value = 0.0;
    int multiplicity = 0;

    friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

// Descending list of (eigenvalue, multiplicity) groups; raw values closer
// than the merge tolerance are collapsed into one entry.
class RealSpectrum {
public:
    RealSpectrum() = default;
    static RealSpectrum from_values(std::vector<double> values, double tol = kDefaultTolerance);

    const std::vector<SpectrumEntry>& entries() const noexcept { return entries_; }
    int total_multiplicity() const;
    std::vector<double> expanded() const; // descending, one value per multiplicity
    double merge_tolerance() const noexcept { return tol_; }
    double min_value() const; // smallest eigenvalue

    friend bool operator==(const RealSpectrum&, const RealSpectrum&) = default;

private:
    std::vector<SpectrumEntry> entries_;
    double tol_ = kDefaultTolerance;
};

// Multiset equality of the expanded eigenvalue lists within an absolute
// tolerance (entrywise on the sorted lists).
bool approx_equal(const RealSpectrum& a, const RealSpectrum& b, double tol = kDefaultTolerance);

// Bidirected incidence signs per edge: first = at the lower endpoint u,
// second = at the higher endpoint v. Invariant: first*second == -sign(e).
struct Orientation {
    std::vector<std::pair<int, int>> incidences;
};

IntMatrix adjacency_matrix(const SignedGraph& g);
IntMatrix laplacian_matrix(const SignedGraph& g);

// Deterministic convention: positive edge (u<v) gets (+1,-1), negative (+1,+1).
Orientation default_orientation(const SignedGraph& g);

// n x m incidence matrix B with B*B^T = laplacian_matrix(g).
IntMatrix incidence_matrix(const SignedGraph& g, const Orientation& o);

// Exact monic characteristic polynomial det(xI - M) by Faddeev-LeVerrier
// over integers (every division is exact).
IntPolynomial char_poly_exact(const IntMatrix& m);

// Floating symmetric eigensolve, merged at tol.
RealSpectrum eigenvalues(const IntMatrix& m, double tol = kDefaultTolerance);

IntMatrix kronecker_matrix(const IntMatrix& p, const IntMatrix& q);

// Exact rank by fraction-free (Bareiss) elimination.
int rank_exact(const IntMatrix& m);

} // namespace sg

#endif
