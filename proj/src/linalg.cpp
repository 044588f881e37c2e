#include "sg/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>

#include <Eigen/Dense>

namespace sg {

const Int IntPolynomial::kZero = 0;

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::symmetric() const {
    if (!square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) fail(errc::non_square, "matrix product dimension mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += aik * rhs.at(k, j);
        }
    return out;
}

Int IntMatrix::trace() const {
    if (!square()) fail(errc::non_square, "trace of non-square matrix");
    Int t = 0;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

IntMatrix IntMatrix::permuted(const std::vector<int>& p) const {
    IntMatrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(p[i], p[j]) = at(i, j);
    return out;
}

IntPolynomial::IntPolynomial(std::vector<Int> ascending) : c_(std::move(ascending)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::from_descending(std::vector<Int> descending) {
    std::reverse(descending.begin(), descending.end());
    return IntPolynomial(std::move(descending));
}

const Int& IntPolynomial::coeff(int power) const {
    if (power < 0 || power >= static_cast<int>(c_.size())) return kZero;
    return c_[power];
}

std::vector<Int> IntPolynomial::descending() const {
    std::vector<Int> d(c_.rbegin(), c_.rend());
    return d;
}

Int IntPolynomial::operator()(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double IntPolynomial::operator()(double x) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->convert_to<double>();
    return acc;
}

std::optional<IntPolynomial> IntPolynomial::deflate(const Int& root) const {
    if (is_zero()) return std::nullopt;
    std::vector<Int> q(c_.size() - 1);
    Int carry = c_.back();
    for (int k = static_cast<int>(c_.size()) - 2; k >= 0; --k) {
        q[k] = carry;
        carry = c_[k] + carry * root;
    }
    if (carry != 0) return std::nullopt;
    return IntPolynomial(std::move(q));
}

std::string IntPolynomial::pretty() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int p = degree(); p >= 0; --p) {
        const Int& c = coeff(p);
        if (c == 0) continue;
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (p == 0 || mag != 1) os << mag.str();
        if (p > 0) {
            if (mag != 1) os << "*";
            os << "x";
            if (p > 1) os << "^" << p;
        }
    }
    return os.str();
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return IntPolynomial();
    std::vector<Int> out(c_.size() + rhs.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::coeff_list() const {
    std::ostringstream os;
    os << "[";
    auto d = descending();
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) os << ", ";
        os << d[i].str();
    }
    os << "]";
    return os.str();
}

RealSpectrum RealSpectrum::from_values(std::vector<double> values, double tol) {
    std::sort(values.begin(), values.end(), std::greater<>());
    RealSpectrum s;
    s.tol_ = tol;
    std::size_t i = 0;
    while (i < values.size()) {
        // chain merge: extend the group while consecutive gaps stay within tol
        std::size_t j = i + 1;
        double sum = values[i];
        while (j < values.size() && values[j - 1] - values[j] <= tol) {
            sum += values[j];
            ++j;
        }
        s.entries_.push_back({sum / double(j - i), int(j - i)});
        i = j;
    }
    return s;
}

int RealSpectrum::total_multiplicity() const {
    int t = 0;
    for (const auto& e : entries_) t += e.multiplicity;
    return t;
}

std::vector<double> RealSpectrum::expanded() const {
    std::vector<double> out;
    out.reserve(total_multiplicity());
    for (const auto& e : entries_)
        for (int k = 0; k < e.multiplicity; ++k) out.push_back(e.value);
    return out;
}

double RealSpectrum::min_value() const {
    if (entries_.empty()) fail(errc::index_out_of_range, "empty spectrum has no minimum");
    return entries_.back().value;
}

bool approx_equal(const RealSpectrum& a, const RealSpectrum& b, double tol) {
    auto ea = a.expanded(), eb = b.expanded();
    if (ea.size() != eb.size()) return false;
    for (std::size_t i = 0; i < ea.size(); ++i)
        if (std::abs(ea[i] - eb[i]) > tol) return false;
    return true;
}

IntMatrix adjacency_matrix(const SignedGraph& g) {
    IntMatrix a(g.order(), g.order());
    for (const auto& e : g.edges()) {
        a.at(e.u, e.v) = to_int(e.sign);
        a.at(e.v, e.u) = to_int(e.sign);
    }
    return a;
}

IntMatrix laplacian_matrix(const SignedGraph& g) {
    IntMatrix l(g.order(), g.order());
    for (const auto& e : g.edges()) {
        l.at(e.u, e.v) = -to_int(e.sign);
        l.at(e.v, e.u) = -to_int(e.sign);
        l.at(e.u, e.u) += 1;
        l.at(e.v, e.v) += 1;
    }
    return l;
}

Orientation default_orientation(const SignedGraph& g) {
    Orientation o;
    o.incidences.reserve(g.size());
    for (const auto& e : g.edges())
        o.incidences.emplace_back(1, e.sign == Sign::positive ? -1 : 1);
    return o;
}

IntMatrix incidence_matrix(const SignedGraph& g, const Orientation& o) {
    if (static_cast<int>(o.incidences.size()) != g.size())
        fail(errc::inconsistent_orientation, "orientation size does not match edge count");
    IntMatrix b(g.order(), g.size());
    for (int j = 0; j < g.size(); ++j) {
        const auto& e = g.edges()[j];
        auto [tu, tv] = o.incidences[j];
        if ((tu != 1 && tu != -1) || (tv != 1 && tv != -1) || tu * tv != -to_int(e.sign))
            fail(errc::inconsistent_orientation,
                 "incidence pair violates theta(u,e)*theta(v,e) = -sigma(e)");
        b.at(e.u, j) = tu;
        b.at(e.v, j) = tv;
    }
    assert(b * b.transpose() == laplacian_matrix(g));
    return b;
}

IntPolynomial char_poly_exact(const IntMatrix& m) {
    if (!m.square()) fail(errc::non_square, "characteristic polynomial of non-square matrix");
    const int n = m.rows();
    std::vector<Int> c(n + 1);
    c[n] = 1;
    IntMatrix acc(n, n); // M_0 = 0
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i) acc.at(i, i) += c[n - k + 1];
        acc = m * acc;
        Int t = acc.trace();
        assert(t % k == 0);
        c[n - k] = -t / k;
    }
    return IntPolynomial(std::move(c));
}

RealSpectrum eigenvalues(const IntMatrix& m, double tol) {
    if (!m.symmetric()) fail(errc::non_symmetric, "eigensolve requires a symmetric matrix");
    const int n = m.rows();
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = m.at(i, j).convert_to<double>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    std::vector<double> vals(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    return RealSpectrum::from_values(std::move(vals), tol);
}

IntMatrix kronecker_matrix(const IntMatrix& p, const IntMatrix& q) {
    IntMatrix out(p.rows() * q.rows(), p.cols() * q.cols());
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.cols(); ++j) {
            const Int& pij = p.at(i, j);
            if (pij == 0) continue;
            for (int k = 0; k < q.rows(); ++k)
                for (int l = 0; l < q.cols(); ++l)
                    out.at(i * q.rows() + k, j * q.cols() + l) = pij * q.at(k, l);
        }
    return out;
}

int rank_exact(const IntMatrix& m) {
    const int r = m.rows(), c = m.cols();
    std::vector<std::vector<Int>> a(r, std::vector<Int>(c));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) a[i][j] = m.at(i, j);

    int rank = 0;
    Int prev_pivot = 1;
    for (int col = 0; col < c && rank < r; ++col) {
        int pivot = -1;
        for (int i = rank; i < r; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        // Bareiss step: exact division by the previous pivot
        for (int i = rank + 1; i < r; ++i) {
            for (int j = col + 1; j < c; ++j)
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev_pivot;
            a[i][col] = 0;
        }
        prev_pivot = a[rank][col];
        ++rank;
    }
    return rank;
}

} // namespace sg
