#pragma once

// Dense matrix and polynomial utilities shared by every other header:
// Kronecker products, spectra, Hurwitz tests, numerical rank, and
// coefficient-vector polynomial arithmetic. All numerics are backed by
// Eigen; everything here is a pure function on immutable inputs.

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <complex>
#include <limits>
#include <stdexcept>
#include <vector>

namespace gfvnet {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;

/// Kronecker product: block (i,j) of the result is A(i,j)*B.
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& A, const Eigen::MatrixBase<DerivedB>& B) {
    using Scalar = decltype(typename DerivedA::Scalar{} * typename DerivedB::Scalar{});
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(A.rows() * B.rows(),
                                                              A.cols() * B.cols());
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) = A(i, j) * B;
    return out;
}

/// All eigenvalues of a square matrix, with multiplicity, via the dense
/// complex Schur reduction (backward stable).
inline CVec eigenvalues(const CMat& M) {
    if (M.rows() != M.cols())
        throw std::invalid_argument("eigenvalues: matrix must be square");
    if (M.rows() == 0) return CVec(0);
    Eigen::ComplexEigenSolver<CMat> solver(M, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigenvalues: Schur iteration failed to converge");
    return solver.eigenvalues();
}

inline CVec eigenvalues(const Mat& M) { return eigenvalues(CMat(M.cast<Complex>())); }

/// Largest real part over the spectrum.
template <typename MatT>
double spectral_abscissa(const MatT& M) {
    const CVec ev = eigenvalues(M);
    double a = -std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < ev.size(); ++i) a = std::max(a, ev(i).real());
    return a;
}

/// True iff every eigenvalue satisfies Re < -margin.
template <typename MatT>
bool is_hurwitz(const MatT& M, double margin = 0.0) {
    if (M.rows() != M.cols())
        throw std::invalid_argument("is_hurwitz: matrix must be square");
    return spectral_abscissa(M) < -margin;
}

/// Number of singular values exceeding tol * (largest singular value).
/// The zero matrix has rank 0.
template <typename MatT>
Eigen::Index numerical_rank(const MatT& M, double tol = 1e-9) {
    if (!(tol > 0.0)) throw std::invalid_argument("numerical_rank: tol must be positive");
    if (M.rows() == 0 || M.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::Matrix<typename MatT::Scalar, Eigen::Dynamic, Eigen::Dynamic>> svd(M);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv(0) : 0.0;
    if (smax <= 0.0) return 0;
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tol * smax) ++r;
    return r;
}

// ---------------------------------------------------------------------------
// Polynomials, coefficients stored highest degree first.
// ---------------------------------------------------------------------------

/// Dense univariate polynomial. The zero polynomial is an empty coefficient
/// vector; otherwise the leading coefficient is nonzero after normalize().
template <typename Scalar>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { normalize(); }
    Poly(std::initializer_list<Scalar> coeffs) : c_(coeffs) { normalize(); }

    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] const std::vector<Scalar>& coeffs() const { return c_; }

    /// Coefficient of s^k (0 when k exceeds the degree).
    [[nodiscard]] Scalar coeff(int k) const {
        const int d = degree();
        if (k < 0 || k > d) return Scalar{0};
        return c_[static_cast<std::size_t>(d - k)];
    }

    [[nodiscard]] Scalar eval(const Scalar& s) const {
        Scalar acc{0};
        for (const Scalar& ck : c_) acc = acc * s + ck;
        return acc;
    }

    Poly& operator*=(const Scalar& a) {
        for (Scalar& ck : c_) ck *= a;
        normalize();
        return *this;
    }

private:
    void normalize() {
        std::size_t lead = 0;
        while (lead < c_.size() && std::abs(c_[lead]) == 0.0) ++lead;
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    }
    std::vector<Scalar> c_;
};

using RealPoly = Poly<double>;
using ComplexPoly = Poly<Complex>;

/// Coefficient convolution; deg(pq) = deg p + deg q.
template <typename Scalar>
Poly<Scalar> poly_mul(const Poly<Scalar>& p, const Poly<Scalar>& q) {
    if (p.is_zero() || q.is_zero()) return Poly<Scalar>{};
    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    std::vector<Scalar> out(a.size() + b.size() - 1, Scalar{0});
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return Poly<Scalar>(std::move(out));
}

template <typename Scalar>
Poly<Scalar> poly_add(const Poly<Scalar>& p, const Poly<Scalar>& q) {
    const std::size_t n = std::max(p.coeffs().size(), q.coeffs().size());
    std::vector<Scalar> out(n, Scalar{0});
    for (int k = 0; k <= static_cast<int>(n) - 1; ++k)
        out[n - 1 - static_cast<std::size_t>(k)] = p.coeff(k) + q.coeff(k);
    return Poly<Scalar>(std::move(out));
}

template <typename Scalar>
Poly<Scalar> poly_sub(const Poly<Scalar>& p, const Poly<Scalar>& q) {
    Poly<Scalar> nq = q;
    nq *= Scalar{-1};
    return poly_add(p, nq);
}

/// Monic polynomial with the given roots.
inline ComplexPoly poly_from_roots(const CVec& roots) {
    std::vector<Complex> c{Complex{1.0, 0.0}};
    for (Eigen::Index i = 0; i < roots.size(); ++i) {
        std::vector<Complex> next(c.size() + 1, Complex{0.0, 0.0});
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j] += c[j];
            next[j + 1] -= c[j] * roots(i);
        }
        c = std::move(next);
    }
    return ComplexPoly(std::move(c));
}

/// Real monic polynomial from a conjugate-closed root set: conjugate pairs
/// are expanded as real quadratics so no imaginary residue leaks into the
/// coefficients.
inline RealPoly real_poly_from_roots(const CVec& roots, double pair_tol = 1e-9) {
    std::vector<bool> used(static_cast<std::size_t>(roots.size()), false);
    RealPoly p{1.0};
    for (Eigen::Index i = 0; i < roots.size(); ++i) {
        if (used[static_cast<std::size_t>(i)]) continue;
        const Complex r = roots(i);
        if (std::abs(r.imag()) <= pair_tol) {
            used[static_cast<std::size_t>(i)] = true;
            p = poly_mul(p, RealPoly{1.0, -r.real()});
            continue;
        }
        Eigen::Index mate = -1;
        double best = std::numeric_limits<double>::infinity();
        for (Eigen::Index j = i + 1; j < roots.size(); ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            const double d = std::abs(roots(j) - std::conj(r));
            if (d < best) {
                best = d;
                mate = j;
            }
        }
        if (mate < 0 || best > pair_tol * std::max(1.0, std::abs(r)))
            throw std::invalid_argument("real_poly_from_roots: roots not conjugate-closed");
        used[static_cast<std::size_t>(i)] = true;
        used[static_cast<std::size_t>(mate)] = true;
        p = poly_mul(p, RealPoly{1.0, -2.0 * r.real(), std::norm(r)});
    }
    return p;
}

/// Companion matrix (identity superdiagonal, negated coefficients in the
/// bottom row); its spectrum is the root multiset of p.
template <typename Scalar>
CMat companion(const Poly<Scalar>& p) {
    if (p.degree() < 1)
        throw std::invalid_argument("companion: polynomial must have degree >= 1");
    const int n = p.degree();
    const Scalar lead = p.coeffs().front();
    CMat C = CMat::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) C(i, i + 1) = Complex{1.0, 0.0};
    for (int k = 0; k < n; ++k) C(n - 1, k) = -Complex(p.coeff(k)) / Complex(lead);
    return C;
}

/// All deg(p) roots with multiplicity, via companion-matrix eigenvalues.
template <typename Scalar>
CVec poly_roots(const Poly<Scalar>& p) {
    if (p.degree() < 1)
        throw std::invalid_argument("poly_roots: need a nonconstant polynomial");
    return eigenvalues(companion(p));
}

/// Characteristic polynomial reconstructed from the computed spectrum.
inline ComplexPoly char_poly(const CMat& M) { return poly_from_roots(eigenvalues(M)); }

// ---------------------------------------------------------------------------
// Optimal multiset matching (used wherever spectra are compared).
// ---------------------------------------------------------------------------

/// Min-cost assignment on a square cost matrix (shortest augmenting paths,
/// O(n^3)). Returns the column assigned to each row.
inline std::vector<int> min_cost_assignment(const Mat& cost) {
    if (cost.rows() != cost.cols())
        throw std::invalid_argument("min_cost_assignment: cost matrix must be square");
    const int n = static_cast<int>(cost.rows());
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(static_cast<std::size_t>(n) + 1, 0.0), v(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<int> match(static_cast<std::size_t>(n) + 1, 0), way(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        match[0] = i;
        int j0 = 0;
        std::vector<double> minv(static_cast<std::size_t>(n) + 1, inf);
        std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
        do {
            used[static_cast<std::size_t>(j0)] = 1;
            const int i0 = match[static_cast<std::size_t>(j0)];
            double delta = inf;
            int j1 = 0;
            for (int j = 1; j <= n; ++j) {
                if (used[static_cast<std::size_t>(j)]) continue;
                const double cur = cost(i0 - 1, j - 1) - u[static_cast<std::size_t>(i0)] -
                                   v[static_cast<std::size_t>(j)];
                if (cur < minv[static_cast<std::size_t>(j)]) {
                    minv[static_cast<std::size_t>(j)] = cur;
                    way[static_cast<std::size_t>(j)] = j0;
                }
                if (minv[static_cast<std::size_t>(j)] < delta) {
                    delta = minv[static_cast<std::size_t>(j)];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[static_cast<std::size_t>(j)]) {
                    u[static_cast<std::size_t>(match[static_cast<std::size_t>(j)])] += delta;
                    v[static_cast<std::size_t>(j)] -= delta;
                } else {
                    minv[static_cast<std::size_t>(j)] -= delta;
                }
            }
            j0 = j1;
        } while (match[static_cast<std::size_t>(j0)] != 0);
        do {
            const int j1 = way[static_cast<std::size_t>(j0)];
            match[static_cast<std::size_t>(j0)] = match[static_cast<std::size_t>(j1)];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<int> row_to_col(static_cast<std::size_t>(n), -1);
    for (int j = 1; j <= n; ++j)
        if (match[static_cast<std::size_t>(j)] > 0)
            row_to_col[static_cast<std::size_t>(match[static_cast<std::size_t>(j)]) - 1] = j - 1;
    return row_to_col;
}

/// Largest pairwise distance after optimally pairing the two multisets.
inline double matched_distance(const CVec& a, const CVec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("matched_distance: multisets differ in size");
    const int n = static_cast<int>(a.size());
    if (n == 0) return 0.0;
    Mat cost(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cost(i, j) = std::abs(a(i) - b(j));
    const std::vector<int> asg = min_cost_assignment(cost);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) worst = std::max(worst, cost(i, asg[static_cast<std::size_t>(i)]));
    return worst;
}

}  // namespace gfvnet
