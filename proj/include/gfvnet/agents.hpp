#pragma once

// A single agent of the homogeneous network: state-space triple
// (A_h, B_h, C_h), SISO transfer-function realization, and the
// minimality checks the network-level results depend on.

#include <string>
#include <vector>

#include "gfvnet/matrixkit.hpp"

namespace gfvnet {

/// Per-agent state-space triple. n states, m inputs = m outputs.
struct AgentModel {
    Mat A_h;  ///< n x n
    Mat B_h;  ///< n x m
    Mat C_h;  ///< m x n

    [[nodiscard]] Eigen::Index n() const { return A_h.rows(); }
    [[nodiscard]] Eigen::Index m() const { return B_h.cols(); }

    void validate() const {
        if (A_h.rows() != A_h.cols()) throw std::invalid_argument("AgentModel: A_h must be square");
        if (B_h.rows() != A_h.rows()) throw std::invalid_argument("AgentModel: B_h row count mismatch");
        if (C_h.cols() != A_h.rows()) throw std::invalid_argument("AgentModel: C_h column count mismatch");
        if (C_h.rows() != B_h.cols()) throw std::invalid_argument("AgentModel: input/output widths differ");
        if (A_h.rows() < 1 || B_h.cols() < 1) throw std::invalid_argument("AgentModel: need n >= 1, m >= 1");
        if (!A_h.allFinite() || !B_h.allFinite() || !C_h.allFinite())
            throw std::invalid_argument("AgentModel: entries must be finite");
    }
};

/// Strictly proper SISO transfer function num(s)/den(s).
struct RationalTF {
    RealPoly num;
    RealPoly den;

    RationalTF(RealPoly numerator, RealPoly denominator)
        : num(std::move(numerator)), den(std::move(denominator)) {
        if (den.is_zero()) throw std::invalid_argument("RationalTF: zero denominator");
        if (num.is_zero()) return;
        if (num.degree() >= den.degree())
            throw std::invalid_argument("RationalTF: transfer function must be strictly proper");
    }

    /// Equivalent transfer function with monic denominator.
    [[nodiscard]] RationalTF monic() const {
        const double lead = den.coeffs().front();
        RealPoly n2 = num, d2 = den;
        n2 *= 1.0 / lead;
        d2 *= 1.0 / lead;
        return RationalTF(std::move(n2), std::move(d2));
    }

    [[nodiscard]] Complex eval(const Complex& s) const {
        ComplexPoly cn(std::vector<Complex>(num.coeffs().begin(), num.coeffs().end()));
        ComplexPoly cd(std::vector<Complex>(den.coeffs().begin(), den.coeffs().end()));
        return cn.eval(s) / cd.eval(s);
    }
};

struct MinimalityReport {
    bool controllable = false;
    bool observable = false;
    Eigen::Index rank_Bh = 0;
    Eigen::Index rank_Ch = 0;
};

/// Kalman controllability matrix [B, AB, ..., A^{q-1}B].
inline Mat controllability_matrix(const Mat& A, const Mat& B) {
    if (A.rows() != A.cols() || B.rows() != A.rows())
        throw std::invalid_argument("controllability_matrix: dimension mismatch");
    const Eigen::Index q = A.rows(), m = B.cols();
    Mat out(q, q * m);
    Mat col = B;
    for (Eigen::Index k = 0; k < q; ++k) {
        out.middleCols(k * m, m) = col;
        col = A * col;
    }
    return out;
}

inline Mat observability_matrix(const Mat& A, const Mat& C) {
    return controllability_matrix(A.transpose(), C.transpose()).transpose();
}

/// Controllable-canonical realization of a strictly proper SISO transfer
/// function: n = deg(den) states, identity superdiagonal, negated monic
/// denominator coefficients in the bottom row, B_h = e_n, and C_h holding
/// the numerator coefficients lowest order first.
///
/// Near-cancelling numerator/denominator roots append a note to `warnings`
/// (when given) instead of failing; the realization is then non-minimal.
inline AgentModel realize_siso(const RationalTF& tf, std::vector<std::string>* warnings = nullptr) {
    const RationalTF m = tf.monic();
    const int n = m.den.degree();
    if (n < 1) throw std::invalid_argument("realize_siso: denominator must have degree >= 1");

    if (warnings && !m.num.is_zero() && m.num.degree() >= 1) {
        const CVec zn = poly_roots(m.num);
        const CVec zd = poly_roots(m.den);
        for (Eigen::Index i = 0; i < zn.size(); ++i)
            for (Eigen::Index j = 0; j < zd.size(); ++j)
                if (std::abs(zn(i) - zd(j)) < 1e-7)
                    warnings->push_back("realize_siso: near pole-zero cancellation around s = " +
                                        std::to_string(zd(j).real()) + (zd(j).imag() >= 0 ? "+" : "") +
                                        std::to_string(zd(j).imag()) + "i");
    }

    AgentModel agent;
    agent.A_h = Mat::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) agent.A_h(i, i + 1) = 1.0;
    for (int k = 0; k < n; ++k) agent.A_h(n - 1, k) = -m.den.coeff(k);
    agent.B_h = Mat::Zero(n, 1);
    agent.B_h(n - 1, 0) = 1.0;
    agent.C_h = Mat::Zero(1, n);
    for (int k = 0; k < n; ++k) agent.C_h(0, k) = m.num.coeff(k);
    agent.validate();
    return agent;
}

/// C_h (sI - A_h)^{-1} B_h at one frequency (m x m).
inline CMat transfer_eval(const AgentModel& agent, const Complex& s) {
    const CMat resolvent =
        (s * CMat::Identity(agent.n(), agent.n()) - agent.A_h.cast<Complex>()).lu().solve(
            agent.B_h.cast<Complex>());
    return agent.C_h.cast<Complex>() * resolvent;
}

/// Joint controllability/observability of the agent plus input/output
/// matrix ranks.
inline MinimalityReport minimality(const AgentModel& agent, double tol = 1e-9) {
    agent.validate();
    MinimalityReport rep;
    rep.controllable = numerical_rank(controllability_matrix(agent.A_h, agent.B_h), tol) == agent.n();
    rep.observable = numerical_rank(observability_matrix(agent.A_h, agent.C_h), tol) == agent.n();
    rep.rank_Bh = numerical_rank(agent.B_h, tol);
    rep.rank_Ch = numerical_rank(agent.C_h, tol);
    return rep;
}

/// A_h + lambda * B_h C_h. Its eigenvalues are the closed-agent modes the
/// stability region is built from.
inline CMat closed_agent_matrix(const AgentModel& agent, const Complex& lambda) {
    return agent.A_h.cast<Complex>() + lambda * (agent.B_h * agent.C_h).cast<Complex>();
}

}  // namespace gfvnet
