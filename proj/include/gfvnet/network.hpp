#pragma once

// Interconnection structure (A, B, C), standard topology generators, and
// the Kronecker-lifted network system and gain forms.

#include "gfvnet/agents.hpp"
#include "gfvnet/matrixkit.hpp"

namespace gfvnet {

/// Interconnection triple: A couples the N agents, B marks which agents
/// are actuated (M channels), C marks which are measured.
struct NetworkStructure {
    Mat A;  ///< N x N
    Mat B;  ///< N x M
    Mat C;  ///< M x N

    [[nodiscard]] Eigen::Index N() const { return A.rows(); }
    [[nodiscard]] Eigen::Index M() const { return B.cols(); }

    void validate() const {
        if (A.rows() != A.cols()) throw std::invalid_argument("NetworkStructure: A must be square");
        if (B.rows() != A.rows()) throw std::invalid_argument("NetworkStructure: B row count mismatch");
        if (C.cols() != A.rows()) throw std::invalid_argument("NetworkStructure: C column count mismatch");
        if (C.rows() != B.cols()) throw std::invalid_argument("NetworkStructure: channel counts differ");
        if (A.rows() < 1 || B.cols() < 1) throw std::invalid_argument("NetworkStructure: need N >= 1, M >= 1");
        if (!A.allFinite() || !B.allFinite() || !C.allFinite())
            throw std::invalid_argument("NetworkStructure: entries must be finite");
    }
};

/// Single-cycle coupling: A = k * P with P the circular shift sending agent
/// i-1 to agent i. sigma(A) is k times the Nth roots of unity. B and C are
/// left empty for the caller to fill.
inline NetworkStructure cyclic_structure(Eigen::Index N, double k) {
    if (N < 2) throw std::invalid_argument("cyclic_structure: need N >= 2");
    NetworkStructure s;
    s.A = Mat::Zero(N, N);
    s.A(0, N - 1) = k;
    for (Eigen::Index i = 1; i < N; ++i) s.A(i, i - 1) = k;
    return s;
}

/// Path-graph adjacency scaled by k (B, C left empty).
inline NetworkStructure path_structure(Eigen::Index N, double k) {
    if (N < 2) throw std::invalid_argument("path_structure: need N >= 2");
    NetworkStructure s;
    s.A = Mat::Zero(N, N);
    for (Eigen::Index i = 0; i + 1 < N; ++i) {
        s.A(i, i + 1) = k;
        s.A(i + 1, i) = k;
    }
    return s;
}

/// Negated complete-graph Laplacian scaled by k, the usual consensus
/// coupling: A = -k (N I - ones) has spectrum {0, -kN, ...}. B, C empty.
inline NetworkStructure complete_laplacian_structure(Eigen::Index N, double k) {
    if (N < 2) throw std::invalid_argument("complete_laplacian_structure: need N >= 2");
    NetworkStructure s;
    s.A = -k * (static_cast<double>(N) * Mat::Identity(N, N) - Mat::Ones(N, N));
    return s;
}

/// The lifted aggregate system:
///   calA = I_N (x) A_h + A (x) (B_h C_h),  calB = B (x) B_h,  calC = C (x) C_h.
struct LiftedSystem {
    Mat calA;  ///< Nn x Nn
    Mat calB;  ///< Nn x Mm
    Mat calC;  ///< Mm x Nn
    AgentModel agent;
    NetworkStructure structure;
};

inline LiftedSystem assemble(const AgentModel& agent, const NetworkStructure& structure) {
    agent.validate();
    structure.validate();
    LiftedSystem sys;
    const Eigen::Index N = structure.N();
    sys.calA = kron(Mat(Mat::Identity(N, N)), agent.A_h) + kron(structure.A, Mat(agent.B_h * agent.C_h));
    sys.calB = kron(structure.B, agent.B_h);
    sys.calC = kron(structure.C, agent.C_h);
    sys.agent = agent;
    sys.structure = structure;
    return sys;
}

/// Distributive gain pair (K at structure level, L at structure level) and
/// the lifted forms calK = K (x) C_h, calL = L (x) B_h.
struct LiftedGains {
    Mat K;     ///< M x N
    Mat L;     ///< N x M
    Mat calK;  ///< Mm x Nn
    Mat calL;  ///< Nn x Mm
};

inline LiftedGains lift_gains(const Mat& K, const Mat& L, const AgentModel& agent) {
    agent.validate();
    if (K.rows() != L.cols() || K.cols() != L.rows())
        throw std::invalid_argument("lift_gains: K must be M x N and L must be N x M");
    LiftedGains g;
    g.K = K;
    g.L = L;
    g.calK = kron(K, agent.C_h);
    g.calL = kron(L, agent.B_h);
    return g;
}

}  // namespace gfvnet
