#pragma once

#include <optional>
#include <vector>

#include <Eigen/LU>

#include "darkcomb/liouvillian.hpp"

namespace darkcomb {

struct FloquetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Fourier components rho^{(n)} of the time-periodic steady state,
/// rho(t) = sum_n rho^{(n)} e^{+i n nu t}, n = -N..N.
struct HarmonicState {
    int truncation = 0;     // N
    double nu_rf = 0.0;
    int dim = 0;
    std::vector<Matrix> comps;   // comps[N + n]
    bool degenerate = false;     // steady state was not unique; a
                                 // minimum-norm representative is stored

    const Matrix& harmonic(int n) const { return comps.at(truncation + n); }
    Matrix& harmonic(int n) { return comps.at(truncation + n); }
    bool has(int n) const { return std::abs(n) <= truncation; }

    /// rho(t) reassembled at a given time.
    Matrix at_time(double t) const;

    /// Largest entry magnitude of the edge components rho^{(+-N)}.
    double edge_norm() const;
};

/// Source term for linear-response solves: a superoperator block acting
/// from harmonic offset `offset`, i.e. it maps rho^{(n)} into equation
/// block n + offset.
struct HarmonicSource {
    int offset = 0;
    Matrix op;   // vec_dim x vec_dim superoperator
};

/// Factorized harmonic-balance ladder
///   (L_0 - i n nu) rho^{(n)} + L_{+1} rho^{(n-1)} + L_{-1} rho^{(n+1)} = rhs_n
/// for |n| <= N, with the trace row of the n = 0 block replaced by the
/// trace functional. Forward-backward block elimination; the
/// factorization is reusable for multiple right-hand sides. Falls back
/// to a rank-revealing dense solve when the ladder is singular or badly
/// conditioned (e.g. all decoherence rates zero), in which case the
/// minimum-norm steady state is returned and flagged degenerate.
class FloquetLadder {
  public:
    FloquetLadder(const LiouvillianHarmonics& liou, double nu_rf, int truncation);

    /// Normalized periodic steady state (rhs = trace constraint only).
    HarmonicState solve_steady() const;

    /// Traceless first-order response to the given sources applied to a
    /// reference state: rhs_n = -sum_k S_k.op rho_ref^{(n - S_k.offset)}.
    HarmonicState solve_response(const std::vector<HarmonicSource>& sources,
                                 const HarmonicState& rho_ref) const;

    int truncation() const { return n_; }
    double nu_rf() const { return nu_; }

  private:
    const LiouvillianHarmonics* liou_;
    double nu_;
    int n_;          // truncation N
    int s_;          // vec dimension dim^2
    int trace_row_;  // sacrificed scalar row within the n = 0 block

    // Thomas-algorithm factors: per-block LU of the pivoted diagonal and
    // the elimination couplers C_k = D'_k^{-1} B_k.
    std::vector<Eigen::PartialPivLU<Matrix>> lu_;
    std::vector<Matrix> coupler_;
    bool fragile_ = false;   // a pivot was tiny; verify residuals

    Matrix block_a(int k) const;    // sub-diagonal (acts on n-1)
    Matrix block_b(int k) const;    // super-diagonal (acts on n+1)
    Matrix block_d(int k) const;    // diagonal, trace row applied at n=0

    std::vector<Vector> solve_blocks(const std::vector<Vector>& rhs, bool* ill) const;
    std::vector<Vector> dense_fallback(const std::vector<Vector>& rhs,
                                       bool* degenerate) const;
    double residual(const std::vector<Vector>& x, const std::vector<Vector>& rhs) const;
    HarmonicState package(std::vector<Vector> x, bool degenerate) const;
};

/// Steady state at fixed truncation N.
HarmonicState floquet_steady_state(const LiouvillianHarmonics& liou, double nu_rf,
                                   int truncation);

struct AutoTruncationResult {
    HarmonicState state;
    int truncation_used = 0;
};

/// Grows N until the edge components fall below tol and the a-b
/// coherence harmonics are stable between successive solves. Throws
/// FloquetError past the cap.
AutoTruncationResult floquet_steady_state_auto(const LiouvillianHarmonics& liou,
                                               double nu_rf, double tol,
                                               int cap = 32, int n_start = 1);

/// Trace of rho^{(n)} (diagnostic; n != 0 components are traceless).
Complex harmonic_trace(const Matrix& comp);

} // namespace darkcomb
