#include "darkcomb/floquet.hpp"

#include <cmath>

#include <Eigen/QR>

namespace darkcomb {

Matrix HarmonicState::at_time(double t) const {
    Matrix out = Matrix::Zero(dim, dim);
    for (int n = -truncation; n <= truncation; ++n)
        out += harmonic(n) * std::exp(kI * static_cast<double>(n) * nu_rf * t);
    return out;
}

double HarmonicState::edge_norm() const {
    if (truncation == 0) return 0.0;
    return std::max(max_abs(harmonic(truncation)), max_abs(harmonic(-truncation)));
}

Complex harmonic_trace(const Matrix& comp) { return comp.trace(); }

namespace {

// Row of vec(rho^{(0)}) sacrificed for the trace constraint: the last
// population equation, which is recovered by trace conservation.
int trace_row_index(int dim) { return vec_index(dim - 1, dim - 1, dim); }

Eigen::RowVectorXcd trace_functional(int dim) {
    Eigen::RowVectorXcd row = Eigen::RowVectorXcd::Zero(dim * dim);
    for (int i = 0; i < dim; ++i) row(vec_index(i, i, dim)) = 1.0;
    return row;
}

} // namespace

FloquetLadder::FloquetLadder(const LiouvillianHarmonics& liou, double nu_rf,
                             int truncation)
    : liou_(&liou), nu_(nu_rf), n_(truncation), s_(liou.vec_dim()),
      trace_row_(trace_row_index(liou.dim)) {
    if (truncation < 0) throw FloquetError("FloquetLadder: negative truncation");
    if (nu_rf <= 0.0 && truncation > 0)
        throw FloquetError("FloquetLadder: nu_rf must be positive");
    if (liou.l_zero.rows() != s_ || liou.l_plus1.rows() != s_ ||
        liou.l_minus1.rows() != s_)
        throw FloquetError("FloquetLadder: superoperator dimension mismatch");

    const int blocks = 2 * n_ + 1;
    lu_.reserve(blocks);
    coupler_.resize(blocks);

    // Forward sweep of the block Thomas algorithm; keep the LU factors
    // and couplers so response solves reuse the factorization.
    Matrix dprime;
    for (int k = 0; k < blocks; ++k) {
        dprime = block_d(k);
        if (k > 0) dprime.noalias() -= block_a(k) * coupler_[k - 1];
        lu_.emplace_back(dprime);
        double pivot_min = lu_.back().matrixLU().diagonal().cwiseAbs().minCoeff();
        double pivot_max = lu_.back().matrixLU().diagonal().cwiseAbs().maxCoeff();
        if (pivot_min <= 1e-13 * std::max(1.0, pivot_max)) fragile_ = true;
        if (k + 1 < blocks) coupler_[k] = lu_.back().solve(block_b(k));
    }
}

Matrix FloquetLadder::block_a(int k) const {
    Matrix a = liou_->l_plus1;
    if (k - n_ == 0) a.row(trace_row_).setZero();
    return a;
}

Matrix FloquetLadder::block_b(int k) const {
    Matrix b = liou_->l_minus1;
    if (k - n_ == 0) b.row(trace_row_).setZero();
    return b;
}

Matrix FloquetLadder::block_d(int k) const {
    const int n = k - n_;
    Matrix d = liou_->l_zero;
    d.diagonal().array() -= kI * static_cast<double>(n) * nu_;
    if (n == 0) d.row(trace_row_) = trace_functional(liou_->dim);
    return d;
}

std::vector<Vector> FloquetLadder::solve_blocks(const std::vector<Vector>& rhs,
                                                bool* ill) const {
    const int blocks = 2 * n_ + 1;
    std::vector<Vector> z(blocks);
    for (int k = 0; k < blocks; ++k) {
        Vector r = rhs[k];
        if (k > 0) r.noalias() -= block_a(k) * z[k - 1];
        z[k] = lu_[k].solve(r);
    }
    std::vector<Vector> x(blocks);
    x[blocks - 1] = z[blocks - 1];
    for (int k = blocks - 2; k >= 0; --k)
        x[k] = z[k] - coupler_[k] * x[k + 1];

    if (ill) {
        double res = residual(x, rhs);
        *ill = fragile_ || !std::isfinite(res) || res > 1e-8;
    }
    return x;
}

double FloquetLadder::residual(const std::vector<Vector>& x,
                               const std::vector<Vector>& rhs) const {
    const int blocks = 2 * n_ + 1;
    double num = 0.0, den = 0.0;
    for (int k = 0; k < blocks; ++k) {
        Vector r = block_d(k) * x[k] - rhs[k];
        if (k > 0) r.noalias() += block_a(k) * x[k - 1];
        if (k + 1 < blocks) r.noalias() += block_b(k) * x[k + 1];
        num = std::max(num, r.cwiseAbs().maxCoeff());
        den = std::max(den, x[k].cwiseAbs().maxCoeff());
    }
    return num / std::max(1.0, den);
}

std::vector<Vector> FloquetLadder::dense_fallback(const std::vector<Vector>& rhs,
                                                  bool* degenerate) const {
    const int blocks = 2 * n_ + 1;
    const Eigen::Index total = static_cast<Eigen::Index>(blocks) * s_;
    Matrix full = Matrix::Zero(total, total);
    Vector b = Vector::Zero(total);
    for (int k = 0; k < blocks; ++k) {
        full.block(k * s_, k * s_, s_, s_) = block_d(k);
        if (k > 0) full.block(k * s_, (k - 1) * s_, s_, s_) = block_a(k);
        if (k + 1 < blocks) full.block(k * s_, (k + 1) * s_, s_, s_) = block_b(k);
        b.segment(k * s_, s_) = rhs[k];
    }

    Eigen::CompleteOrthogonalDecomposition<Matrix> cod(full);
    cod.setThreshold(1e-10);
    Vector x = cod.solve(b);
    if (degenerate) *degenerate = cod.rank() < total;

    double res = (full * x - b).cwiseAbs().maxCoeff() /
                 std::max(1.0, x.cwiseAbs().maxCoeff());
    if (!std::isfinite(res) || res > 1e-6)
        throw FloquetError("floquet_steady_state: singular system without a "
                           "consistent steady state (residual " + std::to_string(res) + ")");

    std::vector<Vector> out(blocks);
    for (int k = 0; k < blocks; ++k) out[k] = x.segment(k * s_, s_);
    return out;
}

HarmonicState FloquetLadder::package(std::vector<Vector> x, bool degenerate) const {
    HarmonicState st;
    st.truncation = n_;
    st.nu_rf = nu_;
    st.dim = liou_->dim;
    st.degenerate = degenerate;
    st.comps.resize(2 * n_ + 1);
    const int d = liou_->dim;
    for (int k = 0; k < 2 * n_ + 1; ++k)
        st.comps[k] = x[k].reshaped(d, d);

    // rho(t) is Hermitian at every t, so rho^{(-n)} = rho^{(n)}^dag; the
    // solved components satisfy this to rounding and are symmetrized.
    for (int n = 0; n <= n_; ++n) {
        Matrix sym = 0.5 * (st.harmonic(n) + st.harmonic(-n).adjoint());
        st.harmonic(n) = sym;
        st.harmonic(-n) = sym.adjoint();
    }
    return st;
}

HarmonicState FloquetLadder::solve_steady() const {
    const int blocks = 2 * n_ + 1;
    std::vector<Vector> rhs(blocks, Vector::Zero(s_));
    rhs[n_](trace_row_) = 1.0;

    bool ill = false;
    std::vector<Vector> x = solve_blocks(rhs, &ill);
    bool degenerate = false;
    if (ill) x = dense_fallback(rhs, &degenerate);
    return package(std::move(x), degenerate);
}

HarmonicState FloquetLadder::solve_response(const std::vector<HarmonicSource>& sources,
                                            const HarmonicState& rho_ref) const {
    const int blocks = 2 * n_ + 1;
    std::vector<Vector> rhs(blocks, Vector::Zero(s_));
    for (const HarmonicSource& src : sources) {
        for (int n = -n_; n <= n_; ++n) {
            int m = n - src.offset;
            if (!rho_ref.has(m)) continue;
            Vector contrib = src.op * rho_ref.harmonic(m).reshaped();
            rhs[n_ + n].noalias() -= contrib;
        }
    }
    rhs[n_](trace_row_) = 0.0;   // response is traceless

    bool ill = false;
    std::vector<Vector> x = solve_blocks(rhs, &ill);
    bool degenerate = false;
    if (ill) x = dense_fallback(rhs, &degenerate);
    return package(std::move(x), degenerate);
}

HarmonicState floquet_steady_state(const LiouvillianHarmonics& liou, double nu_rf,
                                   int truncation) {
    return FloquetLadder(liou, nu_rf, truncation).solve_steady();
}

AutoTruncationResult floquet_steady_state_auto(const LiouvillianHarmonics& liou,
                                               double nu_rf, double tol, int cap,
                                               int n_start) {
    if (tol <= 0.0) throw FloquetError("floquet_steady_state_auto: tol must be > 0");

    const bool driven = max_abs(liou.l_plus1) > 0.0 || max_abs(liou.l_minus1) > 0.0;
    int n = std::max(1, n_start);
    std::optional<HarmonicState> prev;
    while (n <= cap) {
        HarmonicState st = floquet_steady_state(liou, nu_rf, n);
        if (!driven) return {std::move(st), n};

        bool edge_ok = st.edge_norm() < tol;
        bool stable = false;
        if (prev) {
            double change = 0.0;
            for (int k = -prev->truncation; k <= prev->truncation; ++k)
                change = std::max(change,
                                  std::abs(st.harmonic(k)(kA, kB) -
                                           prev->harmonic(k)(kA, kB)));
            stable = change < tol;
        }
        if (edge_ok && stable) return {std::move(st), n};
        prev = std::move(st);
        n += 2;
    }
    throw FloquetError("floquet_steady_state_auto: no convergence up to N = " +
                       std::to_string(cap));
}

} // namespace darkcomb
