#include "darkcomb/liouvillian.hpp"

#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

namespace darkcomb {

namespace {

Matrix identity(int dim) { return Matrix::Identity(dim, dim); }

} // namespace

Matrix commutator_superop(const Matrix& h) {
    const int d = static_cast<int>(h.rows());
    Matrix id = identity(d);
    // vec(H rho) = (I (x) H) vec, vec(rho H) = (H^T (x) I) vec.
    return -kI * (Eigen::kroneckerProduct(id, h) -
                  Eigen::kroneckerProduct(h.transpose(), id))
                     .eval();
}

Matrix dissipator_superop(const Matrix& jump) {
    const int d = static_cast<int>(jump.rows());
    Matrix id = identity(d);
    Matrix cdc = jump.adjoint() * jump;
    Matrix out = Eigen::kroneckerProduct(jump.conjugate(), jump);
    out -= 0.5 * Eigen::kroneckerProduct(id, cdc);
    out -= 0.5 * Eigen::kroneckerProduct(cdc.transpose(), id);
    return out;
}

Matrix ground_mixture(const AtomSystem& sys) {
    Matrix t = Matrix::Zero(sys.dim, sys.dim);
    t(kB, kB) = 1.0 / 3;
    t(kC, kC) = 1.0 / 3;
    if (sys.split_d()) {
        t(kD1, kD1) = 1.0 / 6;
        t(kD2, kD2) = 1.0 / 6;
    } else {
        t(kD, kD) = 1.0 / 3;
    }
    return t;
}

namespace {

// Transit relaxation: atoms leave the beam at gamma_transit and are
// replaced from the equal ground mixture. As a generator this is the
// reset channel gamma (T Tr(rho) - rho), which is trace preserving and
// completely positive.
Matrix transit_superop(const AtomSystem& sys) {
    const int d = sys.dim;
    const int s = d * d;
    Matrix target = ground_mixture(sys);
    Vector vec_t = target.reshaped();
    Vector vec_id = identity(d).reshaped();
    return sys.gamma_transit * (vec_t * vec_id.transpose() - Matrix::Identity(s, s));
}

// Projectors onto the physical ground levels; the split d manifold is
// one level, so its two components share a single projector and keep
// their mutual coherence.
std::vector<Matrix> ground_projectors(const AtomSystem& sys) {
    const int d = sys.dim;
    std::vector<Matrix> out;
    Matrix pb = Matrix::Zero(d, d);
    pb(kB, kB) = 1.0;
    Matrix pc = Matrix::Zero(d, d);
    pc(kC, kC) = 1.0;
    Matrix pd = Matrix::Zero(d, d);
    if (sys.split_d()) {
        pd(kD1, kD1) = 1.0;
        pd(kD2, kD2) = 1.0;
    } else {
        pd(kD, kD) = 1.0;
    }
    out.push_back(pb);
    out.push_back(pc);
    out.push_back(pd);
    return out;
}

Matrix dissipator_sum(const AtomSystem& sys) {
    const int d = sys.dim;
    const int s = d * d;
    Matrix out = Matrix::Zero(s, s);

    // Radiative decay of |a> into b, c, d with configured branching. In
    // the split-d system the d fraction feeds d1 and d2 through separate
    // jumps: decay populates the physical d level, not the d1-d2
    // coherence.
    auto add_decay = [&](int target, double rate) {
        if (rate <= 0.0) return;
        Matrix jump = Matrix::Zero(d, d);
        jump(target, kA) = std::sqrt(rate);
        out += dissipator_superop(jump);
    };
    double g = sys.gamma_rad;
    add_decay(kB, sys.branching[0] * g);
    add_decay(kC, sys.branching[1] * g);
    if (sys.split_d()) {
        add_decay(kD1, 0.5 * sys.branching[2] * g);
        add_decay(kD2, 0.5 * sys.branching[2] * g);
    } else {
        add_decay(kD, sys.branching[2] * g);
    }

    if (sys.gamma_transit > 0.0) out += transit_superop(sys);

    // Pure dephasing of ground-ground coherences: independent projector
    // noise on each physical ground level gives every ground pair the
    // full gamma_deph decay.
    if (sys.gamma_deph > 0.0) {
        for (const Matrix& p : ground_projectors(sys))
            out += sys.gamma_deph * dissipator_superop(p);
    }
    return out;
}

} // namespace

LiouvillianHarmonics build_liouvillian(const HamiltonianHarmonics& h,
                                       const AtomSystem& sys) {
    const int d = sys.dim;
    if (h.h_zero.rows() != d || h.h_plus1.rows() != d || h.h_minus1.rows() != d)
        throw ModelError("build_liouvillian: Hamiltonian/system dimension mismatch");

    LiouvillianHarmonics out;
    out.dim = d;
    out.l_zero = commutator_superop(h.h_zero) + dissipator_sum(sys);
    out.l_plus1 = commutator_superop(h.h_plus1);
    out.l_minus1 = commutator_superop(h.h_minus1);
    return out;
}

LiouvillianHarmonics build_static_liouvillian(const Matrix& h_static,
                                              const AtomSystem& sys) {
    HamiltonianHarmonics h;
    h.h_zero = h_static;
    h.h_plus1 = Matrix::Zero(sys.dim, sys.dim);
    h.h_minus1 = h.h_plus1;
    return build_liouvillian(h, sys);
}

} // namespace darkcomb
