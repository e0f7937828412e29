#include "darkcomb/model.hpp"

#include <cmath>

namespace darkcomb {

AtomSystem AtomSystem::four_level(double gamma_rad, std::array<double, 3> branching,
                                  double gamma_transit, double gamma_deph) {
    AtomSystem sys;
    sys.dim = 4;
    sys.gamma_rad = gamma_rad;
    sys.branching = branching;
    sys.gamma_transit = gamma_transit;
    sys.gamma_deph = gamma_deph;
    sys.validate();
    return sys;
}

AtomSystem AtomSystem::five_level(double gamma_rad, std::array<double, 3> branching,
                                  double gamma_transit, double gamma_deph) {
    AtomSystem sys = four_level(gamma_rad, branching, gamma_transit, gamma_deph);
    sys.dim = 5;
    return sys;
}

void AtomSystem::validate() const {
    if (dim != 4 && dim != 5)
        throw ModelError("AtomSystem: dim must be 4 or 5, got " + std::to_string(dim));
    double sum = branching[0] + branching[1] + branching[2];
    if (std::abs(sum - 1.0) > 1e-12)
        throw ModelError("AtomSystem: branching fractions must sum to 1");
    for (double b : branching)
        if (b < 0.0) throw ModelError("AtomSystem: negative branching fraction");
    if (gamma_rad < 0.0 || gamma_transit < 0.0 || gamma_deph < 0.0)
        throw ModelError("AtomSystem: negative rate");
}

void FieldSet::validate() const {
    if (omega_drive < 0.0 || alpha_probe < 0.0 || omega_rf < 0.0)
        throw ModelError("FieldSet: Rabi frequencies are magnitudes, must be >= 0");
    for (double v : {omega_drive, alpha_probe, omega_rf, nu_rf, delta_drive,
                     delta_probe, doppler_shift})
        if (!std::isfinite(v)) throw ModelError("FieldSet: non-finite entry");
}

namespace {

// One-photon detunings with the velocity-class shift folded in. The
// two-photon detuning is untouched: copropagating probe and drive see
// the same Doppler shift.
void optical_diagonal(const FieldSet& f, Matrix& h) {
    double dp = f.delta_probe + f.doppler_shift;
    double delta = f.two_photon_detuning();
    h(kA, kA) = -dp;
    for (int lvl = kC; lvl < h.rows(); ++lvl) h(lvl, lvl) = -delta;
}

void optical_couplings(const FieldSet& f, Matrix& h) {
    h(kA, kC) = f.omega_drive;
    h(kC, kA) = f.omega_drive;
    h(kA, kB) = f.alpha_probe;
    h(kB, kA) = f.alpha_probe;
}

} // namespace

Matrix build_static_hamiltonian(const AtomSystem& sys, const FieldSet& fields) {
    if (!sys.split_d())
        throw ModelError("build_static_hamiltonian: needs the 5-level split-d system");
    sys.validate();
    fields.validate();

    Matrix h = Matrix::Zero(5, 5);
    optical_diagonal(fields, h);
    optical_couplings(fields, h);
    h(kC, kD1) = 0.5 * fields.omega_rf;
    h(kD1, kC) = 0.5 * fields.omega_rf;
    h(kC, kD2) = 0.5 * fields.omega_rf;
    h(kD2, kC) = 0.5 * fields.omega_rf;
    h(kD1, kD1) += fields.nu_rf;
    h(kD2, kD2) -= fields.nu_rf;
    return h;
}

HamiltonianHarmonics build_periodic_hamiltonian(const AtomSystem& sys,
                                                const FieldSet& fields) {
    if (sys.split_d())
        throw ModelError("build_periodic_hamiltonian: needs the 4-level system");
    sys.validate();
    fields.validate();

    HamiltonianHarmonics h;
    h.h_zero = Matrix::Zero(4, 4);
    optical_diagonal(fields, h.h_zero);
    optical_couplings(fields, h.h_zero);

    // Omega_c cos(nu t) on c-d splits into e^{+-i nu t} harmonics of
    // amplitude Omega_c/2. Both harmonic operators are the same real
    // symmetric matrix, so H_{-1} = H_{+1}^dag holds trivially.
    Matrix rf = Matrix::Zero(4, 4);
    rf(kC, kD) = 0.5 * fields.omega_rf;
    rf(kD, kC) = 0.5 * fields.omega_rf;
    h.h_plus1 = rf;
    h.h_minus1 = rf.adjoint();
    return h;
}

} // namespace darkcomb
