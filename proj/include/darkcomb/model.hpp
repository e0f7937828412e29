#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "darkcomb/types.hpp"

namespace darkcomb {

// Level ordering used throughout: a (excited), b, c, d for the
// time-periodic four-level model; a, b, c, d1, d2 for the static model
// in which the RF field is represented by red- and blue-detuned
// components coupling to a split d level.
enum Level : int { kA = 0, kB = 1, kC = 2, kD = 3, kD1 = 3, kD2 = 4 };

struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Level scheme and relaxation rates. All rates are angular frequencies
/// in solver units (gamma_rad = 1 is the canonical normalization).
struct AtomSystem {
    int dim = 4;                                  // 4 or 5 (split-d)
    double gamma_rad = 1.0;                       // radiative decay of |a>
    std::array<double, 3> branching{1.0 / 3, 1.0 / 3, 1.0 / 3}; // into b, c, d
    double gamma_transit = 0.0;                   // ground-state transit rate
    double gamma_deph = 0.0;                      // extra ground dephasing

    bool split_d() const { return dim == 5; }

    static AtomSystem four_level(double gamma_rad, std::array<double, 3> branching,
                                 double gamma_transit, double gamma_deph);
    static AtomSystem five_level(double gamma_rad, std::array<double, 3> branching,
                                 double gamma_transit, double gamma_deph);

    /// Throws ModelError unless branching sums to 1 within 1e-12 and all
    /// rates are non-negative.
    void validate() const;
};

/// Rabi frequencies and detunings, angular frequencies in solver units.
/// The RF frequency nu_rf doubles as the static model's splitting
/// Delta_RF. doppler_shift is added to both one-photon detunings, so the
/// two-photon detuning delta_probe - delta_drive is Doppler free.
struct FieldSet {
    double omega_drive = 0.0;  // drive Rabi, a <-> c
    double alpha_probe = 0.0;  // probe Rabi, a <-> b
    double omega_rf = 0.0;     // RF Rabi, c <-> d
    double nu_rf = 0.0;        // RF frequency (== Delta_RF)
    double delta_drive = 0.0;
    double delta_probe = 0.0;
    double doppler_shift = 0.0;

    double two_photon_detuning() const { return delta_probe - delta_drive; }

    /// True when the probe is too strong for linear-response use.
    bool probe_out_of_linear_regime() const {
        return omega_drive > 0.0 && alpha_probe > 0.1 * omega_drive;
    }

    void validate() const;
};

/// Static five-level Hamiltonian {a, b, c, d1, d2}: drive on a-c, probe
/// on a-b, both RF components Omega_c/2 on c-d1 and c-d2, diagonal
/// +-Delta_RF on d1/d2 plus the one-photon detuning diagonal. Hermitian
/// by construction.
Matrix build_static_hamiltonian(const AtomSystem& sys, const FieldSet& fields);

struct HamiltonianHarmonics {
    Matrix h_minus1, h_zero, h_plus1;
};

/// Time-periodic four-level Hamiltonian H(t) = H_0 + H_{+1} e^{+i nu t}
/// + H_{-1} e^{-i nu t}. H_0 carries optical couplings and detunings,
/// H_{+-1} carry the cosine RF drive with amplitude Omega_c/2 each.
HamiltonianHarmonics build_periodic_hamiltonian(const AtomSystem& sys,
                                                const FieldSet& fields);

} // namespace darkcomb
