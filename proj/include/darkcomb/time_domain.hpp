#pragma once

#include "darkcomb/floquet.hpp"

namespace darkcomb {

struct TimeDomainOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int samples_per_period = 128;
    double settle_tol = 1e-7;   // harmonic drift allowed between the last
                                // two periods before the state counts as
                                // settled
    int n_harmonics = 4;        // harmonics to project out
};

/// Independent steady-state oracle: integrates d rho/dt = (L_0 + L_{+1}
/// e^{+i nu t} + L_{-1} e^{-i nu t}) rho from the equal ground mixture
/// until the periodic attractor, then projects one period onto Fourier
/// components. `horizon` must cover at least ten of the slowest decay
/// times; `dt` is the initial step of the adaptive integrator and must
/// resolve the fastest frequency in the generator. Throws FloquetError
/// when the trajectory has not settled.
HarmonicState time_domain_steady_state(const LiouvillianHarmonics& liou,
                                       double nu_rf, double horizon, double dt,
                                       const TimeDomainOptions& opt = {});

} // namespace darkcomb
