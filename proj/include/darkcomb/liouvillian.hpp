#pragma once

#include <vector>

#include "darkcomb/model.hpp"

namespace darkcomb {

/// Fourier components of the Lindblad generator for the time-periodic
/// master equation d rho/dt = (L_0 + L_{+1} e^{+i nu t} + L_{-1}
/// e^{-i nu t}) rho. Superoperators act on column-major vec(rho).
struct LiouvillianHarmonics {
    int dim = 0;            // Hilbert-space dimension
    Matrix l_minus1, l_zero, l_plus1;   // dim^2 x dim^2 each

    int vec_dim() const { return dim * dim; }
};

/// Commutator superoperator -i[H, .] on column-major vec(rho).
Matrix commutator_superop(const Matrix& h);

/// Lindblad dissipator superoperator for a single jump operator.
Matrix dissipator_superop(const Matrix& jump);

/// Full generator: L_n = -i[H_n, .] for n = +-1; L_0 additionally
/// carries radiative decay of |a> with the configured branching, transit
/// relaxation toward the equal ground mixture, and pure dephasing of the
/// ground coherences. In the split-d system the d manifold counts as one
/// physical ground state: decay and transit split evenly over d1/d2 and
/// dephasing acts on the manifold projector, leaving the d1-d2 coherence
/// (a population harmonic of the periodic model) undamped.
LiouvillianHarmonics build_liouvillian(const HamiltonianHarmonics& h,
                                       const AtomSystem& sys);

/// Convenience for the static 5-level model: generator with no periodic
/// blocks (H_{+-1} = 0).
LiouvillianHarmonics build_static_liouvillian(const Matrix& h_static,
                                              const AtomSystem& sys);

/// vec(rho) index of the (row, col) matrix entry.
inline int vec_index(int row, int col, int dim) { return row + col * dim; }

/// Equal-ground-mixture density matrix the transit relaxation targets.
Matrix ground_mixture(const AtomSystem& sys);

} // namespace darkcomb
