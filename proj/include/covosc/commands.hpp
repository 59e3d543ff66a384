#pragma once

#include "covosc/oscillator_states.hpp"
#include "covosc/output.hpp"
#include "covosc/verify.hpp"

#include <iosfwd>

namespace covosc {

/// z, t, psi over the grid for the boosted state psi^n_eta.
OutputDocument wavefunction_document(ModeIndex n, Rapidity eta, const GridSpec& zgrid,
                                     const GridSpec& tgrid);

/// k, c_k, cumulative sum of c_k^2; meta carries truncation and tail_bound.
OutputDocument expand_document(ModeIndex n, Rapidity eta, double tol);

/// z, zp, rho_closed, rho_series for the reduced ground-state density.
OutputDocument density_document(Rapidity eta, const GridSpec& zgrid, const GridSpec& zpgrid,
                                double tol);

/// eta, beta, entropy, purity on `steps` evenly spaced rapidities in [0, eta_max].
OutputDocument entropy_curve_document(double eta_max, std::size_t steps);

/// identity, residual, threshold, status for the algebra identities.
OutputDocument algebra_document(const Realization& realization = Realization::standard());

/// Human-readable verification report: one line per check, then the notes.
void print_report(const VerifyReport& report, std::ostream& out);

} // namespace covosc
