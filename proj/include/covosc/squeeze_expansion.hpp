#pragma once

#include "covosc/oscillator_states.hpp"

#include <stdexcept>
#include <vector>

namespace covosc {

/**
 * Truncated Fock series of the boosted state
 *
 *   psi^n_eta(z, t) = sum_k c_k phi_{n+k}(z) phi_k(t),
 *   c_k = (cosh eta)^{-(n+1)} sqrt((n+k)! / (n! k!)) (tanh eta)^k.
 *
 * `tail_bound` is the exact missing weight 1 - sum c_k^2.
 */
struct FockCoefficients {
  ModeIndex base_n = 0;
  Rapidity rapidity;
  std::vector<double> coeffs;
  double tail_bound = 0.0;

  /// Index K of the last retained coefficient.
  ModeIndex truncation() const { return static_cast<ModeIndex>(coeffs.size()) - 1; }
};

/// Raised when the series would need more than max_fock_terms terms.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr ModeIndex max_fock_terms = 1'000'000;

/// c_k, evaluated in log space. Negative rapidities give the sign (-1)^k.
double coefficient(ModeIndex n, ModeIndex k, Rapidity eta);

/// Weight beyond index K: 1 - sum_{k<=K} c_k^2, as a regularized incomplete beta.
double fock_tail(ModeIndex n, ModeIndex K, Rapidity eta);

/**
 * Smallest truncation K with 1 - sum_{k<=K} c_k^2 < tol.
 * Throws std::invalid_argument unless 0 < tol < 1, ConvergenceError when K
 * would exceed max_fock_terms.
 */
FockCoefficients expand(ModeIndex n, Rapidity eta, double tol);

/// Truncated sum  sum_k c_k phi_{n+k}(z) phi_k(t).
double reconstruct(const FockCoefficients& coeffs, SpacetimePoint p);

/// Projection of psi^n_eta on phi_zmode(z) phi_tmode(t) by Gauss-Hermite
/// quadrature. Requires zmode + tmode <= 2 * max_overlap_modes.
double overlap_numeric(ModeIndex n, ModeIndex zmode, ModeIndex tmode, Rapidity eta);

inline constexpr ModeIndex max_overlap_modes = 40;

/// <phi_{n+k} phi_k | psi^n_eta>, the quadrature counterpart of coefficient().
/// Requires n + k <= max_overlap_modes.
double overlap_coefficient_numeric(ModeIndex n, ModeIndex k, Rapidity eta);

} // namespace covosc
