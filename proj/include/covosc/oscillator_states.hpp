#pragma once

#include "covosc/quadrature.hpp"
#include "covosc/special_functions.hpp"

namespace covosc {

/// Boost parameter eta, with velocity beta = tanh(eta).
class Rapidity {
public:
  /// Largest |eta| for which squeezed Gaussians stay resolvable in double precision.
  static constexpr double max_abs = 10.0;

  Rapidity() = default;
  /// Throws std::domain_error if |eta| > max_abs or eta is not finite.
  explicit Rapidity(double eta);
  /// Throws std::domain_error unless |beta| < 1 and the rapidity is in range.
  static Rapidity from_beta(double beta);

  double eta() const { return eta_; }
  double beta() const;

private:
  double eta_ = 0.0;
};

/// Longitudinal and time-like separation of the constituents.
struct SpacetimePoint {
  double z = 0.0;
  double t = 0.0;
};

struct LightConePoint {
  double u = 0.0;
  double v = 0.0;
};

LightConePoint to_lightcone(SpacetimePoint p);
SpacetimePoint from_lightcone(LightConePoint p);

/// (z cosh + t sinh, z sinh + t cosh); multiplies u by e^{eta} and v by e^{-eta}.
SpacetimePoint apply_boost(Rapidity eta, SpacetimePoint p);

/// phi_n(z) phi_0(t): excited along z, ground state in t.
double psi_rest(ModeIndex n, SpacetimePoint p);

/// Rest-frame state seen from a frame moving with rapidity eta: psi_rest
/// evaluated at the point boosted by -eta.
double psi_boosted(ModeIndex n, Rapidity eta, SpacetimePoint p);

/// psi_boosted times the transverse spectators phi_nx(x) phi_ny(y).
double psi_boosted_transverse(ModeIndex nx, ModeIndex ny, ModeIndex n, Rapidity eta, double x,
                              double y, SpacetimePoint p);

/// Largest grid spacing accepted by oscillator_residual.
inline constexpr double max_residual_spacing = 0.05;

/**
 * Finite-difference check of the (z,t) oscillator equation
 *
 *   1/2 { (z^2 - t^2) - d^2/dz^2 + d^2/dt^2 } psi = n psi
 *
 * on the square grid `grid` x `grid`. Returns the largest |Op psi - n psi|
 * over interior points. Throws std::invalid_argument if the spacing exceeds
 * max_residual_spacing.
 */
double oscillator_residual(ModeIndex n, Rapidity eta, const GridSpec& grid);

} // namespace covosc
