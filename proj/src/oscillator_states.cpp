#include "covosc/oscillator_states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace covosc {

Rapidity::Rapidity(double eta) : eta_(eta)
{
  if (!(std::abs(eta) <= max_abs)) {
    throw std::domain_error("rapidity out of range: " + std::to_string(eta));
  }
}

Rapidity Rapidity::from_beta(double beta)
{
  if (!(std::abs(beta) < 1.0)) {
    throw std::domain_error("velocity must satisfy |beta| < 1");
  }
  return Rapidity(std::atanh(beta));
}

double Rapidity::beta() const
{
  return std::tanh(eta_);
}

LightConePoint to_lightcone(SpacetimePoint p)
{
  using std::numbers::sqrt2;
  return {(p.z + p.t) / sqrt2, (p.z - p.t) / sqrt2};
}

SpacetimePoint from_lightcone(LightConePoint p)
{
  using std::numbers::sqrt2;
  return {(p.u + p.v) / sqrt2, (p.u - p.v) / sqrt2};
}

SpacetimePoint apply_boost(Rapidity eta, SpacetimePoint p)
{
  const double c = std::cosh(eta.eta());
  const double s = std::sinh(eta.eta());
  return {p.z * c + p.t * s, p.z * s + p.t * c};
}

double psi_rest(ModeIndex n, SpacetimePoint p)
{
  return phi(n, p.z) * phi(0, p.t);
}

double psi_boosted(ModeIndex n, Rapidity eta, SpacetimePoint p)
{
  return psi_rest(n, apply_boost(Rapidity(-eta.eta()), p));
}

double psi_boosted_transverse(ModeIndex nx, ModeIndex ny, ModeIndex n, Rapidity eta, double x,
                              double y, SpacetimePoint p)
{
  return phi(nx, x) * phi(ny, y) * psi_boosted(n, eta, p);
}

double oscillator_residual(ModeIndex n, Rapidity eta, const GridSpec& grid)
{
  grid.validate();
  if (grid.count < 3) {
    throw std::invalid_argument("residual grid needs interior points");
  }
  const double h = grid.spacing();
  if (h > max_residual_spacing) {
    throw std::invalid_argument("grid too coarse for the residual check: spacing " +
                                std::to_string(h) + " > " + std::to_string(max_residual_spacing));
  }

  const std::size_t m = grid.count;
  std::vector<double> values(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      values[i * m + j] = psi_boosted(n, eta, {grid.at(i), grid.at(j)});
    }
  }

  const double inv_h2 = 1.0 / (h * h);
  const double eigenvalue = static_cast<double>(n);
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < m; ++i) {
    const double z = grid.at(i);
    for (std::size_t j = 1; j + 1 < m; ++j) {
      const double t = grid.at(j);
      const double centre = values[i * m + j];
      const double d2z = (values[(i + 1) * m + j] - 2.0 * centre + values[(i - 1) * m + j]) * inv_h2;
      const double d2t = (values[i * m + j + 1] - 2.0 * centre + values[i * m + j - 1]) * inv_h2;
      const double applied = 0.5 * ((z * z - t * t) * centre - d2z + d2t);
      worst = std::max(worst, std::abs(applied - eigenvalue * centre));
    }
  }
  return worst;
}

} // namespace covosc
