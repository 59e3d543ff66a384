#include "covosc/squeeze_expansion.hpp"

#include <boost/math/special_functions/beta.hpp>

#include <cmath>
#include <string>

namespace covosc {

double coefficient(ModeIndex n, ModeIndex k, Rapidity eta)
{
  const double beta = eta.beta();
  if (k == 0) {
    // (1 - beta^2)^{(n+1)/2} = (cosh eta)^{-(n+1)}
    return std::exp(-(static_cast<double>(n) + 1.0) * std::log(std::cosh(eta.eta())));
  }
  if (beta == 0.0) {
    return 0.0;
  }
  const double log_magnitude = -(static_cast<double>(n) + 1.0) * std::log(std::cosh(eta.eta()))
                               + log_sqrt_binomial(n, k)
                               + static_cast<double>(k) * std::log(std::abs(beta));
  const double magnitude = std::exp(log_magnitude);
  return (beta < 0.0 && k % 2 == 1) ? -magnitude : magnitude;
}

double fock_tail(ModeIndex n, ModeIndex K, Rapidity eta)
{
  const double beta = eta.beta();
  if (beta == 0.0) {
    return 0.0;
  }
  // sum_{k>K} C(n+k, k) q^k (1-q)^{n+1} = I_q(K+1, n+1), q = beta^2.
  return boost::math::ibeta(static_cast<double>(K) + 1.0, static_cast<double>(n) + 1.0,
                            beta * beta);
}

FockCoefficients expand(ModeIndex n, Rapidity eta, double tol)
{
  if (!(tol > 0.0 && tol < 1.0)) {
    throw std::invalid_argument("expansion tolerance must satisfy 0 < tol < 1");
  }
  if (fock_tail(n, max_fock_terms - 1, eta) >= tol) {
    throw ConvergenceError("Fock series needs more than " + std::to_string(max_fock_terms) +
                           " terms at beta = " + std::to_string(eta.beta()));
  }
  // The tail is decreasing in K: bisect for the first K below tol.
  ModeIndex lo = 0;
  ModeIndex hi = max_fock_terms - 1;
  if (fock_tail(n, 0, eta) < tol) {
    hi = 0;
  }
  while (hi - lo > 1) {
    const ModeIndex mid = lo + (hi - lo) / 2;
    if (fock_tail(n, mid, eta) < tol) {
      hi = mid;
    } else {
      lo = mid;
    }
  }

  FockCoefficients out;
  out.base_n = n;
  out.rapidity = eta;
  out.coeffs.reserve(hi + 1);
  for (ModeIndex k = 0; k <= hi; ++k) {
    out.coeffs.push_back(coefficient(n, k, eta));
  }
  out.tail_bound = fock_tail(n, hi, eta);
  return out;
}

double reconstruct(const FockCoefficients& coeffs, SpacetimePoint p)
{
  const std::size_t terms = coeffs.coeffs.size();
  std::vector<double> zmodes(coeffs.base_n + terms);
  std::vector<double> tmodes(terms);
  phi_sequence(p.z, zmodes);
  phi_sequence(p.t, tmodes);
  double sum = 0.0;
  for (std::size_t k = 0; k < terms; ++k) {
    sum += coeffs.coeffs[k] * zmodes[coeffs.base_n + k] * tmodes[k];
  }
  return sum;
}

double overlap_numeric(ModeIndex n, ModeIndex zmode, ModeIndex tmode, Rapidity eta)
{
  if (zmode + tmode > 2 * max_overlap_modes || n > 2 * max_overlap_modes) {
    throw std::invalid_argument("overlap modes beyond the quadrature accuracy envelope");
  }
  // Gaussian part of the integrand is exp(-((1+e^{-2eta}) u^2 + (1+e^{2eta}) v^2)/2);
  // scaling each light-cone axis to match exp(-x^2) leaves a polynomial of
  // degree n + zmode + tmode per axis, which the rule integrates exactly.
  const std::size_t order = (n + zmode + tmode) / 2 + 16;
  const QuadratureRule rule = gauss_hermite(std::min(order, max_gauss_hermite_order));
  const double e2 = std::exp(2.0 * eta.eta());
  const AxisMap umap{0.0, std::sqrt(2.0 / (1.0 + 1.0 / e2))};
  const AxisMap vmap{0.0, std::sqrt(2.0 / (1.0 + e2))};
  return integrate_lightcone(
      [&](double z, double t) { return psi_boosted(n, eta, {z, t}) * phi(zmode, z) * phi(tmode, t); },
      rule, umap, vmap);
}

double overlap_coefficient_numeric(ModeIndex n, ModeIndex k, Rapidity eta)
{
  if (n + k > max_overlap_modes) {
    throw std::invalid_argument("overlap_coefficient_numeric requires n + k <= " +
                                std::to_string(max_overlap_modes));
  }
  return overlap_numeric(n, n + k, k, eta);
}

} // namespace covosc
