#include "covosc/density_entropy.hpp"

#include "covosc/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace covosc {

FockDistribution::FockDistribution(Rapidity eta) : beta_(eta.beta()) {}

double FockDistribution::probability(ModeIndex k) const
{
  const double q = beta_ * beta_;
  return (1.0 - q) * std::pow(q, static_cast<double>(k));
}

double FockDistribution::tail(ModeIndex K) const
{
  return std::pow(beta_ * beta_, static_cast<double>(K) + 1.0);
}

ModeIndex FockDistribution::truncation(double tol) const
{
  if (!(tol > 0.0 && tol < 1.0)) {
    throw std::invalid_argument("truncation tolerance must satisfy 0 < tol < 1");
  }
  const double q = beta_ * beta_;
  if (q == 0.0) {
    return 0;
  }
  if (q >= 1.0) {
    throw std::domain_error("Fock distribution does not decay at |beta| = 1");
  }
  // beta^{2(K+1)} < tol  <=>  K + 1 > ln(tol) / ln(q)
  auto K = static_cast<ModeIndex>(std::max(0.0, std::ceil(std::log(tol) / std::log(q)) - 1.0));
  while (tail(K) >= tol) {
    ++K;
  }
  while (K > 0 && tail(K - 1) < tol) {
    --K;
  }
  return K;
}

GaussianKernelParams GaussianKernelParams::from(Rapidity eta)
{
  const double c = std::cosh(2.0 * eta.eta());
  return {eta.eta(), 1.0 / std::sqrt(std::numbers::pi * c), 0.25 / c, 0.25 * c};
}

double GaussianKernelParams::operator()(double z, double zp) const
{
  const double sum = z + zp;
  const double diff = z - zp;
  return prefactor * std::exp(-plus_coeff * sum * sum - minus_coeff * diff * diff);
}

double pure_density(Rapidity eta, SpacetimePoint p1, SpacetimePoint p2)
{
  return psi_boosted(0, eta, p1) * psi_boosted(0, eta, p2);
}

double reduced_density_closed(Rapidity eta, double z, double zp)
{
  return GaussianKernelParams::from(eta)(z, zp);
}

double reduced_density_series(Rapidity eta, ModeIndex K, double z, double zp)
{
  std::vector<double> left(K + 1);
  std::vector<double> right(K + 1);
  phi_sequence(z, left);
  phi_sequence(zp, right);
  const double q = eta.beta() * eta.beta();
  double weight = 1.0 - q;
  double sum = 0.0;
  for (ModeIndex k = 0; k <= K; ++k) {
    sum += weight * left[k] * right[k];
    weight *= q;
  }
  return sum;
}

double reduced_density_traced(Rapidity eta, double z, double zp)
{
  // As a function of t the integrand is a Gaussian centred at
  // (z+z') tanh(2eta)/2 with exponent -cosh(2eta) t^2.
  const double twice = 2.0 * eta.eta();
  const AxisMap tmap{0.5 * (z + zp) * std::tanh(twice), 1.0 / std::sqrt(std::cosh(twice))};
  static const QuadratureRule rule = gauss_hermite(32);
  return integrate_1d(
      [&](double t) { return psi_boosted(0, eta, {z, t}) * psi_boosted(0, eta, {zp, t}); }, rule,
      tmap);
}

double purity(Rapidity eta)
{
  const double q = eta.beta() * eta.beta();
  return (1.0 - q) / (1.0 + q);
}

double purity_series(Rapidity eta)
{
  // sum_{k<2^m} x^k = prod_{j<m} (1 + x^{2^j}); stop once x^{2^j} is negligible.
  double power = std::pow(eta.beta(), 4);
  double sum = 1.0;
  while (power > std::numeric_limits<double>::epsilon() * 1e-3) {
    sum *= 1.0 + power;
    power *= power;
  }
  const double one_minus = 1.0 - eta.beta() * eta.beta();
  return one_minus * one_minus * sum;
}

double purity_numeric(Rapidity eta, std::size_t order)
{
  // rho^2 ~ exp(-(z+z')^2 / (2c) - (z-z')^2 c / 2): a squeeze with e^{2s} = c
  // along the light-cone axes of the (z, z') plane.
  const GaussianKernelParams kernel = GaussianKernelParams::from(eta);
  const double stretch = 0.5 * std::log(std::cosh(2.0 * eta.eta()));
  const QuadratureRule rule = gauss_hermite(order);
  return integrate_squeezed(
      [&](double z, double zp) {
        const double value = kernel(z, zp);
        return value * value;
      },
      rule, stretch);
}

double entropy(Rapidity eta)
{
  const double s = std::sinh(std::abs(eta.eta()));
  if (s == 0.0) {
    return 0.0;
  }
  const double s2 = s * s;
  if (s < 1e-8) {
    // (1+x) ln(1+x) - x ln x  ->  x (1 - ln x)  for x = sinh^2 eta -> 0
    return s2 * (1.0 - std::log(s2));
  }
  const double c2 = 1.0 + s2;
  return c2 * std::log1p(s2) - s2 * std::log(s2);
}

double entropy_beta_form(double beta)
{
  if (!(std::abs(beta) < 1.0)) {
    throw std::domain_error("entropy_beta_form requires |beta| < 1");
  }
  const double q = beta * beta;
  if (q == 0.0) {
    return 0.0;
  }
  const double inv = 1.0 / (1.0 - q);
  const double ratio = q * inv;
  return inv * std::log(inv) - ratio * std::log(ratio);
}

double entropy_fock_sum(Rapidity eta)
{
  const double q = eta.beta() * eta.beta();
  if (q == 0.0) {
    return 0.0;
  }
  if (q > 1.0 - 1e-6) {
    throw std::domain_error("entropy_fock_sum: beta too close to 1 for direct summation");
  }
  const double log_q = std::log(q);
  const double log_lead = std::log1p(-q);
  double p = 1.0 - q;
  double sum = 0.0;
  for (ModeIndex k = 0; p > 0.0; ++k) {
    const double term = -p * (log_lead + static_cast<double>(k) * log_q);
    sum += term;
    if (std::abs(term) < 1e-19 * sum) {
      break;
    }
    p *= q;
  }
  return sum;
}

std::vector<double> reduced_density_spectrum(Rapidity eta, std::size_t order)
{
  // Nodes scaled to the diagonal width sqrt(cosh 2eta) of the kernel.
  const QuadratureRule rule = gauss_hermite(order);
  const GaussianKernelParams kernel = GaussianKernelParams::from(eta);
  const double scale = std::sqrt(std::cosh(2.0 * eta.eta()));
  const auto m = static_cast<Eigen::Index>(order);
  Eigen::VectorXd x(m);
  Eigen::VectorXd sqrt_w(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    x(i) = scale * rule.nodes()[static_cast<std::size_t>(i)];
    sqrt_w(i) = std::sqrt(scale * rule.compensated_weights()[static_cast<std::size_t>(i)]);
  }
  Eigen::MatrixXd symmetric(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      symmetric(i, j) = sqrt_w(i) * kernel(x(i), x(j)) * sqrt_w(j);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(symmetric, Eigen::EigenvaluesOnly);
  std::vector<double> values(solver.eigenvalues().data(), solver.eigenvalues().data() + m);
  std::sort(values.begin(), values.end(), std::greater<>());
  return values;
}

} // namespace covosc
