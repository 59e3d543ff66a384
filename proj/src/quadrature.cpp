#include "covosc/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace covosc {

void GridSpec::validate() const
{
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi)) {
    throw std::invalid_argument("grid requires finite lo < hi");
  }
  if (count < 2) {
    throw std::invalid_argument("grid requires at least 2 points per axis");
  }
}

QuadratureRule::QuadratureRule(std::vector<double> nodes, std::vector<double> weights,
                               std::vector<double> compensated)
    : nodes_(std::move(nodes)), weights_(std::move(weights)), compensated_(std::move(compensated))
{
  if (nodes_.empty() || nodes_.size() != weights_.size() || nodes_.size() != compensated_.size()) {
    throw std::invalid_argument("quadrature rule arrays must be non-empty and equally sized");
  }
}

namespace {

struct NormalizedPair {
  double value;    // phi_m(x)
  double previous; // phi_{m-1}(x)
};

// phi_m and phi_{m-1} at x (unit-norm oscillator functions, Gaussian included).
NormalizedPair oscillator_pair(std::size_t m, double x)
{
  double previous = 0.0;
  double current = std::exp(-0.5 * x * x) / std::sqrt(std::sqrt(std::numbers::pi));
  for (std::size_t j = 0; j < m; ++j) {
    const double next = x * std::sqrt(2.0 / static_cast<double>(j + 1)) * current
                        - std::sqrt(static_cast<double>(j) / static_cast<double>(j + 1)) * previous;
    previous = current;
    current = next;
  }
  return {current, previous};
}

} // namespace

QuadratureRule gauss_hermite(std::size_t order)
{
  if (order < 1 || order > max_gauss_hermite_order) {
    throw std::invalid_argument("Gauss-Hermite order must lie in [1, " +
                                std::to_string(max_gauss_hermite_order) + "]");
  }
  const auto m = static_cast<Eigen::Index>(order);

  // Jacobi matrix of the monic Hermite recurrence: off-diagonal sqrt(j/2).
  Eigen::VectorXd diagonal = Eigen::VectorXd::Zero(m);
  Eigen::VectorXd sub = Eigen::VectorXd::Zero(std::max<Eigen::Index>(m - 1, 0));
  for (Eigen::Index j = 1; j < m; ++j) {
    sub(j - 1) = std::sqrt(0.5 * static_cast<double>(j));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diagonal, sub, Eigen::EigenvaluesOnly);
  std::vector<double> nodes(solver.eigenvalues().data(), solver.eigenvalues().data() + m);

  // Newton on phi_m(x) = 0, using phi_m' = sqrt(2m) phi_{m-1} - x phi_m.
  for (double& x : nodes) {
    for (int iteration = 0; iteration < 8; ++iteration) {
      const auto [value, previous] = oscillator_pair(order, x);
      const double derivative = std::sqrt(2.0 * static_cast<double>(order)) * previous - x * value;
      const double step = value / derivative;
      x -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(x))) {
        break;
      }
    }
  }
  std::sort(nodes.begin(), nodes.end());
  // Symmetrize so odd integrands cancel exactly.
  for (std::size_t i = 0; i < order / 2; ++i) {
    const double magnitude = 0.5 * (std::abs(nodes[i]) + std::abs(nodes[order - 1 - i]));
    nodes[i] = -magnitude;
    nodes[order - 1 - i] = magnitude;
  }
  if (order % 2 == 1) {
    nodes[order / 2] = 0.0;
  }

  // w_i exp(x_i^2) = 1 / (m phi_{m-1}(x_i)^2).
  std::vector<double> weights(order);
  std::vector<double> compensated(order);
  for (std::size_t i = 0; i < order; ++i) {
    const double previous = oscillator_pair(order, nodes[i]).previous;
    compensated[i] = 1.0 / (static_cast<double>(order) * previous * previous);
    weights[i] = compensated[i] * std::exp(-nodes[i] * nodes[i]);
  }
  return QuadratureRule(std::move(nodes), std::move(weights), std::move(compensated));
}

std::size_t squeeze_aware_order(double eta, std::size_t base)
{
  const double wanted = std::ceil(static_cast<double>(base) * std::cosh(2.0 * eta));
  if (!(wanted <= static_cast<double>(max_gauss_hermite_order))) {
    return max_gauss_hermite_order;
  }
  return static_cast<std::size_t>(wanted);
}

} // namespace covosc
