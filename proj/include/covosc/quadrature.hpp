#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace covosc {

/// Uniform grid on [lo, hi] with `count` points per axis.
struct GridSpec {
  double lo = -1.0;
  double hi = 1.0;
  std::size_t count = 2;

  /// Throws std::invalid_argument unless lo < hi and count >= 2.
  void validate() const;
  double spacing() const { return (hi - lo) / static_cast<double>(count - 1); }
  double at(std::size_t i) const { return lo + spacing() * static_cast<double>(i); }
};

/// Raised when a quadrature sum produces a non-finite value.
class IntegrationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/**
 * Gauss-Hermite rule for the weight exp(-x^2).
 *
 * Besides the classical weights the rule keeps the weight-compensated
 * values w_i exp(x_i^2), which is what integrate_1d / integrate_2d use, so
 * callers always pass the complete integrand.
 */
class QuadratureRule {
public:
  QuadratureRule(std::vector<double> nodes, std::vector<double> weights,
                 std::vector<double> compensated);

  std::size_t order() const { return nodes_.size(); }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  /// w_i * exp(x_i^2), computed without forming exp(x_i^2).
  const std::vector<double>& compensated_weights() const { return compensated_; }

private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
  std::vector<double> compensated_;
};

inline constexpr std::size_t max_gauss_hermite_order = 200;

/// Golub-Welsch start followed by Newton polishing on the normalized
/// Hermite recurrence. Exact for polynomials of degree <= 2*order - 1.
QuadratureRule gauss_hermite(std::size_t order);

/// Affine change of variable x = center + scale * y along one axis.
struct AxisMap {
  double center = 0.0;
  double scale = 1.0;
};

namespace detail {
inline double checked(double value)
{
  if (!std::isfinite(value)) {
    throw IntegrationError("non-finite value in quadrature sum");
  }
  return value;
}
} // namespace detail

/// Integral of f over the real line, with the rule's nodes mapped through `map`.
template <std::invocable<double> F>
double integrate_1d(F&& f, const QuadratureRule& rule, AxisMap map = {})
{
  const auto& x = rule.nodes();
  const auto& w = rule.compensated_weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sum += w[i] * detail::checked(f(map.center + map.scale * x[i]));
  }
  return detail::checked(map.scale * sum);
}

/// Tensor-product integral of f(x, y) over the plane.
template <std::invocable<double, double> F>
double integrate_2d(F&& f, const QuadratureRule& rule, AxisMap xmap = {}, AxisMap ymap = {})
{
  const auto& x = rule.nodes();
  const auto& w = rule.compensated_weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = xmap.center + xmap.scale * x[i];
    double row = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      row += w[j] * detail::checked(f(xi, ymap.center + ymap.scale * x[j]));
    }
    sum += w[i] * row;
  }
  return detail::checked(xmap.scale * ymap.scale * sum);
}

/**
 * Integral of f(z, t) over the plane, with the nodes laid out along the
 * light-cone axes u = (z+t)/sqrt2, v = (z-t)/sqrt2 and scaled per axis.
 * The (z,t) -> (u,v) rotation has unit Jacobian.
 */
template <std::invocable<double, double> F>
double integrate_lightcone(F&& f, const QuadratureRule& rule, AxisMap umap, AxisMap vmap)
{
  constexpr double inv_sqrt2 = 0.70710678118654752440;
  return integrate_2d(
      [&](double u, double v) { return f(inv_sqrt2 * (u + v), inv_sqrt2 * (u - v)); },
      rule, umap, vmap);
}

/// Light-cone integral with the u axis stretched by e^{eta} and v shrunk by
/// e^{-eta}: the squeeze that carries the rest-frame Gaussian to the boosted one.
template <std::invocable<double, double> F>
double integrate_squeezed(F&& f, const QuadratureRule& rule, double eta)
{
  return integrate_lightcone(std::forward<F>(f), rule, AxisMap{0.0, std::exp(eta)},
                             AxisMap{0.0, std::exp(-eta)});
}

/// Order needed by an unscaled rule to resolve a state squeezed by eta:
/// base * cosh(2 eta), capped at max_gauss_hermite_order.
std::size_t squeeze_aware_order(double eta, std::size_t base = 32);

} // namespace covosc
