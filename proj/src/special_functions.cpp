#include "covosc/special_functions.hpp"

#include <cmath>
#include <numbers>

namespace covosc {

double hermite(ModeIndex n, double z)
{
  double previous = 1.0;
  if (n == 0) {
    return previous;
  }
  double current = 2.0 * z;
  for (ModeIndex m = 1; m < n; ++m) {
    const double next = 2.0 * z * current - 2.0 * m * previous;
    previous = current;
    current = next;
  }
  return current;
}

namespace {

// pi^{-1/4}
const double ground_norm = 1.0 / std::sqrt(std::sqrt(std::numbers::pi));

} // namespace

double phi(ModeIndex n, double z)
{
  double previous = ground_norm * std::exp(-0.5 * z * z);
  if (n == 0) {
    return previous;
  }
  double current = std::numbers::sqrt2 * z * previous;
  for (ModeIndex m = 1; m < n; ++m) {
    const double next = z * std::sqrt(2.0 / (m + 1)) * current
                        - std::sqrt(static_cast<double>(m) / (m + 1)) * previous;
    previous = current;
    current = next;
  }
  return current;
}

void phi_sequence(double z, std::span<double> out)
{
  if (out.empty()) {
    return;
  }
  out[0] = ground_norm * std::exp(-0.5 * z * z);
  if (out.size() == 1) {
    return;
  }
  out[1] = std::numbers::sqrt2 * z * out[0];
  for (std::size_t m = 1; m + 1 < out.size(); ++m) {
    out[m + 1] = z * std::sqrt(2.0 / static_cast<double>(m + 1)) * out[m]
                 - std::sqrt(static_cast<double>(m) / static_cast<double>(m + 1)) * out[m - 1];
  }
}

double log_sqrt_binomial(ModeIndex n, ModeIndex k)
{
  if (n == 0 || k == 0) {
    return 0.0;
  }
  const double nn = n;
  const double kk = k;
  return 0.5 * (std::lgamma(nn + kk + 1.0) - std::lgamma(nn + 1.0) - std::lgamma(kk + 1.0));
}

} // namespace covosc
