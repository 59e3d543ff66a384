#pragma once

#include "covosc/oscillator_states.hpp"

#include <vector>

namespace covosc {

/// Eigenvalues p_k = (1 - beta^2) beta^{2k} of the reduced ground-state density.
class FockDistribution {
public:
  explicit FockDistribution(Rapidity eta);

  double beta() const { return beta_; }
  double probability(ModeIndex k) const;
  /// Exact weight beyond index K: beta^{2(K+1)}.
  double tail(ModeIndex K) const;
  /// Smallest K whose tail is below tol.
  ModeIndex truncation(double tol) const;

private:
  double beta_;
};

/// Closed Gaussian form of the reduced density kernel
///   prefactor * exp(-plus_coeff (z+z')^2 - minus_coeff (z-z')^2).
struct GaussianKernelParams {
  double eta = 0.0;
  double prefactor = 0.0;   // (pi cosh 2eta)^{-1/2}
  double plus_coeff = 0.0;  // 1 / (4 cosh 2eta)
  double minus_coeff = 0.0; // cosh(2eta) / 4

  static GaussianKernelParams from(Rapidity eta);
  double operator()(double z, double zp) const;
};

/// psi_eta(p1) psi_eta(p2) for the boosted ground state.
double pure_density(Rapidity eta, SpacetimePoint p1, SpacetimePoint p2);

/// Ground-state density with the time separation traced out, closed form.
double reduced_density_closed(Rapidity eta, double z, double zp);

/// (1 - beta^2) sum_{k<=K} beta^{2k} phi_k(z) phi_k(z').
double reduced_density_series(Rapidity eta, ModeIndex K, double z, double zp);

/// The defining integral  int psi_eta(z,t) psi_eta(z',t) dt  by Gauss-Hermite.
double reduced_density_traced(Rapidity eta, double z, double zp);

/// Tr rho^2 = (1 - beta^2) / (1 + beta^2).
double purity(Rapidity eta);

/// (1 - beta^2)^2 sum_k beta^{4k}, summed until the terms vanish.
double purity_series(Rapidity eta);

/// int int rho(z,z')^2 dz dz' over the closed kernel, squeeze-aware quadrature.
double purity_numeric(Rapidity eta, std::size_t order = 64);

/// von Neumann entropy 2[cosh^2 ln cosh - sinh^2 ln sinh] of the reduced density.
double entropy(Rapidity eta);

/// The same entropy written with beta:
///   1/(1-b^2) ln 1/(1-b^2) - b^2/(1-b^2) ln b^2/(1-b^2).
double entropy_beta_form(double beta);

/// -sum_k p_k ln p_k over the Fock eigenvalues. Direct summation, so beta^2
/// must stay below 1 - 1e-6 (std::domain_error otherwise).
double entropy_fock_sum(Rapidity eta);

/**
 * Eigenvalues of the reduced kernel discretized on a Gauss-Hermite grid,
 * sorted in decreasing order. Cross-check for the Fock spectrum p_k; the
 * leading few eigenvalues converge quickly with the order.
 */
std::vector<double> reduced_density_spectrum(Rapidity eta, std::size_t order);

} // namespace covosc
