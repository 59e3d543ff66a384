#pragma once

#include "covosc/lorentz_algebra.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace covosc {

/// Deliberate defects the verification suite must detect.
enum class Fault {
  none,
  flip_j1,
  flip_j2,
  flip_j3,
  flip_k1,
  flip_k2,
  flip_k3,
  wavefunction_norm,
  coefficient_norm,
  kernel_norm,
};

std::string_view fault_name(Fault fault);
std::optional<Fault> parse_fault(std::string_view name);
/// Every fault except Fault::none.
std::vector<Fault> all_faults();

/**
 * The generators and normalization constants the checks run against. The
 * standard realization is the library's; a faulted one differs in exactly
 * one sign or one constant.
 */
struct Realization {
  std::array<GeneratorMatrix, 3> rotations;
  std::array<GeneratorMatrix, 3> boosts;
  double wavefunction_scale = 1.0;
  double coefficient_scale = 1.0;
  double kernel_scale = 1.0;

  static Realization standard();
  static Realization with_fault(Fault fault);

  const GeneratorMatrix& j(int axis) const { return rotations.at(static_cast<std::size_t>(axis - 1)); }
  const GeneratorMatrix& k(int axis) const { return boosts.at(static_cast<std::size_t>(axis - 1)); }
};

struct CheckResult {
  int id = 0;
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool passed = false;
  std::string detail;
};

/// One named algebraic identity with its residual.
struct IdentityResult {
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool passed = false;
};

/// Commutator table, E(2) relations, little-group closure and contraction rows.
std::vector<IdentityResult> algebra_identities(const Realization& realization);

// Acceptance criteria 1-11, each against the given realization.
CheckResult check_lorentz_commutators(const Realization& r);
CheckResult check_little_group(const Realization& r);
CheckResult check_e2_contraction(const Realization& r);
CheckResult check_boost_is_squeeze(const Realization& r);
CheckResult check_normalization(const Realization& r);
CheckResult check_series_overlaps(const Realization& r);
CheckResult check_completeness(const Realization& r, double tol);
CheckResult check_density_triangle(const Realization& r, double tol);
CheckResult check_purity(const Realization& r);
CheckResult check_entropy(const Realization& r);
CheckResult check_oscillator_equation(const Realization& r);

/// Runs 1-11 on every faulted realization; passes when each fault trips at
/// least one check.
CheckResult check_mutation_sensitivity(double tol);

struct VerifyOptions {
  Fault fault = Fault::none;
  /// Series truncation tolerance used by the completeness and density checks.
  double tol = 1e-10;
  bool mutation_sweep = true;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool all_passed() const;
};

VerifyReport run_verification(const VerifyOptions& options);

/// Convention notes printed alongside the verification report.
std::vector<std::string> convention_notes();

} // namespace covosc
