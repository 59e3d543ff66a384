#include "covosc/verify.hpp"

#include "covosc/density_entropy.hpp"
#include "covosc/oscillator_states.hpp"
#include "covosc/quadrature.hpp"
#include "covosc/squeeze_expansion.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <random>

namespace covosc {

namespace {

constexpr std::complex<double> I{0.0, 1.0};

int epsilon(int i, int j, int k)
{
  return (i - j) * (j - k) * (k - i) / 2;
}

// Sum_k eps_{ijk} M_k over 1-based axes.
GeneratorMatrix contract(int i, int j, const std::array<GeneratorMatrix, 3>& m)
{
  GeneratorMatrix out = GeneratorMatrix::Zero();
  for (int k = 1; k <= 3; ++k) {
    out += static_cast<double>(epsilon(i, j, k)) * m[static_cast<std::size_t>(k - 1)];
  }
  return out;
}

struct Boosted {
  std::array<GeneratorMatrix, 3> generators;
  GeneratorMatrix boost;
};

// J'_i = B J_i B^{-1} with B = exp(-i eta K_3) built from the realization.
Boosted boosted_rotations(const Realization& r, double eta)
{
  Boosted out;
  out.boost = matrix_exp(-I * eta * r.k(3));
  const GeneratorMatrix inverse = out.boost.inverse();
  for (int i = 1; i <= 3; ++i) {
    out.generators[static_cast<std::size_t>(i - 1)] = out.boost * r.j(i) * inverse;
  }
  return out;
}

double closure_residual(const std::array<GeneratorMatrix, 3>& m)
{
  double worst = 0.0;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const GeneratorMatrix lhs = commutator(m[static_cast<std::size_t>(i - 1)],
                                             m[static_cast<std::size_t>(j - 1)]);
      worst = std::max(worst, max_abs(lhs - I * contract(i, j, m)));
    }
  }
  return worst;
}

double contraction_of(const Realization& r, double eta)
{
  const Boosted b = boosted_rotations(r, eta);
  const GeneratorMatrix n1 = r.k(1) - r.j(2);
  const GeneratorMatrix n2 = r.k(2) + r.j(1);
  const double shrink = std::exp(-eta);
  return (shrink * b.generators[1] + 0.5 * n1).norm() + (shrink * b.generators[0] - 0.5 * n2).norm();
}

CheckResult make_result(int id, std::string name, double residual, double threshold, bool passed,
                        std::string detail = {})
{
  return {id, std::move(name), residual, threshold, passed, std::move(detail)};
}

constexpr std::array<double, 3> little_group_rapidities{0.5, 1.0, 2.0};
constexpr std::array<double, 3> contraction_rapidities{2.0, 4.0, 6.0};

} // namespace

std::string_view fault_name(Fault fault)
{
  switch (fault) {
  case Fault::none: return "none";
  case Fault::flip_j1: return "flip-J1";
  case Fault::flip_j2: return "flip-J2";
  case Fault::flip_j3: return "flip-J3";
  case Fault::flip_k1: return "flip-K1";
  case Fault::flip_k2: return "flip-K2";
  case Fault::flip_k3: return "flip-K3";
  case Fault::wavefunction_norm: return "wavefunction-norm";
  case Fault::coefficient_norm: return "coefficient-norm";
  case Fault::kernel_norm: return "kernel-norm";
  }
  return "unknown";
}

std::vector<Fault> all_faults()
{
  return {Fault::flip_j1,           Fault::flip_j2,          Fault::flip_j3,
          Fault::flip_k1,           Fault::flip_k2,          Fault::flip_k3,
          Fault::wavefunction_norm, Fault::coefficient_norm, Fault::kernel_norm};
}

std::optional<Fault> parse_fault(std::string_view name)
{
  if (name == "none") {
    return Fault::none;
  }
  for (Fault fault : all_faults()) {
    if (fault_name(fault) == name) {
      return fault;
    }
  }
  return std::nullopt;
}

Realization Realization::standard()
{
  Realization r;
  for (int axis = 1; axis <= 3; ++axis) {
    r.rotations[static_cast<std::size_t>(axis - 1)] = rotation_generator(axis);
    r.boosts[static_cast<std::size_t>(axis - 1)] = boost_generator(axis);
  }
  return r;
}

Realization Realization::with_fault(Fault fault)
{
  Realization r = standard();
  // A normalization fault is a 0.1% error in one constant.
  constexpr double wrong = 1.001;
  switch (fault) {
  case Fault::none: break;
  case Fault::flip_j1: r.rotations[0] = -r.rotations[0]; break;
  case Fault::flip_j2: r.rotations[1] = -r.rotations[1]; break;
  case Fault::flip_j3: r.rotations[2] = -r.rotations[2]; break;
  case Fault::flip_k1: r.boosts[0] = -r.boosts[0]; break;
  case Fault::flip_k2: r.boosts[1] = -r.boosts[1]; break;
  case Fault::flip_k3: r.boosts[2] = -r.boosts[2]; break;
  case Fault::wavefunction_norm: r.wavefunction_scale = wrong; break;
  case Fault::coefficient_norm: r.coefficient_scale = wrong; break;
  case Fault::kernel_norm: r.kernel_scale = wrong; break;
  }
  return r;
}

std::vector<IdentityResult> algebra_identities(const Realization& r)
{
  constexpr double exact = 1e-12;
  std::vector<IdentityResult> rows;
  auto add = [&rows](std::string name, double residual, double threshold) {
    rows.push_back({std::move(name), residual, threshold, residual < threshold});
  };

  constexpr std::array<std::array<int, 3>, 3> cyclic{{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}};
  for (const auto& [i, j, k] : cyclic) {
    add(fmt::format("[J{},J{}] = iJ{}", i, j, k), max_abs(commutator(r.j(i), r.j(j)) - I * r.j(k)), exact);
  }
  for (const auto& [i, j, k] : cyclic) {
    add(fmt::format("[J{},K{}] = iK{}", i, j, k), max_abs(commutator(r.j(i), r.k(j)) - I * r.k(k)), exact);
  }
  for (const auto& [i, j, k] : cyclic) {
    add(fmt::format("[K{},K{}] = -iJ{}", i, j, k), max_abs(commutator(r.k(i), r.k(j)) + I * r.j(k)), exact);
  }

  const GeneratorMatrix n1 = r.k(1) - r.j(2);
  const GeneratorMatrix n2 = r.k(2) + r.j(1);
  add("[N1,N2] = 0", max_abs(commutator(n1, n2)), exact);
  add("[J3,N1] = iN2", max_abs(commutator(r.j(3), n1) - I * n2), exact);
  add("[J3,N2] = -iN1", max_abs(commutator(r.j(3), n2) + I * n1), exact);

  for (double eta : little_group_rapidities) {
    add(fmt::format("little group closure eta={}", eta),
        closure_residual(boosted_rotations(r, eta).generators), exact);
  }
  // The rescaled generators approach the E(2) limit as 2 e^{-2 eta}.
  for (double eta : contraction_rapidities) {
    add(fmt::format("contraction residual eta={}", eta), contraction_of(r, eta),
        1.05 * 2.0 * std::exp(-2.0 * eta));
  }
  return rows;
}

CheckResult check_lorentz_commutators(const Realization& r)
{
  double worst = 0.0;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      worst = std::max(worst, max_abs(commutator(r.j(i), r.j(j)) - I * contract(i, j, r.rotations)));
      worst = std::max(worst, max_abs(commutator(r.j(i), r.k(j)) - I * contract(i, j, r.boosts)));
      worst = std::max(worst, max_abs(commutator(r.k(i), r.k(j)) + I * contract(i, j, r.rotations)));
    }
  }
  constexpr double threshold = 1e-14;
  return make_result(1, "Lorentz algebra commutators", worst, threshold, worst < threshold,
                     "max-abs over all 27 index pairs of [J,J], [J,K], [K,K]");
}

CheckResult check_little_group(const Realization& r)
{
  constexpr double threshold = 1e-12;
  double closure = 0.0;
  double annihilation = 0.0;
  double library = 0.0;
  for (double eta : little_group_rapidities) {
    const Boosted b = boosted_rotations(r, eta);
    closure = std::max(closure, closure_residual(b.generators));
    const Eigen::Vector4cd momentum(0.0, 0.0, std::sinh(eta), std::cosh(eta));
    for (int i = 1; i <= 3; ++i) {
      const auto& generator = b.generators[static_cast<std::size_t>(i - 1)];
      annihilation = std::max(annihilation, (generator * momentum).cwiseAbs().maxCoeff());
      library = std::max(library, max_abs(generator - little_group_generator(i, eta)));
    }
  }
  const double worst = std::max({closure, annihilation, library});
  return make_result(2, "little group O(3) closure and momentum invariance", worst, threshold,
                     worst < threshold,
                     fmt::format("closure {:.3e}, J' p {:.3e}, vs closed-form boost {:.3e}", closure,
                                 annihilation, library));
}

CheckResult check_e2_contraction(const Realization& r)
{
  const GeneratorMatrix n1 = r.k(1) - r.j(2);
  const GeneratorMatrix n2 = r.k(2) + r.j(1);
  const double algebra = std::max({max_abs(commutator(n1, n2)),
                                   max_abs(commutator(r.j(3), n1) - I * n2),
                                   max_abs(commutator(r.j(3), n2) + I * n1)});
  const double r2 = contraction_of(r, 2.0);
  const double r4 = contraction_of(r, 4.0);
  const double r6 = contraction_of(r, 6.0);
  const double expected = std::exp(-4.0);
  const double ratio_error = std::max(std::abs(r4 / r2 / expected - 1.0), std::abs(r6 / r4 / expected - 1.0));
  const bool passed = algebra < 1e-14 && ratio_error < 0.05;
  return make_result(3, "E(2) algebra and contraction rate", ratio_error, 0.05, passed,
                     fmt::format("E(2) commutators {:.3e} (< 1e-14); r(2)={:.6e} r(4)={:.6e} r(6)={:.6e}",
                                 algebra, r2, r4, r6));
}

CheckResult check_boost_is_squeeze(const Realization& r)
{
  constexpr double threshold = 1e-13;
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> coordinate(-1.0, 1.0);
  std::uniform_real_distribution<double> rapidity(-3.0, 3.0);
  double worst = 0.0;
  double convention = 0.0;
  for (int sample = 0; sample < 1000; ++sample) {
    const SpacetimePoint p{coordinate(rng), coordinate(rng)};
    const double eta = rapidity(rng);
    const SpacetimePoint matrix = apply_boost(Rapidity(eta), p);
    const LightConePoint lc = to_lightcone(p);
    const SpacetimePoint squeeze = from_lightcone({std::exp(eta) * lc.u, std::exp(-eta) * lc.v});
    const double scale = std::max({1.0, std::abs(matrix.z), std::abs(matrix.t)});
    worst = std::max(worst, std::max(std::abs(matrix.z - squeeze.z), std::abs(matrix.t - squeeze.t)) / scale);

    const GeneratorMatrix generated = matrix_exp(-I * eta * r.k(3));
    const GeneratorMatrix closed = boost_matrix(eta).entries.cast<std::complex<double>>();
    convention = std::max(convention, max_abs(generated - closed) / std::cosh(eta));
  }
  const double residual = std::max(worst, convention);
  return make_result(4, "boost equals light-cone squeeze", residual, threshold, residual < threshold,
                     fmt::format("squeeze vs matrix {:.3e}, exp(-i eta K3) vs closed form {:.3e} "
                                 "(relative, 1000 points)",
                                 worst, convention));
}

CheckResult check_normalization(const Realization& r)
{
  constexpr double threshold = 1e-8;
  const QuadratureRule rule = gauss_hermite(24);
  const QuadratureRule doubled = gauss_hermite(48);
  double worst = 0.0;
  double monitor = 0.0;
  for (ModeIndex n = 0; n <= 8; ++n) {
    for (double eta : {0.0, 0.5, 1.0, 2.0, 3.0}) {
      const Rapidity rapidity(eta);
      auto density = [&](double z, double t) {
        const double psi = r.wavefunction_scale * psi_boosted(n, rapidity, {z, t});
        return psi * psi;
      };
      const double norm = integrate_squeezed(density, rule, eta);
      worst = std::max(worst, std::abs(norm - 1.0));
      monitor = std::max(monitor, std::abs(norm - integrate_squeezed(density, doubled, eta)));
    }
  }
  return make_result(5, "normalization is boost invariant", worst, threshold,
                     worst < threshold && monitor < 1e-9,
                     fmt::format("n in 0..8, eta in {{0,0.5,1,2,3}}; order-doubling change {:.3e}", monitor));
}

CheckResult check_series_overlaps(const Realization& r)
{
  constexpr double threshold = 1e-8;
  double diagonal = 0.0;
  double cross = 0.0;
  for (double eta : {0.0, 0.5, 1.0, 2.0}) {
    const Rapidity rapidity(eta);
    for (ModeIndex n = 0; n <= 4; ++n) {
      for (ModeIndex k = 0; k <= 10; ++k) {
        for (ModeIndex j = 0; j <= 10; ++j) {
          const double numeric = r.wavefunction_scale * overlap_numeric(n, n + k, j, rapidity);
          if (j == k) {
            const double analytic = r.coefficient_scale * coefficient(n, k, rapidity);
            diagonal = std::max(diagonal, std::abs(numeric - analytic));
          } else {
            cross = std::max(cross, std::abs(numeric));
          }
        }
      }
    }
  }
  const double worst = std::max(diagonal, cross);
  return make_result(6, "Fock coefficients match quadrature overlaps", worst, threshold,
                     worst < threshold,
                     fmt::format("<phi_(n+k) phi_k|psi> vs c_k {:.3e}; j != k projections {:.3e}",
                                 diagonal, cross));
}

CheckResult check_completeness(const Realization& r, double tol)
{
  double worst_total = 0.0;
  bool reached = true;
  bool bound_matches = true;
  std::string mismatch;
  for (double beta : {0.1, 0.3, 0.6, 0.9}) {
    const Rapidity rapidity = Rapidity::from_beta(beta);
    for (ModeIndex n = 0; n <= 4; ++n) {
      const FockCoefficients series = expand(n, rapidity, tol);
      double sum = 0.0;
      for (double c : series.coeffs) {
        const double scaled = r.coefficient_scale * c;
        sum += scaled * scaled;
      }
      reached = reached && sum >= 1.0 - tol && sum <= 1.0 + 1e-12;
      worst_total = std::max(worst_total, std::abs(sum + series.tail_bound - 1.0));
      if (n == 0) {
        const double analytic = std::ceil(std::log(tol) / std::log(beta * beta)) - 1.0;
        if (static_cast<double>(series.truncation()) != analytic) {
          bound_matches = false;
          mismatch += fmt::format(" beta={} K={} expected {};", beta, series.truncation(), analytic);
        }
      }
    }
  }
  const ModeIndex k06 = expand(0, Rapidity::from_beta(0.6), tol).truncation();
  constexpr double threshold = 1e-12;
  const bool passed = reached && bound_matches && worst_total < threshold;
  return make_result(7, "series completeness and truncation", worst_total, threshold, passed,
                     fmt::format("tol {:.1e}; sum c_k^2 reaches 1 - tol: {}; beta=0.6 -> K={}{}", tol,
                                 reached ? "yes" : "no", k06, mismatch));
}

CheckResult check_density_triangle(const Realization& r, double tol)
{
  constexpr double threshold = 1e-7;
  constexpr std::array<double, 5> samples{-1.5, -0.75, 0.0, 0.75, 1.5};
  double worst = 0.0;
  double trace_error = 0.0;
  const QuadratureRule rule = gauss_hermite(32);
  for (double eta : {0.5, 1.0, 2.0}) {
    const Rapidity rapidity(eta);
    const ModeIndex K = FockDistribution(rapidity).truncation(tol);
    for (double z : samples) {
      for (double zp : samples) {
        const double closed = r.kernel_scale * reduced_density_closed(rapidity, z, zp);
        const double series = reduced_density_series(rapidity, K, z, zp);
        const double traced = r.wavefunction_scale * r.wavefunction_scale *
                              reduced_density_traced(rapidity, z, zp);
        worst = std::max({worst, std::abs(closed - series), std::abs(closed - traced),
                          std::abs(series - traced)});
      }
    }
    const double width = std::sqrt(std::cosh(2.0 * eta));
    const double trace = integrate_1d(
        [&](double z) { return r.kernel_scale * reduced_density_closed(rapidity, z, z); }, rule,
        AxisMap{0.0, width});
    trace_error = std::max(trace_error, std::abs(trace - 1.0));
  }
  return make_result(8, "reduced density: closed = series = traced", worst, threshold,
                     worst < threshold && trace_error < 1e-9,
                     fmt::format("25 points x eta in {{0.5,1,2}}; trace error {:.3e} (< 1e-9)", trace_error));
}

CheckResult check_purity(const Realization& r)
{
  constexpr double threshold = 1e-7;
  double worst = 0.0;
  for (double eta : {0.5, 1.0, 2.0}) {
    const Rapidity rapidity(eta);
    const double closed = purity(rapidity);
    const double series = purity_series(rapidity);
    const double numeric = r.kernel_scale * r.kernel_scale * purity_numeric(rapidity);
    worst = std::max({worst, std::abs(closed - series), std::abs(closed - numeric)});
  }
  return make_result(9, "purity (1-b^2)/(1+b^2) vs Tr rho^2 quadrature", worst, threshold,
                     worst < threshold, "eta in {0.5,1,2}");
}

CheckResult check_entropy(const Realization&)
{
  constexpr double threshold = 1e-12;
  double fock = 0.0;
  double beta_form = 0.0;
  for (double eta : {0.5, 1.0, 2.0}) {
    const Rapidity rapidity(eta);
    fock = std::max(fock, std::abs(entropy(rapidity) - entropy_fock_sum(rapidity)));
    beta_form = std::max(beta_form, std::abs(entropy(rapidity) - entropy_beta_form(rapidity.beta())));
  }
  for (double beta : {0.3, 0.6, 0.9}) {
    beta_form = std::max(beta_form, std::abs(entropy_beta_form(beta) - entropy(Rapidity::from_beta(beta))));
  }
  const double at_rest = std::abs(entropy(Rapidity(0.0)));
  const double worst = std::max({fock, beta_form, at_rest});
  return make_result(10, "entropy: closed = Fock sum = beta form", worst, threshold, worst < threshold,
                     fmt::format("Fock sum {:.3e}, beta form {:.3e}, S(0) = {}", fock, beta_form, at_rest));
}

CheckResult check_oscillator_equation(const Realization&)
{
  constexpr double h = 0.02;
  constexpr double scale_constant = 10.0;
  const double threshold = 5.0 * h * h * scale_constant;
  const GridSpec grid{-6.0, 6.0, 601};
  double worst = 0.0;
  for (ModeIndex n = 0; n <= 2; ++n) {
    for (double eta : {0.0, 1.0}) {
      worst = std::max(worst, oscillator_residual(n, Rapidity(eta), grid));
    }
  }
  return make_result(11, "oscillator equation residual (eigenvalue n)", worst, threshold,
                     worst < threshold,
                     fmt::format("h = {}, n in 0..2, eta in {{0,1}}; effective constant {:.3f}", h,
                                 worst / (5.0 * h * h)));
}

namespace {

std::vector<CheckResult> run_criteria(const Realization& r, double tol)
{
  return {check_lorentz_commutators(r), check_little_group(r),     check_e2_contraction(r),
          check_boost_is_squeeze(r),    check_normalization(r),    check_series_overlaps(r),
          check_completeness(r, tol),   check_density_triangle(r, tol), check_purity(r),
          check_entropy(r),             check_oscillator_equation(r)};
}

} // namespace

CheckResult check_mutation_sensitivity(double tol)
{
  std::string detail;
  int missed = 0;
  for (Fault fault : all_faults()) {
    const auto results = run_criteria(Realization::with_fault(fault), tol);
    std::string tripped;
    for (const auto& result : results) {
      if (!result.passed) {
        tripped += (tripped.empty() ? "" : ",") + std::to_string(result.id);
      }
    }
    if (tripped.empty()) {
      ++missed;
      tripped = "none";
    }
    detail += fmt::format("{}: {}; ", fault_name(fault), tripped);
  }
  return make_result(12, "every injected fault is detected", missed, 0.5, missed == 0, detail);
}

bool VerifyReport::all_passed() const
{
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyReport run_verification(const VerifyOptions& options)
{
  VerifyReport report;
  report.checks = run_criteria(Realization::with_fault(options.fault), options.tol);
  if (options.mutation_sweep && options.fault == Fault::none) {
    report.checks.push_back(check_mutation_sensitivity(options.tol));
  }
  report.notes = convention_notes();
  return report;
}

std::vector<std::string> convention_notes()
{
  return {
      "1D eigenfunctions carry the factor (sqrt(pi) 2^n n!)^(-1/2); without sqrt(pi) they "
      "integrate to 1/sqrt(pi) instead of 1.",
      "The Fock series pairs phi_(n+k)(z) with phi_k(t); pairing every term with phi_n(t) is "
      "excluded by the vanishing j != k projections.",
      "Tr rho^2 = (1-b^2)/(1+b^2), the sum of the geometric series; 1/(1+b^2) does not match it.",
      "The beta form of the entropy uses b^2/(1-b^2) in its second term; b/(1-b^2) disagrees "
      "with the rapidity form.",
      "Little-group generators are B J_i B^-1 for each axis i; conjugating J_3 alone would give "
      "a single generator.",
  };
}

} // namespace covosc
