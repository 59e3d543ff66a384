#include "covosc/commands.hpp"

#include "covosc/density_entropy.hpp"
#include "covosc/squeeze_expansion.hpp"

#include <fmt/format.h>

#include <ostream>

namespace covosc {

namespace {

nlohmann::ordered_json grid_json(const GridSpec& grid)
{
  return {{"lo", grid.lo}, {"hi", grid.hi}, {"count", grid.count}};
}

} // namespace

OutputDocument wavefunction_document(ModeIndex n, Rapidity eta, const GridSpec& zgrid,
                                     const GridSpec& tgrid)
{
  zgrid.validate();
  tgrid.validate();
  OutputDocument doc("wavefunction", {"z", "t", "psi"});
  doc.meta["parameters"] = {{"n", n},
                            {"eta", eta.eta()},
                            {"beta", eta.beta()},
                            {"grid", {grid_json(zgrid), grid_json(tgrid)}}};
  doc.meta["tolerances"] = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < zgrid.count; ++i) {
    for (std::size_t j = 0; j < tgrid.count; ++j) {
      const double z = zgrid.at(i);
      const double t = tgrid.at(j);
      doc.add_row({z, t, psi_boosted(n, eta, {z, t})});
    }
  }
  return doc;
}

OutputDocument expand_document(ModeIndex n, Rapidity eta, double tol)
{
  const FockCoefficients series = expand(n, eta, tol);
  OutputDocument doc("expand", {"k", "c_k", "cumulative"});
  doc.meta["parameters"] = {{"n", n}, {"eta", eta.eta()}, {"beta", eta.beta()}};
  doc.meta["tolerances"] = {{"tol", tol}};
  doc.meta["truncation"] = series.truncation();
  doc.meta["tail_bound"] = series.tail_bound;
  double cumulative = 0.0;
  for (std::size_t k = 0; k < series.coeffs.size(); ++k) {
    const double c = series.coeffs[k];
    cumulative += c * c;
    doc.add_row({static_cast<long long>(k), c, cumulative});
  }
  return doc;
}

OutputDocument density_document(Rapidity eta, const GridSpec& zgrid, const GridSpec& zpgrid,
                                double tol)
{
  zgrid.validate();
  zpgrid.validate();
  const ModeIndex K = FockDistribution(eta).truncation(tol);
  OutputDocument doc("density", {"z", "zp", "rho_closed", "rho_series"});
  doc.meta["parameters"] = {{"eta", eta.eta()},
                            {"beta", eta.beta()},
                            {"grid", {grid_json(zgrid), grid_json(zpgrid)}}};
  doc.meta["tolerances"] = {{"tol", tol}};
  doc.meta["series_truncation"] = K;
  for (std::size_t i = 0; i < zgrid.count; ++i) {
    for (std::size_t j = 0; j < zpgrid.count; ++j) {
      const double z = zgrid.at(i);
      const double zp = zpgrid.at(j);
      doc.add_row({z, zp, reduced_density_closed(eta, z, zp), reduced_density_series(eta, K, z, zp)});
    }
  }
  return doc;
}

OutputDocument entropy_curve_document(double eta_max, std::size_t steps)
{
  if (!(eta_max > 0.0 && eta_max <= Rapidity::max_abs)) {
    throw UsageError("--eta-max must lie in (0, " + format_number(Rapidity::max_abs) + "]");
  }
  if (steps < 2) {
    throw UsageError("--steps must be at least 2");
  }
  OutputDocument doc("entropy-curve", {"eta", "beta", "entropy", "purity"});
  doc.meta["parameters"] = {{"eta_max", eta_max}, {"steps", steps}};
  doc.meta["tolerances"] = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < steps; ++i) {
    const double eta = eta_max * static_cast<double>(i) / static_cast<double>(steps - 1);
    const Rapidity rapidity(eta);
    doc.add_row({eta, rapidity.beta(), entropy(rapidity), purity(rapidity)});
  }
  return doc;
}

OutputDocument algebra_document(const Realization& realization)
{
  OutputDocument doc("algebra", {"identity", "residual", "threshold", "status"});
  doc.meta["parameters"] = nlohmann::ordered_json::object();
  doc.meta["tolerances"] = {{"exact", 1e-12}, {"contraction", "1.05 * 2 exp(-2 eta)"}};
  for (const IdentityResult& row : algebra_identities(realization)) {
    doc.add_row({row.name, row.residual, row.threshold, std::string(row.passed ? "pass" : "fail")});
  }
  return doc;
}

void print_report(const VerifyReport& report, std::ostream& out)
{
  for (const CheckResult& check : report.checks) {
    out << fmt::format("[{}] {:>2} {:<52} residual {:.3e} (threshold {:.1e})  {}\n",
                       check.passed ? "PASS" : "FAIL", check.id, check.name, check.residual,
                       check.threshold, check.detail);
  }
  for (const std::string& note : report.notes) {
    out << "note: " << note << '\n';
  }
  std::size_t failed = 0;
  for (const CheckResult& check : report.checks) {
    if (!check.passed) {
      ++failed;
      out << "failing check: " << check.id << " " << check.name << '\n';
    }
  }
  out << (failed == 0 ? "verify: all checks passed\n"
                      : fmt::format("verify: {} check(s) failed\n", failed));
}

} // namespace covosc
