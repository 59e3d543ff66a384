// Command-line front end: plot-ready data files and the verification suite.
//
// Exit status: 0 success, 1 verification or computation failure, 2 usage error.

#include "covosc/commands.hpp"
#include "covosc/squeeze_expansion.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct CommonOptions {
  int n = 0;
  std::optional<double> eta;
  std::optional<double> beta;
  std::string grid;
  double tol = 1e-10;
  std::string format = "csv";
  std::string out;
};

covosc::Rapidity resolve_rapidity(const CommonOptions& o)
{
  if (o.eta.has_value() == o.beta.has_value()) {
    throw covosc::UsageError("exactly one of --eta or --beta is required");
  }
  try {
    return o.eta ? covosc::Rapidity(*o.eta) : covosc::Rapidity::from_beta(*o.beta);
  } catch (const std::domain_error& e) {
    throw covosc::UsageError(e.what());
  }
}

double checked_tol(double tol)
{
  if (!(tol > 0.0 && tol < 1.0)) {
    throw covosc::UsageError("--tol must satisfy 0 < tol < 1");
  }
  return tol;
}

void add_rapidity(CLI::App* cmd, CommonOptions& o)
{
  auto* eta = cmd->add_option("--eta", o.eta, "Rapidity eta");
  auto* beta = cmd->add_option("--beta", o.beta, "Velocity beta = tanh(eta)");
  eta->excludes(beta);
}

void add_output(CLI::App* cmd, CommonOptions& o)
{
  cmd->add_option("--format", o.format, "Output format: csv or json")->capture_default_str();
  cmd->add_option("--out", o.out, "Output file (default: stdout)");
}

int emit(const covosc::OutputDocument& doc, const CommonOptions& o)
{
  const covosc::Format format = covosc::parse_format(o.format);
  if (o.out.empty()) {
    covosc::write_document(doc, format, std::cout);
    return 0;
  }
  std::ofstream file(o.out);
  if (!file) {
    std::cerr << "error: cannot open " << o.out << " for writing\n";
    return exit_failure;
  }
  covosc::write_document(doc, format, file);
  return file ? 0 : exit_failure;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Covariant oscillator toolkit: squeezed wave functions, Fock expansions, "
               "reduced densities and Lorentz-algebra checks"};
  app.set_version_flag("--version", std::string(covosc::tool_version));
  app.require_subcommand(1);

  CommonOptions o;

  auto* wavefunction = app.add_subcommand("wavefunction", "Tabulate psi^n_eta(z, t) on a grid");
  wavefunction->add_option("--n", o.n, "Excitation level")->check(CLI::NonNegativeNumber);
  add_rapidity(wavefunction, o);
  wavefunction->add_option("--grid", o.grid, "lo:hi:count,lo:hi:count for z and t")
      ->default_str("-4:4:81,-4:4:81");
  add_output(wavefunction, o);

  auto* expand = app.add_subcommand("expand", "Fock coefficients c_k of the boosted state");
  expand->add_option("--n", o.n, "Excitation level")->check(CLI::NonNegativeNumber);
  add_rapidity(expand, o);
  expand->add_option("--tol", o.tol, "Truncation tolerance on 1 - sum c_k^2")->capture_default_str();
  add_output(expand, o);

  auto* density = app.add_subcommand("density", "Reduced ground-state density rho(z, z')");
  add_rapidity(density, o);
  density->add_option("--grid", o.grid, "lo:hi:count,lo:hi:count for z and z'")
      ->default_str("-3:3:61,-3:3:61");
  density->add_option("--tol", o.tol, "Series truncation tolerance")->capture_default_str();
  add_output(density, o);

  double eta_max = 3.0;
  std::size_t steps = 61;
  auto* curve = app.add_subcommand("entropy-curve", "Entropy and purity against rapidity");
  curve->add_option("--eta-max", eta_max, "Largest rapidity")->capture_default_str();
  curve->add_option("--steps", steps, "Number of rapidities")->capture_default_str();
  add_output(curve, o);

  auto* algebra = app.add_subcommand("algebra", "Residuals of the Lorentz / E(2) identities");
  add_output(algebra, o);

  std::string fault = "none";
  bool skip_sweep = false;
  auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
  verify->add_option("--tol", o.tol, "Series truncation tolerance")->capture_default_str();
  verify->add_option("--inject-fault", fault,
                     "Run against a deliberately broken realization (test harness)")
      ->capture_default_str();
  verify->add_flag("--no-mutation-sweep", skip_sweep, "Skip the injected-fault sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  const auto n = static_cast<covosc::ModeIndex>(o.n);
  try {
    if (*wavefunction) {
      const std::string spec = o.grid.empty() ? "-4:4:81,-4:4:81" : o.grid;
      const auto [zgrid, tgrid] = covosc::parse_grid(spec);
      covosc::parse_format(o.format);
      return emit(covosc::wavefunction_document(n, resolve_rapidity(o), zgrid, tgrid), o);
    }
    if (*expand) {
      covosc::parse_format(o.format);
      return emit(covosc::expand_document(n, resolve_rapidity(o), checked_tol(o.tol)), o);
    }
    if (*density) {
      const std::string spec = o.grid.empty() ? "-3:3:61,-3:3:61" : o.grid;
      const auto [zgrid, zpgrid] = covosc::parse_grid(spec);
      covosc::parse_format(o.format);
      return emit(covosc::density_document(resolve_rapidity(o), zgrid, zpgrid, checked_tol(o.tol)), o);
    }
    if (*curve) {
      covosc::parse_format(o.format);
      return emit(covosc::entropy_curve_document(eta_max, steps), o);
    }
    if (*algebra) {
      covosc::parse_format(o.format);
      return emit(covosc::algebra_document(), o);
    }
    if (*verify) {
      const auto parsed = covosc::parse_fault(fault);
      if (!parsed) {
        throw covosc::UsageError("unknown fault '" + fault + "'");
      }
      covosc::VerifyOptions options;
      options.fault = *parsed;
      options.tol = checked_tol(o.tol);
      options.mutation_sweep = !skip_sweep;
      const covosc::VerifyReport report = covosc::run_verification(options);
      covosc::print_report(report, std::cout);
      return report.all_passed() ? 0 : exit_failure;
    }
  } catch (const covosc::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const covosc::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_failure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_usage;
}
