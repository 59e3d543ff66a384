#include "covosc/commands.hpp"
#include "covosc/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <sstream>

using namespace covosc;

namespace {

bool any_failed(const std::vector<CheckResult>& results, std::initializer_list<int> ids)
{
  return std::any_of(results.begin(), results.end(), [&](const CheckResult& r) {
    return !r.passed && std::find(ids.begin(), ids.end(), r.id) != ids.end();
  });
}

} // namespace

TEST_CASE("fault names round-trip")
{
  for (Fault fault : all_faults()) {
    CHECK(parse_fault(fault_name(fault)) == fault);
  }
  CHECK(parse_fault("none") == Fault::none);
  CHECK_FALSE(parse_fault("flip-J4").has_value());
  CHECK(all_faults().size() == 9);
}

TEST_CASE("standard realization passes the algebra block")
{
  const Realization r = Realization::standard();
  CHECK(check_lorentz_commutators(r).passed);
  CHECK(check_little_group(r).passed);
  CHECK(check_e2_contraction(r).passed);
  CHECK(check_boost_is_squeeze(r).passed);
}

TEST_CASE("a sign error in K3 fails the algebra block")
{
  const Realization r = Realization::with_fault(Fault::flip_k3);
  CHECK_FALSE(check_lorentz_commutators(r).passed);
  CHECK_FALSE(check_little_group(r).passed);
  CHECK_FALSE(check_boost_is_squeeze(r).passed);
  const auto rows = algebra_identities(r);
  CHECK(std::any_of(rows.begin(), rows.end(), [](const IdentityResult& row) { return !row.passed; }));
}

TEST_CASE("normalization faults are caught by the quadrature checks")
{
  const Realization wave = Realization::with_fault(Fault::wavefunction_norm);
  CHECK_FALSE(check_normalization(wave).passed);
  const Realization coeff = Realization::with_fault(Fault::coefficient_norm);
  CHECK_FALSE(check_completeness(coeff, 1e-10).passed);
  const Realization kernel = Realization::with_fault(Fault::kernel_norm);
  CHECK_FALSE(check_density_triangle(kernel, 1e-10).passed);
  CHECK_FALSE(check_purity(kernel).passed);
}

TEST_CASE("every fault trips some criterion")
{
  for (Fault fault : all_faults()) {
    const Realization r = Realization::with_fault(fault);
    const std::vector<CheckResult> results{
        check_lorentz_commutators(r), check_little_group(r), check_e2_contraction(r),
        check_boost_is_squeeze(r),    check_normalization(r), check_completeness(r, 1e-10),
        check_density_triangle(r, 1e-10), check_purity(r)};
    INFO(fault_name(fault));
    CHECK(any_failed(results, {1, 2, 3, 4, 5, 7, 8, 9}));
  }
}

TEST_CASE("report lists the convention notes and names failing checks")
{
  VerifyOptions options;
  options.fault = Fault::flip_j2;
  const VerifyReport report = run_verification(options);
  CHECK_FALSE(report.all_passed());
  CHECK(report.checks.size() == 11);
  CHECK(report.notes.size() == 5);

  std::ostringstream out;
  print_report(report, out);
  const std::string text = out.str();
  CHECK(text.find("failing check: 1 Lorentz algebra commutators") != std::string::npos);
  CHECK(text.find("note: Tr rho^2 = (1-b^2)/(1+b^2)") != std::string::npos);
  CHECK(text.find("[FAIL]") != std::string::npos);
}
