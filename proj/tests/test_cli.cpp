#include "cli_runner.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

using cli_runner::run;

TEST_CASE("wavefunction: peak of the rest-frame ground state")
{
  const auto result = run("wavefunction --n 0 --eta 0 --grid \"-3:3:61,-3:3:61\"");
  REQUIRE(result.status == 0);
  std::istringstream lines(result.output);
  std::string line;
  std::getline(lines, line);
  CHECK(line.rfind("# meta ", 0) == 0);
  std::getline(lines, line);
  CHECK(line == "z,t,psi");
  double peak = 0.0;
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    const double psi = std::stod(line.substr(line.rfind(',') + 1));
    peak = std::max(peak, psi);
  }
  CHECK(rows == 61 * 61);
  CHECK(peak == doctest::Approx(1.0 / std::sqrt(std::numbers::pi)).epsilon(1e-15));
}

TEST_CASE("wavefunction: JSON document schema")
{
  const auto result = run("wavefunction --n 2 --beta 0.5 --grid \"-1:1:5,-1:1:3\" --format json");
  REQUIRE(result.status == 0);
  const auto root = nlohmann::json::parse(result.output);
  CHECK(root["meta"]["command"] == "wavefunction");
  CHECK(root["meta"].contains("version"));
  CHECK(root["meta"].contains("parameters"));
  CHECK(root["meta"].contains("tolerances"));
  CHECK(root["meta"]["parameters"]["beta"].get<double>() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(root["data"]["columns"] == nlohmann::json::array({"z", "t", "psi"}));
  CHECK(root["data"]["rows"].size() == 15);
  for (const auto& row : root["data"]["rows"]) {
    CHECK(row.size() == 3);
  }
}

TEST_CASE("expand, density, entropy-curve, algebra run")
{
  const auto rest = run("expand --n 0 --eta 0 --tol 1e-10");
  REQUIRE(rest.status == 0);
  CHECK(rest.output.find("k,c_k,cumulative\n0,1,1\n") != std::string::npos);

  const auto expand = run("expand --n 1 --eta 1 --format json");
  REQUIRE(expand.status == 0);
  const auto root = nlohmann::json::parse(expand.output);
  CHECK(root["data"]["rows"].back()[2].get<double>() >= 1.0 - 1e-10);
  CHECK(root["meta"]["tail_bound"].get<double>() < 1e-10);

  CHECK(run("density --eta 0.5 --grid \"-1:1:3,-1:1:3\"").status == 0);
  const auto curve = run("entropy-curve --eta-max 2 --steps 5 --format json");
  REQUIRE(curve.status == 0);
  const auto curve_root = nlohmann::json::parse(curve.output);
  CHECK(curve_root["data"]["rows"][0][2].get<double>() == 0.0);
  CHECK(curve_root["data"]["rows"][0][3].get<double>() == 1.0);

  const auto algebra = run("algebra");
  REQUIRE(algebra.status == 0);
  CHECK(algebra.output.find("fail") == std::string::npos);
}

TEST_CASE("usage errors exit with status 2")
{
  CHECK(run("").status == 2);
  CHECK(run("bogus").status == 2);
  CHECK(run("wavefunction --n 0 --eta 0 --grid \"-3:3\"").status == 2);
  CHECK(run("wavefunction --n 0 --eta 0 --format xml").status == 2);
  CHECK(run("wavefunction --n 0").status == 2);
  CHECK(run("wavefunction --n 0 --eta 0.1 --beta 0.1").status == 2);
  CHECK(run("wavefunction --n -1 --eta 0").status == 2);
  CHECK(run("expand --n 0 --eta 1 --tol 2").status == 2);
  CHECK(run("expand --n 0 --beta 1.5").status == 2);
  CHECK(run("entropy-curve --eta-max 0").status == 2);
  CHECK(run("verify --inject-fault flip-Q9").status == 2);
}

TEST_CASE("non-convergence is reported")
{
  CHECK(run("expand --n 0 --eta 10 --tol 1e-10").status == 1);
}

TEST_CASE("--out writes the document to a file")
{
  const auto path = std::filesystem::temp_directory_path() / "covosc_cli_test.csv";
  std::filesystem::remove(path);
  const auto result = run("entropy-curve --eta-max 1 --steps 3 --out " + path.string());
  REQUIRE(result.status == 0);
  CHECK(result.output.empty());
  std::ifstream file(path);
  std::stringstream contents;
  contents << file.rdbuf();
  CHECK(contents.str().find("eta,beta,entropy,purity") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("identical flags give byte-identical output")
{
  const std::string args = "wavefunction --n 3 --eta 0.7 --grid \"-2:2:11,-2:2:11\" --format json";
  const auto first = run(args);
  const auto second = run(args);
  REQUIRE(first.status == 0);
  CHECK(first.output == second.output);
}

TEST_CASE("verify: injected faults exit with status 1")
{
  const auto faulty = run("verify --inject-fault flip-K3");
  CHECK(faulty.status == 1);
  CHECK(faulty.output.find("failing check: 1 Lorentz algebra commutators") != std::string::npos);
  CHECK(run("verify --inject-fault kernel-norm").status == 1);
}
