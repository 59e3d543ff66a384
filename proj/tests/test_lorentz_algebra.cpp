#include "covosc/lorentz_algebra.hpp"

#include <doctest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <random>

using namespace covosc;

namespace {

constexpr std::complex<double> I{0.0, 1.0};

// Eigen's Pade-based exponential, independent of matrix_exp.
GeneratorMatrix eigen_exp(const GeneratorMatrix& a)
{
  return a.exp();
}

int eps(int i, int j, int k)
{
  return (i - j) * (j - k) * (k - i) / 2;
}

GeneratorMatrix zero()
{
  return GeneratorMatrix::Zero();
}

} // namespace

TEST_CASE("rotation generators: structure")
{
  for (int axis = 1; axis <= 3; ++axis) {
    const GeneratorMatrix j = rotation_generator(axis);
    CHECK(max_abs(j - j.adjoint()) == 0.0);
    CHECK(std::abs(j.trace()) == 0.0);
    CHECK(max_abs(j.real()) == 0.0);
    CHECK(j.row(index_t).cwiseAbs().sum() == 0.0);
    CHECK(j.col(index_t).cwiseAbs().sum() == 0.0);
  }
  const GeneratorMatrix j2 = rotation_generator(2);
  CHECK(j2(index_x, index_z) == I);
  CHECK(j2(index_z, index_x) == -I);
  CHECK((j2.cwiseAbs().sum()) == 2.0);

  const Eigen::Vector4cd rest(0.0, 0.0, 0.0, 1.0);
  CHECK((rotation_generator(3) * rest).norm() == 0.0);
}

TEST_CASE("boost generators: structure")
{
  for (int axis = 1; axis <= 3; ++axis) {
    const GeneratorMatrix k = boost_generator(axis);
    // +i in both symmetric slots makes the finite matrix anti-Hermitian.
    CHECK(max_abs(k + k.adjoint()) == 0.0);
    CHECK(std::abs(k.trace()) == 0.0);
    CHECK(k(axis - 1, index_t) == I);
    CHECK(k(index_t, axis - 1) == I);
    CHECK(k.cwiseAbs().sum() == 2.0);
  }
}

TEST_CASE("generators reject invalid axes")
{
  CHECK_THROWS_AS(rotation_generator(0), std::invalid_argument);
  CHECK_THROWS_AS(rotation_generator(4), std::invalid_argument);
  CHECK_THROWS_AS(boost_generator(-1), std::invalid_argument);
  CHECK_THROWS_AS(little_group_generator(5, 1.0), std::invalid_argument);
}

TEST_CASE("Lorentz commutation relations, all index pairs")
{
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      GeneratorMatrix jj = zero();
      GeneratorMatrix jk = zero();
      for (int k = 1; k <= 3; ++k) {
        jj += static_cast<double>(eps(i, j, k)) * rotation_generator(k);
        jk += static_cast<double>(eps(i, j, k)) * boost_generator(k);
      }
      const auto Ji = rotation_generator(i);
      const auto Jj = rotation_generator(j);
      const auto Ki = boost_generator(i);
      const auto Kj = boost_generator(j);
      CHECK(max_abs(commutator(Ji, Jj) - I * jj) < 1e-14);
      CHECK(max_abs(commutator(Ji, Kj) - I * jk) < 1e-14);
      CHECK(max_abs(commutator(Ki, Kj) + I * jj) < 1e-14);
    }
  }
  CHECK(max_abs(commutator(rotation_generator(1), rotation_generator(2)) - I * rotation_generator(3)) == 0.0);
  CHECK(max_abs(commutator(boost_generator(1), boost_generator(2)) + I * rotation_generator(3)) == 0.0);
  CHECK(max_abs(commutator(rotation_generator(1), boost_generator(2)) - I * boost_generator(3)) == 0.0);
  CHECK(max_abs(commutator(rotation_generator(1), rotation_generator(1))) == 0.0);
}

TEST_CASE("matrix_exp agrees with Eigen's exponential")
{
  std::mt19937 rng(11);
  std::normal_distribution<double> dist(0.0, 1.5);
  for (int sample = 0; sample < 50; ++sample) {
    GeneratorMatrix a;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        a(r, c) = {dist(rng), dist(rng)};
      }
    }
    const GeneratorMatrix expected = eigen_exp(a);
    CHECK(max_abs(matrix_exp(a) - expected) <= 1e-12 * std::max(1.0, max_abs(expected)));
  }
  CHECK(max_abs(matrix_exp(zero()) - GeneratorMatrix::Identity()) == 0.0);
}

TEST_CASE("exp(-i eta K3) is the closed-form boost")
{
  const GeneratorMatrix generated = eigen_exp(-I * 1.0 * boost_generator(3));
  CHECK(generated(index_z, index_z).real() == doctest::Approx(std::cosh(1.0)).epsilon(1e-14));
  CHECK(generated(index_z, index_t).real() == doctest::Approx(std::sinh(1.0)).epsilon(1e-14));
  CHECK(generated(index_t, index_z).real() == doctest::Approx(std::sinh(1.0)).epsilon(1e-14));
  CHECK(generated(index_t, index_t).real() == doctest::Approx(std::cosh(1.0)).epsilon(1e-14));
  for (double eta : {-4.0, -0.3, 0.0, 1.0, 2.5, 7.0}) {
    const GeneratorMatrix closed = boost_matrix(eta).entries.cast<std::complex<double>>();
    CHECK(max_abs(eigen_exp(-I * eta * boost_generator(3)) - closed) < 1e-13 * std::cosh(eta));
    CHECK(max_abs(matrix_exp(-I * eta * boost_generator(3)) - closed) < 1e-13 * std::cosh(eta));
  }
}

TEST_CASE("boost_matrix: values and invariants")
{
  CHECK(boost_matrix(0.0).entries == Eigen::Matrix4d::Identity());
  const FourVector boosted = boost_matrix(1.0).entries * FourVector(0.0, 0.0, 1.0, 0.0);
  CHECK(boosted(index_z) == doctest::Approx(std::cosh(1.0)));
  CHECK(boosted(index_t) == doctest::Approx(std::sinh(1.0)));
  CHECK(boosted(index_x) == 0.0);

  const Eigen::Matrix4d g = minkowski_metric();
  for (double eta : {-3.0, 0.4, 2.5}) {
    const Eigen::Matrix4d b = boost_matrix(eta).entries;
    CHECK((b.transpose() * g * b - g).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((b * boost_matrix(-eta).entries - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-12);
  }
  CHECK(boost_matrix(2.0).rapidity == 2.0);
  CHECK_THROWS_AS(boost_matrix(20.5), std::domain_error);
  CHECK_NOTHROW(boost_matrix(-20.0));
}

TEST_CASE("boost_matrix: one-parameter group law")
{
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int sample = 0; sample < 100; ++sample) {
    const double a = dist(rng);
    const double b = dist(rng);
    const Eigen::Matrix4d product = boost_matrix(a).entries * boost_matrix(b).entries;
    CHECK((product - boost_matrix(a + b).entries).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("little group generators")
{
  for (double eta : {0.0, 0.9, 3.0}) {
    CHECK(max_abs(little_group_generator(3, eta) - rotation_generator(3)) < 1e-15);
  }
  const double eta = 1.7;
  const auto j1 = little_group_generator(1, eta);
  const auto j2 = little_group_generator(2, eta);
  const auto j3 = little_group_generator(3, eta);
  CHECK(max_abs(commutator(j1, j2) - I * j3) < 1e-12);
  CHECK(max_abs(commutator(j2, j3) - I * j1) < 1e-12);
  CHECK(max_abs(commutator(j3, j1) - I * j2) < 1e-12);

  // Hand conjugation of J2.
  const double c = std::cosh(eta);
  const double s = std::sinh(eta);
  GeneratorMatrix expected = zero();
  expected(index_x, index_z) = I * c;
  expected(index_x, index_t) = -I * s;
  expected(index_z, index_x) = -I * c;
  expected(index_t, index_x) = -I * s;
  CHECK(max_abs(j2 - expected) < 1e-14);

  // Same thing through the exponential oracle.
  const GeneratorMatrix b = eigen_exp(-I * eta * boost_generator(3));
  CHECK(max_abs(b * rotation_generator(2) * b.inverse() - j2) < 1e-13);
}

TEST_CASE("little group leaves the boosted momentum invariant")
{
  for (double eta : {-2.0, 0.5, 1.0, 2.0, 5.0}) {
    const Eigen::Vector4cd momentum(0.0, 0.0, std::sinh(eta), std::cosh(eta));
    for (int axis = 1; axis <= 3; ++axis) {
      CHECK((little_group_generator(axis, eta) * momentum).cwiseAbs().maxCoeff() <
            1e-12 * std::cosh(eta) * std::cosh(eta));
    }
  }
}

TEST_CASE("E(2) generators")
{
  const auto [n1, n2] = e2_generators();
  const auto j3 = rotation_generator(3);
  CHECK(max_abs(n1 - (boost_generator(1) - rotation_generator(2))) == 0.0);
  CHECK(max_abs(commutator(n1, n2)) < 1e-14);
  CHECK(max_abs(commutator(j3, n1) - I * n2) < 1e-14);
  CHECK(max_abs(commutator(j3, n2) + I * n1) < 1e-14);

  // {J3, N1, N2} closes: every commutator is a combination of the three.
  CHECK(max_abs(commutator(n1, j3) + I * n2) < 1e-14);
  CHECK(max_abs(commutator(n2, j3) - I * n1) < 1e-14);
}

TEST_CASE("contraction limit coefficients come out of the matrices")
{
  // Fit e^{-eta} J'_2 -> a N1 and e^{-eta} J'_1 -> b N2 at large eta before trusting -1/2, +1/2.
  const auto [n1, n2] = e2_generators();
  const double eta = 18.0;
  const GeneratorMatrix lim2 = std::exp(-eta) * little_group_generator(2, eta);
  const GeneratorMatrix lim1 = std::exp(-eta) * little_group_generator(1, eta);
  const std::complex<double> a = (n1.adjoint() * lim2).trace() / (n1.adjoint() * n1).trace();
  const std::complex<double> b = (n2.adjoint() * lim1).trace() / (n2.adjoint() * n2).trace();
  CHECK(a.real() == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(b.real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(a.imag()) < 1e-14);
  CHECK(std::abs(b.imag()) < 1e-14);
}

TEST_CASE("contraction_residual")
{
  CHECK(contraction_residual(0.0) > 0.1);
  CHECK(std::isfinite(contraction_residual(0.0)));
  for (double eta : {2.0, 4.0, 6.0}) {
    CHECK(contraction_residual(eta) <= 2.0 * (1.0 + 1e-9) * std::exp(-2.0 * eta));
    CHECK(contraction_residual(eta) == doctest::Approx(2.0 * std::exp(-2.0 * eta)).epsilon(1e-9));
  }
  CHECK(contraction_residual(10.0) < 1e-8);
  CHECK_THROWS_AS(contraction_residual(-1.0), std::invalid_argument);
}
