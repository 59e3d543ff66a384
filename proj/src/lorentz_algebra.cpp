#include "covosc/lorentz_algebra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace covosc {

namespace {

constexpr std::complex<double> I{0.0, 1.0};

void check_axis(int axis)
{
  if (axis < 1 || axis > 3) {
    throw std::invalid_argument("generator axis must be 1, 2 or 3, got " + std::to_string(axis));
  }
}

void check_rapidity(double eta)
{
  if (!(std::abs(eta) <= max_boost_rapidity)) {
    throw std::domain_error("boost rapidity out of range: " + std::to_string(eta));
  }
}

int levi_civita(int i, int j, int k)
{
  // Indices 0, 1, 2.
  return (i - j) * (j - k) * (k - i) / 2;
}

} // namespace

Eigen::Matrix4d minkowski_metric()
{
  return Eigen::Vector4d(1.0, 1.0, 1.0, -1.0).asDiagonal();
}

GeneratorMatrix rotation_generator(int axis)
{
  check_axis(axis);
  GeneratorMatrix j = GeneratorMatrix::Zero();
  const int i = axis - 1;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      j(a, b) = -I * static_cast<double>(levi_civita(i, a, b));
    }
  }
  return j;
}

GeneratorMatrix boost_generator(int axis)
{
  check_axis(axis);
  GeneratorMatrix k = GeneratorMatrix::Zero();
  k(axis - 1, index_t) = I;
  k(index_t, axis - 1) = I;
  return k;
}

GeneratorMatrix commutator(const GeneratorMatrix& a, const GeneratorMatrix& b)
{
  return a * b - b * a;
}

BoostMatrix boost_matrix(double eta)
{
  check_rapidity(eta);
  BoostMatrix boost{Eigen::Matrix4d::Identity(), eta};
  const double c = std::cosh(eta);
  const double s = std::sinh(eta);
  boost.entries(index_z, index_z) = c;
  boost.entries(index_z, index_t) = s;
  boost.entries(index_t, index_z) = s;
  boost.entries(index_t, index_t) = c;
  return boost;
}

GeneratorMatrix little_group_generator(int axis, double eta)
{
  check_axis(axis);
  const GeneratorMatrix forward = boost_matrix(eta).entries.cast<std::complex<double>>();
  const GeneratorMatrix inverse = boost_matrix(-eta).entries.cast<std::complex<double>>();
  return forward * rotation_generator(axis) * inverse;
}

std::pair<GeneratorMatrix, GeneratorMatrix> e2_generators()
{
  return {boost_generator(1) - rotation_generator(2), boost_generator(2) + rotation_generator(1)};
}

double contraction_residual(double eta)
{
  if (!(eta >= 0.0)) {
    throw std::invalid_argument("contraction residual needs eta >= 0");
  }
  const auto [n1, n2] = e2_generators();
  const double shrink = std::exp(-eta);
  const GeneratorMatrix d2 = shrink * little_group_generator(2, eta) + 0.5 * n1;
  const GeneratorMatrix d1 = shrink * little_group_generator(1, eta) - 0.5 * n2;
  return d2.norm() + d1.norm();
}

GeneratorMatrix matrix_exp(const GeneratorMatrix& a)
{
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  }
  const GeneratorMatrix scaled = a / std::ldexp(1.0, squarings);

  // Taylor to degree 18; the remainder is below 0.5^19/19! after scaling.
  GeneratorMatrix result = GeneratorMatrix::Identity();
  GeneratorMatrix term = GeneratorMatrix::Identity();
  for (int k = 1; k <= 18; ++k) {
    term = term * scaled / static_cast<double>(k);
    result += term;
  }
  for (int s = 0; s < squarings; ++s) {
    result = result * result;
  }
  return result;
}

double max_abs(const GeneratorMatrix& a)
{
  return a.cwiseAbs().maxCoeff();
}

} // namespace covosc
