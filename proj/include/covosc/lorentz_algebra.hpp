#pragma once

#include <Eigen/Dense>

#include <complex>
#include <utility>

namespace covosc {

// Four-vectors are columns ordered (x, y, z, t).
inline constexpr int index_x = 0;
inline constexpr int index_y = 1;
inline constexpr int index_z = 2;
inline constexpr int index_t = 3;

/// Lorentz-algebra element acting on (x, y, z, t).
using GeneratorMatrix = Eigen::Matrix4cd;
using FourVector = Eigen::Vector4d;

/// Finite boost along z.
struct BoostMatrix {
  Eigen::Matrix4d entries;
  double rapidity = 0.0;
};

inline constexpr double max_boost_rapidity = 20.0;

/// diag(1, 1, 1, -1): the form x^2 + y^2 + z^2 - t^2.
Eigen::Matrix4d minkowski_metric();

/// J_i with (J_i)_{jk} = -i eps_{ijk} on the spatial block. Axis is 1, 2 or 3.
GeneratorMatrix rotation_generator(int axis);

/// K_i with +i at (axis, t) and (t, axis), so that exp(-i eta K_3) is the
/// usual cosh/sinh boost.
GeneratorMatrix boost_generator(int axis);

GeneratorMatrix commutator(const GeneratorMatrix& a, const GeneratorMatrix& b);

/// Closed-form boost along z; |eta| <= max_boost_rapidity.
BoostMatrix boost_matrix(double eta);

/// Rotation generator J_axis conjugated by the boost B_3(eta).
GeneratorMatrix little_group_generator(int axis, double eta);

/// E(2)-like generators N1 = K1 - J2 and N2 = K2 + J1.
std::pair<GeneratorMatrix, GeneratorMatrix> e2_generators();

/**
 * Distance of the rescaled little group from its E(2) limit,
 *
 *   || e^{-eta} J'_2 + N1/2 ||_F + || e^{-eta} J'_1 - N2/2 ||_F,
 *
 * which equals 2 e^{-2 eta}. Requires eta >= 0.
 */
double contraction_residual(double eta);

/// exp(A) by scaling and squaring with a Taylor core.
GeneratorMatrix matrix_exp(const GeneratorMatrix& a);

/// Largest absolute entry.
double max_abs(const GeneratorMatrix& a);

} // namespace covosc
