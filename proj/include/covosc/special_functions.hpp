#pragma once

#include <span>

namespace covosc {

/// Oscillator excitation level.
using ModeIndex = unsigned int;

/// Physicists' Hermite polynomial H_n(z) by upward three-term recurrence.
double hermite(ModeIndex n, double z);

/**
 * Unit-norm oscillator eigenfunction
 *
 *   phi_n(z) = (sqrt(pi) 2^n n!)^{-1/2} H_n(z) exp(-z^2/2).
 *
 * Evaluated with the normalized recurrence, so no factorial or power of two
 * is ever formed and the result stays finite for large n.
 */
double phi(ModeIndex n, double z);

/// Fills out[k] = phi_k(z) for k = 0 .. out.size()-1 in a single sweep.
void phi_sequence(double z, std::span<double> out);

/// ln sqrt((n+k)! / (n! k!)), via lgamma.
double log_sqrt_binomial(ModeIndex n, ModeIndex k);

} // namespace covosc
