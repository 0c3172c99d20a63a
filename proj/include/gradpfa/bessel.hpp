#pragma once

// Modified spherical Bessel functions in log form, stable from tiny to huge
// arguments, plus associated Legendre functions on (1, inf) with per-node
// exponent tracking. Conventions: i_l(z) = sqrt(pi/2z) I_{l+1/2}(z),
// k_l(z) = sqrt(pi/2z) K_{l+1/2}(z), so k_0(z) = (pi/2) e^{-z}/z.

#include <vector>

namespace gradpfa {

// log i_l(z) for l = 0..lmax (downward ratio recurrence, seeded beyond lmax).
std::vector<double> log_bessel_i(int lmax, double z);

// log k_l(z) for l = 0..lmax (exact finite sum, log-sum-exp).
std::vector<double> log_bessel_k(int lmax, double z);

// log of the Dirichlet sphere reflection ratio i_l/k_l for l = 0..lmax.
std::vector<double> log_dirichlet_ratio(int lmax, double z);

// log |P_l^m(t)| for t > 1 (all positive there), l = m..lmax, one value of t.
// No Condon-Shortley phase.
std::vector<double> log_legendre_pmm_row(int m, int lmax, double t);

} // namespace gradpfa
