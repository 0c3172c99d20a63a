#pragma once

// Independent sphere-plate reference for the Dirichlet scalar field: the
// Casimir energy from a truncated multipole scattering determinant,
//   E = (1/2pi) Int_0^inf dkappa sum_m w_m ln det(1 - M^m(kappa)),
// with the round-trip operator in the spherical-wave basis, block diagonal
// in the azimuthal index. hbar = c = 1.

#include <vector>

#include "gradpfa/curve.hpp"
#include "gradpfa/errors.hpp"

namespace gradpfa {

struct OracleConfig {
    int ell_max = 40;
    int kappa_nodes = 80;      // Gauss-Legendre count on the mapped interval
    double R = 1.0;
    double d = 1.0;            // surface-to-plate separation

    void validate() const;     // ell_max >= 10, nodes >= 40, R, d > 0
};

// Negative, increasing toward zero with d. Refuses d/R < 0.02 (outside the
// truncation's validity at reasonable ell_max); throws TruncationError when
// the determinant loses positivity.
double oracle_energy_D(const OracleConfig& config);

// E_PFA for the sphere-plate Dirichlet geometry (alpha = 1).
double oracle_pfa_energy(double R, double d);

// Curve of E/E_PFA over a d/R grid with per-point truncation-error bars
// (difference between ell_max and ell_max - 4 runs).
EnergyCurve oracle_curve(const OracleConfig& config_template,
                         const std::vector<double>& d_over_R_grid);

struct AeExtractResult {
    int j0 = 2;
    std::vector<double> coefficients;    // f_1 .. f_m
    std::vector<double> uncertainties;
    int usable = 0;                      // coefficients meeting the 10% gate
};

// Estimates the leading large-distance force coefficients from oracle
// energies at d/R >= ~5: least-squares on the rescaled energy series with
// jackknife uncertainties; coefficients whose uncertainty exceeds 10% are
// withheld (usable marks the count that passed).
AeExtractResult ae_extract(const std::vector<double>& d_over_R,
                           const std::vector<double>& energies_times_R, int j0, int m);

} // namespace gradpfa
