#pragma once

// Boundary-condition constants, the parallel-plate energy law and the
// gradient-coefficient algebra with its tilt constraints.

#include <string>
#include <string_view>

#include "gradpfa/errors.hpp"

namespace gradpfa {

// First letter = curved surface, second = flat surface for the mixed pairs.
enum class BoundaryCondition { D, N, DN, ND, EM };

BoundaryCondition parse_boundary(std::string_view name);
std::string to_string(BoundaryCondition bc);

// Exact value of the form a + b/pi^2 with rational a, b, so coefficient
// identities can be checked symbolically instead of against truncated decimals.
struct PiSquareRational {
    long long a_num = 0;
    long long a_den = 1;
    long long b_num = 0;
    long long b_den = 1;

    double value() const;
    PiSquareRational operator+(const PiSquareRational& o) const;
    PiSquareRational operator-(const PiSquareRational& o) const;
    PiSquareRational scaled(long long num, long long den) const;
    bool identical(const PiSquareRational& o) const;
    std::string str() const;
};

// Parallel-plate energy law U(H) = -alpha pi^2 / (1440 H^p), p = 3 throughout.
struct PlateLaw {
    double alpha = 1.0;
    int exponent = 3;

    double energy_per_area(double H) const;    // U(H)
    double d1(double H) const;                 // U'(H)
    double d2(double H) const;                 // U''(H)
};

PlateLaw plate_law(BoundaryCondition bc);
double plate_alpha(BoundaryCondition bc);

// U(H); H > 0 required.
double plate_energy_density(BoundaryCondition bc, double H);

// Gradient coefficient beta for a curved surface facing a flat one.
PiSquareRational beta_exact(BoundaryCondition bc);
double beta_coefficient(BoundaryCondition bc);

// Leading PFA-correction coefficient theta_1 = 2 beta - 1.
PiSquareRational theta1_exact(BoundaryCondition bc);
double theta1_coefficient(BoundaryCondition bc);

struct CoefficientSet {
    double alpha = 0.0;
    double beta1 = 0.0;
    double beta2 = 0.0;
    double beta_cross = 0.0;
    double beta_minus = 0.0;    // vanishes by tilt invariance

    PiSquareRational beta1_exact;
    PiSquareRational beta2_exact;
    PiSquareRational beta_cross_exact;
};

// Coefficients for a pair of curved surfaces. Supported pairs: identical
// D/D, N/N, EM/EM, and the mixed scalar pair (one D, one N); surface i's
// beta is beta_{bc_i, bc_other}. beta_cross = 2 - beta1 - beta2 from the
// tilt constraint at p = 3; the general relation is
// 2(beta1+beta2) + 2 beta_cross - p - 1 = 0.
CoefficientSet coefficient_set(BoundaryCondition curved1, BoundaryCondition curved2);

// Pair selected by a single label: D/N/EM = identical pair, ND or DN = the
// mixed scalar pair (beta1 = beta_DN, beta2 = beta_ND).
CoefficientSet coefficient_set(BoundaryCondition pair_label);

} // namespace gradpfa
