#pragma once

// Two-point constrained Pade resummation of the rescaled sphere-plate force
// f(r) = R^2 F / (hbar c), r = R/d: matches n terms of the large-distance
// series at small r and the improved-PFA terms c3 r^3 + c2 r^2 at large r.

#include <optional>
#include <string>
#include <vector>

#include "gradpfa/boundary.hpp"
#include "gradpfa/curve.hpp"

namespace gradpfa {

struct AsymptoticSeries {
    int j0 = 2;                        // 2 for D, 4 for N and EM
    std::vector<double> coefficients;  // f_1 .. f_n at powers r^{j0+j}
    std::string source;

    int n() const { return static_cast<int>(coefficients.size()); }
    void validate() const;             // n >= 1, j0 in {2,4}, (j0+n+5) even
};

AsymptoticSeries series_from_json_file(const std::string& path);
void series_to_json_file(const AsymptoticSeries& ae, const std::string& bc_label,
                         const std::string& path);

struct PadeApproximant {
    int M = 0;
    std::vector<double> p;    // p_0 .. p_M
    std::vector<double> q;    // q_0 = 1, q_1 .. q_{M-3}
    double alpha = 1.0;
    double condition = 0.0;   // condition estimate of the construction system
    double residual = 0.0;    // relative residual of the solved system

    int denominator_degree() const { return static_cast<int>(q.size()) - 1; }
};

// Large-r anchors from the sphere-plate limit of the two-sphere expansion:
//   c3 = -alpha pi^3/720,  c2 = -alpha pi^3 (2 beta - 1)/1440.
double anchor_c3(double alpha);
double anchor_c2(double alpha, double beta);

// Square linear system of size 2M-2 with M = (j0+n+5)/2; long-double solve
// with one step of iterative refinement; construction residual must come out
// <= 1e-10 or NumericalError is thrown.
PadeApproximant build_pade(const AsymptoticSeries& ae, double alpha, double beta);

// One-point diagnostic variant resumming the energy series alone
// ([Mt/Mt-2], Mt = (j0+n+1)/2); kept as the counterexample whose PFA limit
// drifts and whose agreement degrades by orders of magnitude.
PadeApproximant build_energy_pade(const AsymptoticSeries& ae, double alpha, double beta);

// Stabilized rational evaluation (Horner; in 1/r for r > 1).
double eval_force(const PadeApproximant& pa, double r);

// Energy from the force: E(d) R / (hbar c) = Int_0^r f(t)/t^2 dt, derived
// from E(d) = Int_d^inf F dz with t = R/z (checked against the pure-PFA
// integrand in the tests). eval_energy_ratio normalizes by
// E_PFA R = -alpha pi^3 r^2 / 1440.
double eval_energy_rescaled(const PadeApproximant& pa, double r, double rel_tol = 1e-11);
double eval_energy_ratio(const PadeApproximant& pa, double r, double rel_tol = 1e-11);

EnergyCurve energy_curve(const PadeApproximant& pa, const std::vector<double>& d_over_R,
                         double rel_tol = 1e-11);

struct Thetas {
    double theta1 = 0.0;
    double theta2 = 0.0;
    double c3 = 0.0, c2 = 0.0, c1 = 0.0;
};

// Large-r division f = c3 r^3 + c2 r^2 + c1 r + ...;
// theta1 = -1440 c2/(alpha pi^3), theta2 = +1440 c1/(alpha pi^3)
// (the r^1 force term integrates to the (d/R)^2 log(d/R) energy term).
Thetas extract_thetas(const PadeApproximant& pa);

struct PoleInfo {
    double r = 0.0;
    double residue = 0.0;
    double nearest_zero_gap = 0.0;   // distance to the closest numerator zero
    bool defect = false;             // pole-zero pair cancelling to roundoff
};

struct PoleReport {
    std::vector<PoleInfo> roots;     // all real denominator roots in (0, r_max]
    bool clean() const { return roots.empty(); }
    bool genuine_pole_free() const;
};

// All real roots of Q on (0, r_max]. A root whose residue is negligible
// against the local force scale and which sits within ~1e-6 relative of a
// numerator zero is flagged as a defect (exact pole-zero cancellation).
PoleReport pole_check(const PadeApproximant& pa, double r_max);

// Small-r Taylor coefficients of P/Q through r^k (round-trip testing).
std::vector<double> taylor_coefficients(const PadeApproximant& pa, int k);

struct Theta1Fit {
    double theta1 = 0.0;
    double theta2 = 0.0;
    double rms_residual = 0.0;
};

// Least squares of E/E_PFA = 1 + theta1 x + theta2 x^2 log x over a d/R
// range of the curve; needs >= 6 samples in range.
Theta1Fit fit_theta1(const EnergyCurve& curve, double x_min, double x_max);

} // namespace gradpfa
