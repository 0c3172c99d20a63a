#pragma once

// Derivative-expansion energy functional for arbitrary profile pairs, plus
// the closed forms for spheres, inclined cylinders and hyperboloids.

#include <optional>

#include "gradpfa/boundary.hpp"
#include "gradpfa/profile.hpp"
#include "gradpfa/quadrature.hpp"

namespace gradpfa {

enum class DomainShape { Disk, Rectangle };

struct IntegrationDomain {
    DomainShape shape = DomainShape::Disk;
    double radius = 0.0;          // disk radius; 0 = auto-size
    double half_x = 0.0;          // rectangle half-extents; 0 = auto-size
    double half_y = 0.0;
    double rel_tol = 1e-8;        // adaptive target
    int order = 8;                // tensor rule order per cell
    bool adaptive = true;
    int fixed_panels = 32;        // panels per axis in non-adaptive mode
    double slope_cap = 0.5;       // warn above this; restricts sphere-like patches
    double tail_cut = 1e-12;      // auto-size: integrand below tail_cut * peak

    static IntegrationDomain disk(double r) {
        IntegrationDomain d;
        d.shape = DomainShape::Disk;
        d.radius = r;
        return d;
    }
    static IntegrationDomain rectangle(double hx, double hy) {
        IntegrationDomain d;
        d.shape = DomainShape::Rectangle;
        d.half_x = hx;
        d.half_y = hy;
        return d;
    }
    static IntegrationDomain auto_sized() { return IntegrationDomain{}; }
};

struct GradientEnergyResult {
    double energy = 0.0;
    double error = 0.0;            // quadrature error estimate
    bool slope_cap_exceeded = false;
    bool converged = true;
    double domain_radius = 0.0;    // the radius/extent actually used
    long evaluations = 0;
};

// Int d^2x U(H) [1 + beta1 |grad H1|^2 + beta2 |grad H2|^2
//                  + beta_cross grad H1 . grad H2],  H = H2 - H1.
// Throws GeometryError on contact (H <= 0 inside the domain).
GradientEnergyResult gradient_energy(const HeightProfile& h1, const HeightProfile& h2,
                                     const CoefficientSet& coeffs, const PlateLaw& law,
                                     const IntegrationDomain& dom);

// Same quadrature with the beta terms switched off (the PFA value of the
// same geometry, so ratios are internally consistent).
GradientEnergyResult pfa_energy(const HeightProfile& h1, const HeightProfile& h2,
                                const PlateLaw& law, const IntegrationDomain& dom);

struct TwoSphereResult {
    double energy = 0.0;       // E_PFA * ratio
    double energy_pfa = 0.0;
    double ratio = 0.0;        // 1 - d/(R1+R2) + (2 beta - 1)(d/R1 + d/R2)
};

// Leading-order two-sphere closed form; R2 = infinity gives sphere-plate.
TwoSphereResult closed_form_two_spheres(double R1, double R2, double d,
                                        BoundaryCondition pair_label);

struct InclinedCylinderResult {
    double energy = 0.0;
    double leading = 0.0;          // -alpha pi^3 sqrt(R1 R2) / (720 d sin theta)
    double correction = 0.0;       // 1 + (beta - 3/8) d/(R1+R2), theta-independent
};

InclinedCylinderResult closed_form_inclined_cylinders(double R1, double R2, double d,
                                                      double theta,
                                                      BoundaryCondition pair_label);

// Coefficient of d/R in the PFA correction for the hyperboloid h(r) =
// sqrt(R^2 + lambda^2 r^2) - R: returns 2 beta + 1/lambda^2.
double hyperboloid_correction(double lambda, BoundaryCondition bc);

// lambda at which the hyperboloid correction vanishes (needs beta < 0).
double hyperboloid_zero_lambda(BoundaryCondition bc);

struct ScalingExponentResult {
    double exponent = 0.0;
    double uncertainty = 0.0;
    std::vector<double> d_over_R;
    std::vector<double> correction;    // E/E_PFA - 1 per sweep point
    double linear_coefficient = 0.0;   // from a theta1-style fit, sign check use
};

// Sweeps d over >= 1.5 decades for a radial profile a2 rho^2 (+ a3 rho^3
// + a4 rho^4), computes E(d)/E_PFA(d) - 1 with E_PFA from the local
// curvature radius, and fits the leading power of the correction.
ScalingExponentResult pfa_scaling_exponent(const RadialPolynomialProfile& shape,
                                           BoundaryCondition pair_label,
                                           double d_min, double d_max, int n_points,
                                           double rel_tol = 1e-8);

} // namespace gradpfa
