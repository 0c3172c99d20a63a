#include "gradpfa/functional.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gradpfa/fitting.hpp"

namespace gradpfa {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct PairIntegrand {
    const HeightProfile* h1;
    const HeightProfile* h2;
    CoefficientSet coeffs;
    PlateLaw law;
    double slope_cap = 0.5;
    bool use_beta = true;
    mutable bool cap_exceeded = false;

    double operator()(double x, double y) const {
        ProfilePoint a = h1->eval(x, y);
        ProfilePoint b = h2->eval(x, y);
        double H = b.H - a.H;
        if (!(H > 0.0))
            throw GeometryError("surfaces touch or cross inside the integration domain");
        double U = law.energy_per_area(H);
        if (!use_beta) return U;
        double g11 = a.Hx * a.Hx + a.Hy * a.Hy;
        double g22 = b.Hx * b.Hx + b.Hy * b.Hy;
        double g12 = a.Hx * b.Hx + a.Hy * b.Hy;
        if (g11 > slope_cap * slope_cap || g22 > slope_cap * slope_cap)
            cap_exceeded = true;
        return U * (1.0 + coeffs.beta1 * g11 + coeffs.beta2 * g22 +
                    coeffs.beta_cross * g12);
    }
};

// Walk outward along a few rays until |f| drops below tail_cut * peak.
double auto_radius(const PairIntegrand& f, double limit, double tail_cut) {
    double peak = std::abs(f(0.0, 0.0));
    if (!(peak > 0.0)) return std::min(limit, 1.0);
    const double dirs[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    double rmax = 0.0;
    for (const auto& dir : dirs) {
        double gap0 = f.h2->eval(0, 0).H - f.h1->eval(0, 0).H;
        double r = 0.5 * std::sqrt(gap0);   // harmless underestimate to start
        double last = r;
        for (int it = 0; it < 400; ++it) {
            r *= 1.35;
            if (r >= limit) {
                last = limit;
                break;
            }
            double v;
            try {
                v = std::abs(f(r * dir[0], r * dir[1]));
            } catch (const GeometryError&) {
                break;    // profile undefined or crossing: stop at the last good radius
            }
            last = r;
            if (v < tail_cut * peak) break;
        }
        rmax = std::max(rmax, last);
    }
    return std::min(rmax, limit);
}

GradientEnergyResult run_quadrature(const PairIntegrand& f, const IntegrationDomain& dom) {
    double limit = std::min(f.h1->patch_radius(f.slope_cap),
                            f.h2->patch_radius(f.slope_cap));
    GradientEnergyResult out;
    if (dom.shape == DomainShape::Disk) {
        double radius = dom.radius;
        if (radius <= 0.0) radius = auto_radius(f, limit, dom.tail_cut);
        else if (radius > limit) radius = limit;
        out.domain_radius = radius;
        QuadratureResult q;
        if (dom.adaptive) {
            q = integrate_disk([&](double x, double y) { return f(x, y); }, 0.0, 0.0,
                               radius, dom.rel_tol, dom.order);
        } else {
            Rect pr{0.0, radius, 0.0, 2.0 * kPi};
            q.value = fixed_grid_rectangle(
                [&](double rr, double phi) {
                    return rr * f(rr * std::cos(phi), rr * std::sin(phi));
                },
                pr, dom.fixed_panels, dom.order);
        }
        out.energy = q.value;
        out.error = q.error;
        out.converged = q.converged;
        out.evaluations = q.evaluations;
    } else {
        double hx = dom.half_x, hy = dom.half_y;
        if (hx <= 0.0 || hy <= 0.0) {
            double r = auto_radius(f, limit, dom.tail_cut);
            hx = hy = r;
        }
        double cap = std::min(limit, kInf);
        hx = std::min(hx, cap);
        hy = std::min(hy, cap);
        out.domain_radius = std::max(hx, hy);
        Rect r{-hx, hx, -hy, hy};
        QuadratureResult q;
        if (dom.adaptive)
            q = integrate_rectangle([&](double x, double y) { return f(x, y); }, r,
                                    dom.rel_tol, dom.order);
        else
            q.value = fixed_grid_rectangle([&](double x, double y) { return f(x, y); },
                                           r, dom.fixed_panels, dom.order);
        out.energy = q.value;
        out.error = q.error;
        out.converged = q.converged;
        out.evaluations = q.evaluations;
    }
    out.slope_cap_exceeded = f.cap_exceeded;
    return out;
}

} // namespace

GradientEnergyResult gradient_energy(const HeightProfile& h1, const HeightProfile& h2,
                                     const CoefficientSet& coeffs, const PlateLaw& law,
                                     const IntegrationDomain& dom) {
    PairIntegrand f{&h1, &h2, coeffs, law, dom.slope_cap, true, false};
    return run_quadrature(f, dom);
}

GradientEnergyResult pfa_energy(const HeightProfile& h1, const HeightProfile& h2,
                                const PlateLaw& law, const IntegrationDomain& dom) {
    PairIntegrand f{&h1, &h2, CoefficientSet{}, law, dom.slope_cap, false, false};
    return run_quadrature(f, dom);
}

TwoSphereResult closed_form_two_spheres(double R1, double R2, double d,
                                        BoundaryCondition pair_label) {
    if (!(d > 0.0) || !(R1 > 0.0) || !(R2 > 0.0))
        throw DomainError("two-sphere closed form needs d > 0 and positive radii");
    CoefficientSet cs = coefficient_set(pair_label);
    double beta = beta_coefficient(pair_label == BoundaryCondition::DN ||
                                           pair_label == BoundaryCondition::ND
                                       ? pair_label
                                       : pair_label);
    TwoSphereResult out;
    if (std::isinf(R2)) {
        out.energy_pfa = -cs.alpha * kPi * kPi * kPi * R1 / (1440.0 * d * d);
        out.ratio = 1.0 + (2.0 * beta - 1.0) * d / R1;
    } else {
        out.energy_pfa =
            -cs.alpha * kPi * kPi * kPi * R1 * R2 / (1440.0 * d * d * (R1 + R2));
        out.ratio = 1.0 - d / (R1 + R2) + (2.0 * beta - 1.0) * (d / R1 + d / R2);
    }
    out.energy = out.energy_pfa * out.ratio;
    return out;
}

InclinedCylinderResult closed_form_inclined_cylinders(double R1, double R2, double d,
                                                      double theta,
                                                      BoundaryCondition pair_label) {
    if (!(d > 0.0) || !(R1 > 0.0) || !(R2 > 0.0))
        throw DomainError("inclined cylinders need d > 0 and positive radii");
    double s = std::sin(theta);
    if (!(theta > 0.0) || !(theta < kPi) || s < 1e-12)
        throw GeometryError(
            "parallel axes (theta = 0 or pi) are degenerate here; "
            "use the numerical functional for parallel cylinders");
    CoefficientSet cs = coefficient_set(pair_label);
    double beta = beta_coefficient(pair_label);
    InclinedCylinderResult out;
    out.leading = -cs.alpha * kPi * kPi * kPi * std::sqrt(R1 * R2) / (720.0 * d * s);
    out.correction = 1.0 + (beta - 3.0 / 8.0) * d / (R1 + R2);
    out.energy = out.leading * out.correction;
    return out;
}

double hyperboloid_correction(double lambda, BoundaryCondition bc) {
    if (!(lambda > 0.0)) throw DomainError("hyperboloid lambda must be positive");
    return 2.0 * beta_coefficient(bc) + 1.0 / (lambda * lambda);
}

double hyperboloid_zero_lambda(BoundaryCondition bc) {
    double beta = beta_coefficient(bc);
    if (!(beta < 0.0))
        throw DomainError("hyperboloid correction has no zero for beta >= 0");
    return 1.0 / std::sqrt(-2.0 * beta);
}

ScalingExponentResult pfa_scaling_exponent(const RadialPolynomialProfile& shape,
                                           BoundaryCondition pair_label,
                                           double d_min, double d_max, int n_points,
                                           double rel_tol) {
    if (!(shape.a2 > 0.0))
        throw DomainError("scaling sweep needs a positive-definite quadratic term");
    if (!(d_max / d_min >= std::pow(10.0, 1.5)))
        throw DomainError("sweep must span at least 1.5 decades in d");
    if (n_points < 4) throw DomainError("sweep needs at least 4 points");

    CoefficientSet cs = coefficient_set(pair_label);
    PlateLaw law = plate_law(pair_label);
    double Rloc = 1.0 / (2.0 * shape.a2);    // local curvature radius at the tip

    ScalingExponentResult out;
    HeightProfile flat = HeightProfile::flat(0.0);
    for (int i = 0; i < n_points; ++i) {
        double t = static_cast<double>(i) / (n_points - 1);
        double d = d_min * std::pow(d_max / d_min, t);
        HeightProfile prof =
            HeightProfile::radial_polynomial(d, shape.a2, shape.a3, shape.a4);
        IntegrationDomain dom = IntegrationDomain::auto_sized();
        dom.rel_tol = rel_tol;
        dom.slope_cap = 1e9;    // sweep stays within the tip region by auto-sizing
        GradientEnergyResult ge = gradient_energy(flat, prof, cs, law, dom);
        double epfa = -cs.alpha * kPi * kPi * kPi * Rloc / (1440.0 * d * d);
        out.d_over_R.push_back(d / Rloc);
        out.correction.push_back(ge.energy / epfa - 1.0);
    }

    // leading power from a log-log straight-line fit
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < out.correction.size(); ++i) {
        double c = std::abs(out.correction[i]);
        if (c <= 0.0)
            throw FitError("correction vanished during the scaling sweep");
        lx.push_back(std::log(out.d_over_R[i]));
        ly.push_back(std::log(c));
    }
    LineFit lf = fit_line(lx, ly);
    bool monotone = true;
    for (std::size_t i = 1; i < out.correction.size(); ++i)
        if ((out.correction[i] > 0) != (out.correction[0] > 0)) monotone = false;
    if (!monotone || lf.slope_stderr > 0.2)
        throw FitError("correction sweep too noisy for a power-law fit");
    out.exponent = lf.slope;
    out.uncertainty = lf.slope_stderr;

    // companion linear-model fit, used for sign checks of the d/R coefficient
    std::vector<double> bx(out.d_over_R.begin(), out.d_over_R.end());
    out.linear_coefficient = fit_through_origin(bx, out.correction);
    return out;
}

} // namespace gradpfa
