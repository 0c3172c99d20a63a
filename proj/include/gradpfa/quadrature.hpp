#pragma once

// Quadrature: Gauss rules plus an adaptive 2D integrator for peaked surface
// integrands over rectangles and disks.

#include <functional>
#include <vector>

namespace gradpfa {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;       // absolute error estimate
    long evaluations = 0;
    bool converged = true;
};

// Nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Generalized Gauss-Laguerre unavailable; plain rule, weight e^{-u} on [0, inf).
void gauss_laguerre(int n, std::vector<double>& nodes, std::vector<double>& weights);

using Integrand2D = std::function<double(double, double)>;
using Integrand1D = std::function<double(double)>;

// Adaptive 1D integration on [a, b] (Gauss-Kronrod 15-point panels, bisection).
QuadratureResult integrate_1d(const Integrand1D& f, double a, double b,
                              double rel_tol = 1e-10, double abs_tol = 0.0,
                              int max_panels = 20000);

struct Rect {
    double x0, x1, y0, y1;
};

// Adaptive tensor-product integration of f over the rectangle. Cells are
// refined greedily by estimated error until the total meets the tolerance.
// Deterministic for fixed inputs: tie-breaking and final summation follow
// the cell creation order.
QuadratureResult integrate_rectangle(const Integrand2D& f, const Rect& r,
                                     double rel_tol = 1e-8, int order = 8,
                                     int max_cells = 200000);

// Same driver for a disk of given radius centered at (cx, cy); integrates in
// polar coordinates so the peak at the center is cheap to resolve.
QuadratureResult integrate_disk(const Integrand2D& f, double cx, double cy,
                                double radius, double rel_tol = 1e-8,
                                int order = 8, int max_cells = 200000);

// Non-adaptive tensor Gauss-Legendre over a rectangle with n panels per axis
// and fixed order per panel; exactly reproducible node set for identity tests.
double fixed_grid_rectangle(const Integrand2D& f, const Rect& r,
                            int panels, int order = 8);

} // namespace gradpfa
