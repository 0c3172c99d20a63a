#pragma once

// Small-k extraction of gamma(d), delta(d) from a perturbative kernel
// G(k; d) and the matching relations against the plate law:
//   U'(d) = mu(d),  U''(d) = 2 gamma(d),  beta(d) = delta(d)/U(d).
// Kernels are external inputs (tables or callables); never derived here.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gradpfa/boundary.hpp"

namespace gradpfa {

class PerturbativeKernel {
public:
    using Evaluator = std::function<double(double k, double d)>;
    using MuFn = std::function<double(double d)>;

    PerturbativeKernel() = default;
    PerturbativeKernel(Evaluator g, MuFn mu) : g_(std::move(g)), mu_(std::move(mu)) {}

    double operator()(double k, double d) const;
    double mu(double d) const;
    bool has_mu() const { return static_cast<bool>(mu_); }

    // CSV with columns k, d, G; rows for the same d form the k-table.
    static PerturbativeKernel from_csv_file(const std::string& path);
    static PerturbativeKernel from_table(std::vector<double> k, std::vector<double> d,
                                         std::vector<double> G);

    // Fixture generator: the scale-free kernel consistent with a plate law,
    //   G(k; d) = U(d)/d^2 [6 + beta (kd)^2 + phi4 (kd)^4 + phi6 (kd)^6],
    // whose small-k data reproduce gamma = U''/2 and delta = beta U.
    static PerturbativeKernel consistent(PlateLaw law, double beta,
                                         double phi4 = 0.0, double phi6 = 0.0);

private:
    Evaluator g_;
    MuFn mu_;
};

struct SmallKResult {
    double gamma = 0.0;
    double gamma_uncertainty = 0.0;
    double delta = 0.0;
    double delta_uncertainty = 0.0;
};

// gamma = G(0; d); delta = k^2 coefficient of a {1, k^2, k^4} fit over
// k in [0, 0.3/d] on 12 nodes, refined by comparing against the half-window
// fit. Non-even sampled kernels are rejected.
SmallKResult kernel_small_k(const PerturbativeKernel& kernel, double d);

struct MatchingReport {
    double residual_mu = 0.0;       // |U' - mu| / |U'|
    double residual_gamma = 0.0;    // |U'' - 2 gamma| / |U''|
    double beta = 0.0;              // delta / U
    SmallKResult small_k;
    bool passed = false;
};

// Residuals above tol raise MatchingViolation naming the failing relation.
MatchingReport matching_check(const PerturbativeKernel& kernel, const PlateLaw& law,
                              double d, double tol = 1e-6);

} // namespace gradpfa
