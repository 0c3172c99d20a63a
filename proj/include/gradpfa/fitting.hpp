#pragma once

// Small least-squares helpers shared by the matching, resummation and
// scaling analyses.

#include <functional>
#include <vector>

#include "gradpfa/errors.hpp"

namespace gradpfa {

struct LineFit {
    double intercept = 0.0;
    double slope = 0.0;
    double slope_stderr = 0.0;
    double rms_residual = 0.0;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// least-squares slope of y = c x
double fit_through_origin(const std::vector<double>& x, const std::vector<double>& y);

struct BasisFit {
    std::vector<double> coefficients;
    std::vector<double> stderrs;
    double rms_residual = 0.0;
    double condition = 0.0;
};

// General linear least squares over user basis functions of x.
BasisFit fit_basis(const std::vector<double>& x, const std::vector<double>& y,
                   const std::vector<std::function<double(double)>>& basis);

// Polynomial fit y = sum c_k x^k, returned lowest order first.
BasisFit fit_polynomial(const std::vector<double>& x, const std::vector<double>& y,
                        int degree);

} // namespace gradpfa
