#include "gradpfa/fitting.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace gradpfa {

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n) throw FitError("line fit needs >= 2 matching samples");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    double den = n * sxx - sx * sx;
    if (std::abs(den) < 1e-300) throw FitError("degenerate abscissae in line fit");
    LineFit f;
    f.slope = (n * sxy - sx * sy) / den;
    f.intercept = (sy - f.slope * sx) / n;
    double ss = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = y[i] - f.intercept - f.slope * x[i];
        ss += r * r;
    }
    f.rms_residual = std::sqrt(ss / n);
    if (n > 2)
        f.slope_stderr = std::sqrt(ss / (n - 2) * n / den);
    return f;
}

double fit_through_origin(const std::vector<double>& x, const std::vector<double>& y) {
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += x[i] * y[i];
        sxx += x[i] * x[i];
    }
    if (sxx <= 0.0) throw FitError("degenerate abscissae");
    return sxy / sxx;
}

BasisFit fit_basis(const std::vector<double>& x, const std::vector<double>& y,
                   const std::vector<std::function<double(double)>>& basis) {
    const std::size_t n = x.size(), m = basis.size();
    if (n < m) throw FitError("fewer samples than basis functions");
    Eigen::MatrixXd A(n, m);
    Eigen::VectorXd b(n);
    for (std::size_t i = 0; i < n; ++i) {
        b(i) = y[i];
        for (std::size_t j = 0; j < m; ++j) A(i, j) = basis[j](x[i]);
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    double smax = svd.singularValues()(0);
    double smin = svd.singularValues()(m - 1);
    if (!(smin > smax * 1e-13))
        throw FitError("rank-deficient design matrix (fit range too narrow)");
    Eigen::VectorXd c = svd.solve(b);
    Eigen::VectorXd r = b - A * c;

    BasisFit out;
    out.condition = smax / smin;
    out.rms_residual = std::sqrt(r.squaredNorm() / n);
    out.coefficients.assign(c.data(), c.data() + m);
    // covariance from (A^T A)^{-1} sigma^2
    double dof = n > m ? static_cast<double>(n - m) : 1.0;
    double sigma2 = r.squaredNorm() / dof;
    Eigen::MatrixXd AtA = A.transpose() * A;
    Eigen::MatrixXd cov = AtA.ldlt().solve(
        Eigen::MatrixXd::Identity(m, m)) * sigma2;
    out.stderrs.resize(m);
    for (std::size_t j = 0; j < m; ++j) out.stderrs[j] = std::sqrt(std::max(0.0, cov(j, j)));
    return out;
}

BasisFit fit_polynomial(const std::vector<double>& x, const std::vector<double>& y,
                        int degree) {
    std::vector<std::function<double(double)>> basis;
    for (int k = 0; k <= degree; ++k)
        basis.push_back([k](double t) { return std::pow(t, k); });
    return fit_basis(x, y, basis);
}

} // namespace gradpfa
