#include "gradpfa/oracle.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "gradpfa/bessel.hpp"
#include "gradpfa/fitting.hpp"
#include "gradpfa/quadrature.hpp"

namespace gradpfa {

namespace {

constexpr double kPi = std::numbers::pi;

// ln det(1 - M(kappa)) summed over azimuthal blocks at one kappa.
//
// Block entries are assembled from the plane-wave representation of the
// image coupling,
//   M^m_{ll'} = sqrt(T_l T_l') * (pi/2) Int_1^inf e^{-x t} Pb_l^m(t) Pb_l'^m(t) dt,
// x = 2 kappa L, T_l = i_l(kappa R)/k_l(kappa R), Pb normalized so the
// integrand is the exact polynomial handled by the Gauss-Laguerre rule
// (t = 1 + u/x). Entries are bounded; the factors are combined in log space.
double kappa_integrand(double kappa, double R, double L, int lmax,
                       const std::vector<double>& lag_u,
                       const std::vector<double>& lag_w) {
    const double x = 2.0 * kappa * L;
    std::vector<double> logT = log_dirichlet_ratio(lmax, kappa * R);

    const int nnodes = static_cast<int>(lag_u.size());
    std::vector<double> tnodes(nnodes), lognode(nnodes);
    for (int i = 0; i < nnodes; ++i) {
        tnodes[i] = 1.0 + lag_u[i] / x;
        // (pi/2) e^{-x}/x * w_i, Laguerre weight carries e^{-u}
        lognode[i] = std::log(kPi / 2.0) - x - std::log(x) + std::log(lag_w[i]);
    }

    double total = 0.0;
    Eigen::MatrixXd V;
    for (int m = 0; m <= lmax; ++m) {
        const int nl = lmax - m + 1;
        V.resize(nl, nnodes);
        // spherical-harmonic normalization sqrt((2l+1)(l-m)!/(l+m)!)
        std::vector<double> lognorm(nl);
        for (int l = m; l <= lmax; ++l) {
            double s = std::log(2.0 * l + 1.0) + std::lgamma(l - m + 1.0) -
                       std::lgamma(l + m + 1.0);
            lognorm[l - m] = 0.5 * s;
        }
        for (int i = 0; i < nnodes; ++i) {
            std::vector<double> logP = log_legendre_pmm_row(m, lmax, tnodes[i]);
            for (int l = m; l <= lmax; ++l) {
                double e = logP[l - m] + lognorm[l - m] + 0.5 * logT[l] +
                           0.5 * lognode[i];
                V(l - m, i) = std::exp(e);
            }
        }
        Eigen::MatrixXd A = Eigen::MatrixXd::Identity(nl, nl);
        A.noalias() -= V * V.transpose();
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
        double logdet = 0.0;
        int sign = 1;
        for (int i = 0; i < nl; ++i) {
            double piv = lu.matrixLU()(i, i);
            if (piv < 0) sign = -sign;
            logdet += std::log(std::abs(piv));
        }
        // permutation sign
        sign *= lu.permutationP().determinant() > 0 ? 1 : -1;
        if (sign <= 0 || !std::isfinite(logdet))
            throw TruncationError(
                "scattering determinant lost positivity; increase ell_max");
        total += (m == 0 ? 1.0 : 2.0) * logdet;
    }
    return total;
}

} // namespace

void OracleConfig::validate() const {
    if (ell_max < 10) throw DomainError("oracle needs ell_max >= 10");
    if (kappa_nodes < 40) throw DomainError("oracle needs >= 40 kappa nodes");
    if (!(R > 0.0) || !(d > 0.0)) throw DomainError("oracle needs R, d > 0");
}

double oracle_energy_D(const OracleConfig& config) {
    config.validate();
    if (config.d / config.R < 0.02)
        throw DomainError(
            "d/R < 0.02 is outside the oracle's validity at desk-scale ell_max");
    const double L = config.R + config.d;
    const double scale = 1.0 / L;

    std::vector<double> gl_x, gl_w;
    gauss_legendre(config.kappa_nodes, gl_x, gl_w);
    std::vector<double> lag_u, lag_w;
    gauss_laguerre(config.ell_max + 2, lag_u, lag_w);

    // kappa = scale * t/(1-t), Gauss-Legendre in t on (0,1); summation order
    // fixed by node order for determinism
    double sum = 0.0, comp = 0.0;
    for (int i = 0; i < config.kappa_nodes; ++i) {
        double t = 0.5 * (gl_x[i] + 1.0);
        double w = 0.5 * gl_w[i];
        double kappa = scale * t / (1.0 - t);
        double jac = scale / ((1.0 - t) * (1.0 - t));
        double v = w * jac *
                   kappa_integrand(kappa, config.R, L, config.ell_max, lag_u, lag_w);
        double y = v - comp;
        double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    return sum / (2.0 * kPi);
}

double oracle_pfa_energy(double R, double d) {
    return -kPi * kPi * kPi * R / (1440.0 * d * d);
}

EnergyCurve oracle_curve(const OracleConfig& config_template,
                         const std::vector<double>& d_over_R_grid) {
    EnergyCurve c;
    c.source = CurveSource::Oracle;
    std::vector<double> grid(d_over_R_grid);
    std::sort(grid.begin(), grid.end());
    for (double x : grid) {
        if (x < 0.02 || x > 50.0)
            throw DomainError("oracle curve grid must lie within [0.02, 50]");
        OracleConfig cfg = config_template;
        cfg.d = x * cfg.R;
        double e = oracle_energy_D(cfg);
        OracleConfig lo = cfg;
        lo.ell_max = std::max(10, cfg.ell_max - 4);
        double e_lo = oracle_energy_D(lo);
        double epfa = oracle_pfa_energy(cfg.R, cfg.d);
        c.d_over_R.push_back(x);
        c.ratio.push_back(e / epfa);
        c.uncertainty.push_back(std::abs(e - e_lo) / std::abs(epfa));
    }
    c.validate();
    return c;
}

AeExtractResult ae_extract(const std::vector<double>& d_over_R,
                           const std::vector<double>& energies_times_R, int j0, int m) {
    const std::size_t n = d_over_R.size();
    if (n != energies_times_R.size() || n < static_cast<std::size_t>(m) + 2)
        throw FitError("ae_extract needs at least m + 2 samples");
    if (m < 1 || m > 4) throw FitError("ae_extract supports 1 <= m <= 4 terms");
    for (double x : d_over_R)
        if (x < 5.0)
            throw DomainError("ae_extract expects samples at d/R >= 5");

    // rescaled energy e(r) = E R = sum_j f_j/(j0+j-1) r^{j0+j-1}, r = R/d
    std::vector<double> rs(n), es(n);
    for (std::size_t i = 0; i < n; ++i) {
        rs[i] = 1.0 / d_over_R[i];
        es[i] = energies_times_R[i];
    }

    auto fit_m = [&](const std::vector<double>& r, const std::vector<double>& e,
                     int terms) {
        std::vector<std::function<double(double)>> basis;
        for (int j = 1; j <= terms; ++j) {
            int p = j0 + j - 1;
            basis.push_back([p](double t) { return std::pow(t, p); });
        }
        BasisFit bf = fit_basis(r, e, basis);
        std::vector<double> f(terms);
        for (int j = 1; j <= terms; ++j)
            f[j - 1] = bf.coefficients[j - 1] * (j0 + j - 1);
        return f;
    };

    std::vector<double> full = fit_m(rs, es, m);
    // jackknife spread
    std::vector<double> maxdev(m, 0.0);
    for (std::size_t drop = 0; drop < n; ++drop) {
        std::vector<double> r2, e2;
        for (std::size_t i = 0; i < n; ++i)
            if (i != drop) {
                r2.push_back(rs[i]);
                e2.push_back(es[i]);
            }
        std::vector<double> f2 = fit_m(r2, e2, m);
        for (int j = 0; j < m; ++j)
            maxdev[j] = std::max(maxdev[j], std::abs(f2[j] - full[j]));
    }

    AeExtractResult out;
    out.j0 = j0;
    out.coefficients = full;
    out.uncertainties = maxdev;
    out.usable = 0;
    for (int j = 0; j < m; ++j) {
        if (maxdev[j] <= 0.10 * std::abs(full[j]))
            ++out.usable;
        else
            break;    // later coefficients are withheld with this one
    }
    return out;
}

} // namespace gradpfa
