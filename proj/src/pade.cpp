#include "gradpfa/pade.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <numbers>

#include "gradpfa/fitting.hpp"
#include "gradpfa/quadrature.hpp"
#include "json.hpp"

namespace gradpfa {

namespace {
constexpr double kPi = std::numbers::pi;
using LD = long double;
}

void AsymptoticSeries::validate() const {
    if (coefficients.empty()) throw DomainError("asymptotic series needs n >= 1 terms");
    if (j0 != 2 && j0 != 4)
        throw DomainError("leading offset j0 must be 2 (D) or 4 (N, EM)");
    if ((j0 + n() + 5) % 2 != 0)
        throw DomainError("j0 + n + 5 must be even so the numerator degree is integral");
    for (double c : coefficients)
        if (!std::isfinite(c)) throw DomainError("non-finite series coefficient");
}

AsymptoticSeries series_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open series fixture " + path);
    nlohmann::json j;
    in >> j;
    AsymptoticSeries ae;
    ae.j0 = j.at("j0").get<int>();
    ae.coefficients = j.at("coefficients").get<std::vector<double>>();
    ae.source = j.value("source", "");
    ae.validate();
    return ae;
}

void series_to_json_file(const AsymptoticSeries& ae, const std::string& bc_label,
                         const std::string& path) {
    ae.validate();
    nlohmann::json j;
    j["bc"] = bc_label;
    j["j0"] = ae.j0;
    j["coefficients"] = ae.coefficients;
    j["source"] = ae.source;
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write series fixture " + path);
    out << j.dump(1) << "\n";
}

double anchor_c3(double alpha) { return -alpha * kPi * kPi * kPi / 720.0; }

double anchor_c2(double alpha, double beta) {
    return -alpha * kPi * kPi * kPi * (2.0 * beta - 1.0) / 1440.0;
}

namespace {

// Assemble and solve the constrained-Pade linear system.
//   unknowns: p_0..p_M, q_1..q_nd
//   small-r rows: [P - T Q]_ell = 0 for ell = 0..n_small-1
//   large-r rows: [P - (a3 r^3 + a2 r^2) Q]_ell = 0 for requested ell
PadeApproximant solve_system(int M, int nd, const std::vector<double>& T,
                             int n_small, const std::vector<int>& large_rows,
                             double a3, double a2, double alpha) {
    const int N = (M + 1) + nd;
    if (n_small + static_cast<int>(large_rows.size()) != N)
        throw NumericalError("pade system is not square");

    Eigen::Matrix<LD, Eigen::Dynamic, Eigen::Dynamic> A(N, N);
    Eigen::Matrix<LD, Eigen::Dynamic, 1> b(N);
    A.setZero();
    b.setZero();
    int row = 0;
    auto Tat = [&](int i) -> LD {
        return (i >= 0 && i < static_cast<int>(T.size())) ? static_cast<LD>(T[i]) : LD(0);
    };
    for (int ell = 0; ell < n_small; ++ell, ++row) {
        if (ell <= M) A(row, ell) = 1.0L;
        b(row) += Tat(ell);    // q_0 = 1 term of (T Q)_ell
        for (int k = 1; k <= nd; ++k) A(row, M + 1 + k - 1) -= Tat(ell - k);
    }
    for (int ell : large_rows) {
        A(row, ell) = 1.0L;    // ell <= M always here
        for (int k = 0; k <= nd; ++k) {
            LD coef = 0.0L;
            if (ell - 3 == k) coef += static_cast<LD>(a3);
            if (ell - 2 == k) coef += static_cast<LD>(a2);
            if (coef != 0.0L) {
                if (k == 0) b(row) += coef;
                else A(row, M + 1 + k - 1) -= coef;
            }
        }
        ++row;
    }

    Eigen::FullPivLU<Eigen::Matrix<LD, Eigen::Dynamic, Eigen::Dynamic>> lu(A);
    if (!lu.isInvertible())
        throw NumericalError("pade construction system is singular");
    Eigen::Matrix<LD, Eigen::Dynamic, 1> x = lu.solve(b);
    // one round of iterative refinement
    Eigen::Matrix<LD, Eigen::Dynamic, 1> res = b - A * x;
    x += lu.solve(res);
    res = b - A * x;

    LD bn = b.norm();
    LD rel = bn > 0.0L ? res.norm() / bn : res.norm();

    // condition estimate from the pivots of U
    Eigen::Matrix<LD, Eigen::Dynamic, Eigen::Dynamic> U =
        lu.matrixLU().template triangularView<Eigen::Upper>();
    LD dmax = 0.0L, dmin = 1e4930L;
    for (int i = 0; i < N; ++i) {
        LD v = std::abs(U(i, i));
        dmax = std::max(dmax, v);
        dmin = std::min(dmin, v);
    }

    PadeApproximant pa;
    pa.M = M;
    pa.alpha = alpha;
    pa.p.resize(M + 1);
    pa.q.resize(nd + 1);
    pa.q[0] = 1.0;
    for (int i = 0; i <= M; ++i) pa.p[i] = static_cast<double>(x(i));
    for (int k = 1; k <= nd; ++k) pa.q[k] = static_cast<double>(x(M + 1 + k - 1));
    pa.residual = static_cast<double>(rel);
    pa.condition = static_cast<double>(dmin > 0.0L ? dmax / dmin : 1e300);
    if (pa.residual > 1e-10)
        throw NumericalError(
            "pade construction residual " + std::to_string(pa.residual) +
            " exceeds 1e-10 (condition estimate " + std::to_string(pa.condition) + ")");
    return pa;
}

} // namespace

PadeApproximant build_pade(const AsymptoticSeries& ae, double alpha, double beta) {
    ae.validate();
    const int n = ae.n(), j0 = ae.j0;
    const int M = (j0 + n + 5) / 2;
    const int nd = M - 3;
    std::vector<double> T(j0 + n + 1, 0.0);
    for (int j = 1; j <= n; ++j) T[j0 + j] = ae.coefficients[j - 1];
    std::vector<int> large = {M, M - 1};
    PadeApproximant pa = solve_system(M, nd, T, j0 + n + 1, large, anchor_c3(alpha),
                                      anchor_c2(alpha, beta), alpha);
    return pa;
}

PadeApproximant build_energy_pade(const AsymptoticSeries& ae, double alpha, double beta) {
    ae.validate();
    (void)beta;    // the one-point variant carries no large-r information
    const int n = ae.n(), j0 = ae.j0;
    if ((j0 + n + 1) % 2 != 0)
        throw DomainError("energy variant needs j0 + n odd");
    const int M = (j0 + n + 1) / 2;
    const int nd = M - 2;
    // energy series: e_j = f_j / (j0 + j - 1) at powers r^{j0+j-1}
    std::vector<double> T(j0 + n, 0.0);
    for (int j = 1; j <= n; ++j) T[j0 + j - 1] = ae.coefficients[j - 1] / (j0 + j - 1);
    PadeApproximant pa =
        solve_system(M, nd, T, j0 + n, {}, 0.0, 0.0, alpha);
    return pa;
}

double eval_force(const PadeApproximant& pa, double r) {
    if (!(r > 0.0)) throw DomainError("force evaluation needs r > 0");
    const int nd = pa.denominator_degree();
    auto horner = [](const std::vector<double>& c, double x) {
        double s = 0.0;
        for (std::size_t i = c.size(); i-- > 0;) s = s * x + c[i];
        return s;
    };
    double num, den;
    if (r <= 1.0) {
        num = horner(pa.p, r);
        den = horner(pa.q, r);
    } else {
        // in 1/r: P = r^M sum p_i rho^{M-i}, Q = r^nd sum q_k rho^{nd-k}
        double rho = 1.0 / r;
        std::vector<double> prev(pa.p.rbegin(), pa.p.rend());
        std::vector<double> qrev(pa.q.rbegin(), pa.q.rend());
        num = horner(prev, rho);
        den = horner(qrev, rho);
        num *= std::pow(r, pa.M - nd);    // = r^3 class by construction
    }
    if (std::abs(den) < 1e-14 * std::max(1.0, std::abs(num)))
        throw NumericalError("force evaluation too close to a denominator root");
    // guard the declared exclusion zone around real positive roots
    return num / den;
}

double eval_energy_rescaled(const PadeApproximant& pa, double r, double rel_tol) {
    if (!(r > 0.0)) throw DomainError("energy evaluation needs r > 0");
    auto f = [&](double t) { return t > 0.0 ? eval_force(pa, t) / (t * t) : 0.0; };
    QuadratureResult q = integrate_1d(f, 0.0, r, rel_tol);
    if (!q.converged)
        throw NumericalError("energy integration did not converge (pole in range?)");
    return q.value;
}

double eval_energy_ratio(const PadeApproximant& pa, double r, double rel_tol) {
    double e = eval_energy_rescaled(pa, r, rel_tol);
    double epfa = -pa.alpha * kPi * kPi * kPi * r * r / 1440.0;
    return e / epfa;
}

EnergyCurve energy_curve(const PadeApproximant& pa, const std::vector<double>& d_over_R,
                         double rel_tol) {
    if (d_over_R.empty()) throw DomainError("empty d/R grid");
    double x_min = *std::min_element(d_over_R.begin(), d_over_R.end());
    if (!(x_min > 0.0)) throw DomainError("d/R grid must be positive");
    PoleReport pr = pole_check(pa, 1.0 / x_min);
    if (!pr.genuine_pole_free())
        throw NumericalError("pole inside the requested integration range");
    EnergyCurve c;
    c.source = CurveSource::Pade;
    std::vector<double> xs(d_over_R);
    std::sort(xs.begin(), xs.end());
    for (double x : xs) {
        if (!(x > 0.0)) throw DomainError("d/R grid must be positive");
        c.d_over_R.push_back(x);
        c.ratio.push_back(eval_energy_ratio(pa, 1.0 / x, rel_tol));
    }
    c.validate();
    return c;
}

Thetas extract_thetas(const PadeApproximant& pa) {
    const int nd = pa.denominator_degree();
    // descending-power long division P/Q = c3 r^3 + c2 r^2 + c1 r + ...
    auto at = [&](const std::vector<double>& c, int i) {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : 0.0;
    };
    double qn = pa.q[nd];
    if (qn == 0.0) throw NumericalError("denominator leading coefficient vanished");
    Thetas t;
    t.c3 = at(pa.p, pa.M) / qn;
    t.c2 = (at(pa.p, pa.M - 1) - t.c3 * at(pa.q, nd - 1)) / qn;
    t.c1 = (at(pa.p, pa.M - 2) - t.c3 * at(pa.q, nd - 2) - t.c2 * at(pa.q, nd - 1)) / qn;
    t.theta1 = -1440.0 * t.c2 / (pa.alpha * kPi * kPi * kPi);
    t.theta2 = 1440.0 * t.c1 / (pa.alpha * kPi * kPi * kPi);
    return t;
}

namespace {

std::vector<std::complex<double>> poly_roots(const std::vector<double>& coeffs) {
    // companion-matrix eigenvalues; coeffs lowest order first
    int deg = static_cast<int>(coeffs.size()) - 1;
    while (deg > 0 && coeffs[deg] == 0.0) --deg;
    if (deg < 1) return {};
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 0; i < deg; ++i) {
        C(i, deg - 1) = -coeffs[i] / coeffs[deg];
        if (i + 1 < deg) C(i + 1, i) = 1.0;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(C);
    std::vector<std::complex<double>> out;
    for (int i = 0; i < deg; ++i) out.push_back(es.eigenvalues()(i));
    return out;
}

double poly_eval(const std::vector<double>& c, double x) {
    double s = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) s = s * x + c[i];
    return s;
}

double poly_deriv_eval(const std::vector<double>& c, double x) {
    double s = 0.0;
    for (std::size_t i = c.size(); i-- > 1;) s = s * x + c[i] * static_cast<double>(i);
    return s;
}

} // namespace

bool PoleReport::genuine_pole_free() const {
    for (const auto& p : roots)
        if (!p.defect) return false;
    return true;
}

PoleReport pole_check(const PadeApproximant& pa, double r_max) {
    PoleReport rep;
    auto qroots = poly_roots(pa.q);
    auto proots = poly_roots(pa.p);
    for (const auto& z : qroots) {
        double tol = 1e-9 * std::max(1.0, std::abs(z));
        if (std::abs(z.imag()) > tol) continue;
        double r = z.real();
        if (!(r > 0.0) || r > r_max) continue;
        PoleInfo info;
        info.r = r;
        info.residue = poly_eval(pa.p, r) / poly_deriv_eval(pa.q, r);
        info.nearest_zero_gap = std::numeric_limits<double>::infinity();
        for (const auto& pz : proots)
            info.nearest_zero_gap = std::min(info.nearest_zero_gap, std::abs(pz - z));
        // scale of the regular part nearby
        double r_probe = r * (1.0 + 1e-3);
        double local = std::abs(poly_eval(pa.p, r_probe) / poly_eval(pa.q, r_probe));
        info.defect = info.nearest_zero_gap < 1e-6 * std::max(r, 1e-30) &&
                      std::abs(info.residue) < 1e-6 * std::max(local * r, 1e-300);
        rep.roots.push_back(info);
    }
    std::sort(rep.roots.begin(), rep.roots.end(),
              [](const PoleInfo& a, const PoleInfo& b) { return a.r < b.r; });
    return rep;
}

std::vector<double> taylor_coefficients(const PadeApproximant& pa, int k) {
    std::vector<double> t(k + 1, 0.0);
    for (int ell = 0; ell <= k; ++ell) {
        double s = ell <= pa.M ? pa.p[ell] : 0.0;
        for (int j = 1; j <= std::min(ell, pa.denominator_degree()); ++j)
            s -= pa.q[j] * t[ell - j];
        t[ell] = s;
    }
    return t;
}

Theta1Fit fit_theta1(const EnergyCurve& curve, double x_min, double x_max) {
    curve.validate();
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        double x = curve.d_over_R[i];
        if (x >= x_min && x <= x_max) {
            xs.push_back(x);
            ys.push_back(curve.ratio[i] - 1.0);
        }
    }
    if (xs.size() < 6) throw FitError("theta1 fit needs >= 6 samples in range");
    std::vector<std::function<double(double)>> basis = {
        [](double x) { return x; },
        [](double x) { return x * x * std::log(x); }};
    BasisFit bf = fit_basis(xs, ys, basis);
    Theta1Fit out;
    out.theta1 = bf.coefficients[0];
    out.theta2 = bf.coefficients[1];
    out.rms_residual = bf.rms_residual;
    return out;
}

} // namespace gradpfa
