#include "gradpfa/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gradpfa/fitting.hpp"

namespace gradpfa {

double PerturbativeKernel::operator()(double k, double d) const {
    if (!g_) throw DomainError("empty perturbative kernel");
    return g_(k, d);
}

double PerturbativeKernel::mu(double d) const {
    if (!mu_) throw DomainError("kernel carries no first-order coefficient mu");
    return mu_(d);
}

PerturbativeKernel PerturbativeKernel::from_table(std::vector<double> k,
                                                  std::vector<double> d,
                                                  std::vector<double> G) {
    if (k.size() != G.size() || d.size() != G.size() || G.empty())
        throw DomainError("kernel table columns must have equal nonzero length");
    // group by separation, keep sorted k per group
    auto dvals = std::make_shared<std::vector<double>>();
    auto tables = std::make_shared<std::map<double, std::vector<std::pair<double, double>>>>();
    for (std::size_t i = 0; i < G.size(); ++i)
        (*tables)[d[i]].push_back({k[i], G[i]});
    for (auto& [dv, tab] : *tables) {
        std::sort(tab.begin(), tab.end());
        dvals->push_back(dv);
    }
    auto eval = [tables](double kq, double dq) -> double {
        auto it = tables->find(dq);
        if (it == tables->end()) {
            // nearest tabulated separation within a loose match
            double best = 1e300;
            for (const auto& [dv, tab] : *tables)
                if (std::abs(dv - dq) < best) {
                    best = std::abs(dv - dq);
                    it = tables->find(dv);
                }
            if (it == tables->end() || best > 1e-9 * std::max(1.0, std::abs(dq)))
                throw DomainError("kernel table has no data at the requested separation");
        }
        const auto& tab = it->second;
        double ka = std::abs(kq);    // isotropy: table stores k >= 0
        if (ka < tab.front().first - 1e-12 || ka > tab.back().first + 1e-12)
            throw DomainError("kernel table does not cover the requested k");
        // cubic Lagrange interpolation on the 4 nearest nodes
        std::size_t j = std::upper_bound(tab.begin(), tab.end(), std::make_pair(ka, -1e300)) -
                        tab.begin();
        std::size_t i0 = j >= 2 ? j - 2 : 0;
        i0 = std::min(i0, tab.size() >= 4 ? tab.size() - 4 : 0);
        std::size_t m = std::min<std::size_t>(4, tab.size());
        double s = 0.0;
        for (std::size_t a = 0; a < m; ++a) {
            double term = tab[i0 + a].second;
            for (std::size_t b = 0; b < m; ++b)
                if (b != a)
                    term *= (ka - tab[i0 + b].first) /
                            (tab[i0 + a].first - tab[i0 + b].first);
            s += term;
        }
        return s;
    };
    return PerturbativeKernel(eval, MuFn{});
}

PerturbativeKernel PerturbativeKernel::from_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open kernel CSV " + path);
    std::vector<double> k, d, G;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line.find_first_not_of("0123456789+-.eE, \t") != std::string::npos) continue;
        std::istringstream ls(line);
        std::string tok;
        double v[3];
        bool ok = true;
        for (int i = 0; i < 3; ++i) {
            if (!std::getline(ls, tok, ',')) { ok = false; break; }
            v[i] = std::stod(tok);
        }
        if (!ok) throw DomainError("kernel CSV needs k,d,G columns");
        k.push_back(v[0]);
        d.push_back(v[1]);
        G.push_back(v[2]);
    }
    return from_table(std::move(k), std::move(d), std::move(G));
}

PerturbativeKernel PerturbativeKernel::consistent(PlateLaw law, double beta,
                                                  double phi4, double phi6) {
    auto eval = [law, beta, phi4, phi6](double k, double d) {
        double z2 = k * k * d * d;
        return law.energy_per_area(d) / (d * d) *
               (6.0 + beta * z2 + phi4 * z2 * z2 + phi6 * z2 * z2 * z2);
    };
    auto mu = [law](double d) { return law.d1(d); };
    return PerturbativeKernel(eval, mu);
}

SmallKResult kernel_small_k(const PerturbativeKernel& kernel, double d) {
    if (!(d > 0.0)) throw DomainError("separation must be positive");
    const double kmax = 0.3 / d;
    const int nodes = 12;

    auto fit_window = [&](double window) {
        std::vector<double> xs, ys;
        for (int i = 0; i < nodes; ++i) {
            double k = window * (i + 1) / nodes;
            xs.push_back(k);
            ys.push_back(kernel(k, d));
        }
        std::vector<std::function<double(double)>> basis = {
            [](double) { return 1.0; },
            [](double k) { return k * k; },
            [](double k) { return k * k * k * k; }};
        return fit_basis(xs, ys, basis);
    };

    BasisFit full = fit_window(kmax);
    BasisFit half = fit_window(0.5 * kmax);

    double g0 = kernel(0.0, d);
    // evenness probe: the k^2,k^4 model must describe the data; a kernel odd
    // component shows up as a large fit residual relative to the curvature term
    double scale = std::max(std::abs(full.coefficients[1]) * kmax * kmax,
                            1e-14 * std::abs(g0));
    if (full.rms_residual > 1e-3 * std::max(scale, std::abs(g0) * 1e-10))
        throw FitError("kernel is not smooth/even enough for the small-k fit");

    SmallKResult out;
    out.gamma = g0;
    out.gamma_uncertainty = std::abs(full.coefficients[0] - g0);
    out.delta = full.coefficients[1];
    out.delta_uncertainty = std::abs(full.coefficients[1] - half.coefficients[1]) +
                            full.stderrs[1];
    return out;
}

MatchingReport matching_check(const PerturbativeKernel& kernel, const PlateLaw& law,
                              double d, double tol) {
    MatchingReport rep;
    rep.small_k = kernel_small_k(kernel, d);
    double U = law.energy_per_area(d);
    double U1 = law.d1(d);
    double U2 = law.d2(d);

    if (kernel.has_mu())
        rep.residual_mu = std::abs(U1 - kernel.mu(d)) / std::abs(U1);
    rep.residual_gamma = std::abs(U2 - 2.0 * rep.small_k.gamma) / std::abs(U2);
    rep.beta = rep.small_k.delta / U;

    if (rep.residual_mu > tol)
        throw MatchingViolation("U' = mu",
                                "first-order matching violated: relative residual " +
                                    std::to_string(rep.residual_mu));
    if (rep.residual_gamma > tol)
        throw MatchingViolation("U'' = 2 gamma",
                                "second-order matching violated: relative residual " +
                                    std::to_string(rep.residual_gamma));
    rep.passed = true;
    return rep;
}

} // namespace gradpfa
