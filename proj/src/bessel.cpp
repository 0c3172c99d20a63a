#include "gradpfa/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gradpfa/errors.hpp"

namespace gradpfa {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::vector<double> log_bessel_i(int lmax, double z) {
    if (!(z > 0.0)) throw DomainError("bessel argument must be positive");
    std::vector<double> logi(lmax + 1);
    // log i_0 = log(sinh z / z), overflow-safe
    logi[0] = z > 30.0 ? z - std::log(2.0 * z) + std::log1p(-std::exp(-2.0 * z))
                       : std::log(std::sinh(z) / z);
    if (lmax == 0) return logi;
    // Miller downward recurrence for r_l = i_l / i_{l-1}:
    //   i_{l-1} = i_{l+1} + (2l+1)/z i_l  =>  r_l = z / ((2l+1) + z r_{l+1})
    int seed = lmax + 40 + static_cast<int>(2.0 * z);
    double r = z / (2.0 * seed + 1.0);
    std::vector<double> ratios(lmax + 1, 0.0);
    for (int l = seed; l >= 1; --l) {
        r = z / ((2.0 * l + 1.0) + z * r);
        if (l <= lmax) ratios[l] = r;
    }
    for (int l = 1; l <= lmax; ++l) logi[l] = logi[l - 1] + std::log(ratios[l]);
    return logi;
}

std::vector<double> log_bessel_k(int lmax, double z) {
    if (!(z > 0.0)) throw DomainError("bessel argument must be positive");
    // k_l(z) = (pi/2) e^{-z}/z sum_{j=0}^{l} (l+j)! / (j! (l-j)! (2z)^j)
    std::vector<double> logk(lmax + 1);
    double lgam_cache = 0.0;
    (void)lgam_cache;
    for (int l = 0; l <= lmax; ++l) {
        double mx = -1e300;
        std::vector<double> terms(l + 1);
        for (int j = 0; j <= l; ++j) {
            double t = std::lgamma(l + j + 1.0) - std::lgamma(j + 1.0) -
                       std::lgamma(l - j + 1.0) - j * std::log(2.0 * z);
            terms[j] = t;
            mx = std::max(mx, t);
        }
        double s = 0.0;
        for (double t : terms) s += std::exp(t - mx);
        logk[l] = std::log(kPi / 2.0) - z - std::log(z) + mx + std::log(s);
    }
    return logk;
}

std::vector<double> log_dirichlet_ratio(int lmax, double z) {
    std::vector<double> li = log_bessel_i(lmax, z);
    std::vector<double> lk = log_bessel_k(lmax, z);
    for (int l = 0; l <= lmax; ++l) li[l] -= lk[l];
    return li;
}

std::vector<double> log_legendre_pmm_row(int m, int lmax, double t) {
    if (!(t > 1.0)) throw DomainError("legendre row requires t > 1");
    if (m < 0 || lmax < m) throw DomainError("legendre row requires 0 <= m <= lmax");
    std::vector<double> out(lmax - m + 1);
    double logs2 = 0.5 * std::log(t * t - 1.0);
    // P_mm = (2m-1)!! (t^2-1)^{m/2}
    double logpmm = 0.0;
    for (int k = 1; k <= m; ++k) logpmm += std::log(2.0 * k - 1.0);
    logpmm += m * logs2;
    out[0] = logpmm;
    if (lmax == m) return out;
    // scaled upward recurrence: all values positive for t > 1
    double c = logpmm;
    double vprev = 1.0;
    double vcur = t * (2.0 * m + 1.0);
    out[1] = c + std::log(vcur);
    for (int l = m + 2; l <= lmax; ++l) {
        double vnext = (t * (2.0 * l - 1.0) * vcur - (l + m - 1.0) * vprev) / (l - m);
        if (vnext > 1e250) {
            vnext *= 1e-250;
            vcur *= 1e-250;
            c += 250.0 * std::log(10.0);
        }
        vprev = vcur;
        vcur = vnext;
        out[l - m] = c + std::log(vcur);
    }
    return out;
}

} // namespace gradpfa
