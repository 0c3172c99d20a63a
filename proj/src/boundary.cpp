#include "gradpfa/boundary.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace gradpfa {

namespace {

constexpr double kPi = std::numbers::pi;

void reduce(long long& num, long long& den) {
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
}

PiSquareRational make_pq(long long an, long long ad, long long bn, long long bd) {
    PiSquareRational v{an, ad, bn, bd};
    reduce(v.a_num, v.a_den);
    reduce(v.b_num, v.b_den);
    return v;
}

} // namespace

BoundaryCondition parse_boundary(std::string_view name) {
    if (name == "D") return BoundaryCondition::D;
    if (name == "N") return BoundaryCondition::N;
    if (name == "DN") return BoundaryCondition::DN;
    if (name == "ND") return BoundaryCondition::ND;
    if (name == "EM") return BoundaryCondition::EM;
    throw UnsupportedConfigError("unknown boundary condition '" + std::string(name) +
                                 "'; expected one of D, N, DN, ND, EM");
}

std::string to_string(BoundaryCondition bc) {
    switch (bc) {
        case BoundaryCondition::D:  return "D";
        case BoundaryCondition::N:  return "N";
        case BoundaryCondition::DN: return "DN";
        case BoundaryCondition::ND: return "ND";
        case BoundaryCondition::EM: return "EM";
    }
    return "?";
}

double PiSquareRational::value() const {
    return static_cast<double>(a_num) / static_cast<double>(a_den) +
           static_cast<double>(b_num) / static_cast<double>(b_den) / (kPi * kPi);
}

PiSquareRational PiSquareRational::operator+(const PiSquareRational& o) const {
    return make_pq(a_num * o.a_den + o.a_num * a_den, a_den * o.a_den,
                   b_num * o.b_den + o.b_num * b_den, b_den * o.b_den);
}

PiSquareRational PiSquareRational::operator-(const PiSquareRational& o) const {
    return make_pq(a_num * o.a_den - o.a_num * a_den, a_den * o.a_den,
                   b_num * o.b_den - o.b_num * b_den, b_den * o.b_den);
}

PiSquareRational PiSquareRational::scaled(long long num, long long den) const {
    return make_pq(a_num * num, a_den * den, b_num * num, b_den * den);
}

bool PiSquareRational::identical(const PiSquareRational& o) const {
    return a_num == o.a_num && a_den == o.a_den && b_num == o.b_num && b_den == o.b_den;
}

std::string PiSquareRational::str() const {
    std::ostringstream os;
    os << a_num;
    if (a_den != 1) os << "/" << a_den;
    if (b_num != 0) {
        os << (b_num > 0 ? " + " : " - ");
        os << (b_num > 0 ? b_num : -b_num);
        if (b_den != 1) os << "/" << b_den;
        os << "/pi^2";
    }
    return os.str();
}

double PlateLaw::energy_per_area(double H) const {
    if (!(H > 0.0)) throw DomainError("plate separation must be positive");
    return -alpha * kPi * kPi / (1440.0 * H * H * H);
}

double PlateLaw::d1(double H) const {
    return 3.0 * alpha * kPi * kPi / (1440.0 * H * H * H * H);
}

double PlateLaw::d2(double H) const {
    return -12.0 * alpha * kPi * kPi / (1440.0 * H * H * H * H * H);
}

double plate_alpha(BoundaryCondition bc) {
    switch (bc) {
        case BoundaryCondition::D:
        case BoundaryCondition::N:  return 1.0;
        case BoundaryCondition::EM: return 2.0;
        case BoundaryCondition::DN:
        case BoundaryCondition::ND: return -7.0 / 8.0;
    }
    return 0.0;
}

PlateLaw plate_law(BoundaryCondition bc) {
    return PlateLaw{plate_alpha(bc), 3};
}

double plate_energy_density(BoundaryCondition bc, double H) {
    return plate_law(bc).energy_per_area(H);
}

PiSquareRational beta_exact(BoundaryCondition bc) {
    // beta_D = 2/3                    beta_N  = (2/3)(1 - 30/pi^2)
    // beta_DN = 2/3                   beta_ND = 2/3 - 80/(7 pi^2)
    // beta_EM = (2/3)(1 - 15/pi^2) = (beta_D + beta_N)/2
    switch (bc) {
        case BoundaryCondition::D:  return make_pq(2, 3, 0, 1);
        case BoundaryCondition::N:  return make_pq(2, 3, -20, 1);
        case BoundaryCondition::DN: return make_pq(2, 3, 0, 1);
        case BoundaryCondition::ND: return make_pq(2, 3, -80, 7);
        case BoundaryCondition::EM: return make_pq(2, 3, -10, 1);
    }
    return {};
}

double beta_coefficient(BoundaryCondition bc) {
    return beta_exact(bc).value();
}

PiSquareRational theta1_exact(BoundaryCondition bc) {
    PiSquareRational one{1, 1, 0, 1};
    return beta_exact(bc).scaled(2, 1) - one;
}

double theta1_coefficient(BoundaryCondition bc) {
    return theta1_exact(bc).value();
}

namespace {

bool is_scalar_or_em(BoundaryCondition bc) {
    return bc == BoundaryCondition::D || bc == BoundaryCondition::N ||
           bc == BoundaryCondition::EM;
}

} // namespace

CoefficientSet coefficient_set(BoundaryCondition c1, BoundaryCondition c2) {
    if (!is_scalar_or_em(c1) || !is_scalar_or_em(c2))
        throw UnsupportedConfigError("per-surface condition must be D, N or EM");

    CoefficientSet cs;
    if (c1 == c2) {
        cs.alpha = plate_alpha(c1);
        cs.beta1_exact = beta_exact(c1);
        cs.beta2_exact = cs.beta1_exact;
    } else if (c1 != BoundaryCondition::EM && c2 != BoundaryCondition::EM) {
        // mixed scalar pair: surface i sees its own condition on the curved
        // side and the partner's on the flat side
        cs.alpha = plate_alpha(BoundaryCondition::DN);
        cs.beta1_exact = beta_exact(c1 == BoundaryCondition::D ? BoundaryCondition::DN
                                                               : BoundaryCondition::ND);
        cs.beta2_exact = beta_exact(c2 == BoundaryCondition::D ? BoundaryCondition::DN
                                                               : BoundaryCondition::ND);
    } else {
        throw UnsupportedConfigError("unsupported pair " + to_string(c1) + "/" +
                                     to_string(c2) +
                                     "; supported: D/D, N/N, EM/EM, mixed D-N scalar");
    }
    PiSquareRational two{2, 1, 0, 1};
    cs.beta_cross_exact = two - cs.beta1_exact - cs.beta2_exact;
    cs.beta1 = cs.beta1_exact.value();
    cs.beta2 = cs.beta2_exact.value();
    cs.beta_cross = cs.beta_cross_exact.value();
    cs.beta_minus = 0.0;
    return cs;
}

CoefficientSet coefficient_set(BoundaryCondition pair_label) {
    switch (pair_label) {
        case BoundaryCondition::D:
        case BoundaryCondition::N:
        case BoundaryCondition::EM:
            return coefficient_set(pair_label, pair_label);
        case BoundaryCondition::DN:
        case BoundaryCondition::ND:
            return coefficient_set(BoundaryCondition::D, BoundaryCondition::N);
    }
    throw UnsupportedConfigError("bad pair label");
}

} // namespace gradpfa
