#include <cmath>
#include <random>

#include "doctest.h"
#include "gradpfa/fitting.hpp"

using namespace gradpfa;

TEST_CASE("line fit recovers exact data") {
    std::vector<double> x{1, 2, 3, 4, 5}, y;
    for (double xi : x) y.push_back(2.5 - 0.7 * xi);
    LineFit f = fit_line(x, y);
    CHECK(f.slope == doctest::Approx(-0.7).epsilon(1e-12));
    CHECK(f.intercept == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(f.rms_residual <= 1e-12);
}

TEST_CASE("basis fit: polynomial round trip and rank detection") {
    std::vector<double> x, y;
    for (int i = 0; i < 20; ++i) {
        double t = 0.1 + 0.05 * i;
        x.push_back(t);
        y.push_back(1.0 - 2.0 * t + 0.5 * t * t * t);
    }
    BasisFit bf = fit_polynomial(x, y, 3);
    CHECK(bf.coefficients[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(bf.coefficients[1] == doctest::Approx(-2.0).epsilon(1e-9));
    CHECK(bf.coefficients[2] == doctest::Approx(0.0).epsilon(1e-8));
    CHECK(bf.coefficients[3] == doctest::Approx(0.5).epsilon(1e-9));

    // duplicated basis function -> rank deficient
    std::vector<std::function<double(double)>> bad = {
        [](double t) { return t; }, [](double t) { return 2.0 * t; }};
    CHECK_THROWS_AS(fit_basis(x, y, bad), FitError);
}

TEST_CASE("noise propagates into stderr estimates") {
    std::mt19937 rng(42);
    std::normal_distribution<double> noise(0.0, 1e-3);
    std::vector<double> x, y;
    for (int i = 0; i < 200; ++i) {
        double t = i * 0.01;
        x.push_back(t);
        y.push_back(3.0 * t + noise(rng));
    }
    LineFit f = fit_line(x, y);
    CHECK(std::abs(f.slope - 3.0) < 5e-3);
    CHECK(f.slope_stderr > 1e-5);
    CHECK(f.slope_stderr < 5e-3);
}
