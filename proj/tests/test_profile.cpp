#include <cmath>
#include <fstream>

#include "doctest.h"
#include "gradpfa/profile.hpp"

using namespace gradpfa;

namespace {

// central-difference check of the analytic gradients
void check_gradients(const HeightProfile& p, double x, double y, double tol = 1e-7) {
    const double h = 1e-6;
    ProfilePoint c = p.eval(x, y);
    double fx = (p.eval(x + h, y).H - p.eval(x - h, y).H) / (2 * h);
    double fy = (p.eval(x, y + h).H - p.eval(x, y - h).H) / (2 * h);
    CHECK(c.Hx == doctest::Approx(fx).epsilon(tol));
    CHECK(c.Hy == doctest::Approx(fy).epsilon(tol));
    double fxx = (p.eval(x + h, y).Hx - p.eval(x - h, y).Hx) / (2 * h);
    double fxy = (p.eval(x, y + h).Hx - p.eval(x, y - h).Hx) / (2 * h);
    CHECK(c.Hxx == doctest::Approx(fxx).epsilon(10 * tol));
    CHECK(c.Hxy == doctest::Approx(fxy).epsilon(10 * tol));
}

} // namespace

TEST_CASE("analytic profiles: heights and derivatives") {
    auto sph = HeightProfile::sphere(2.0, 0.1);
    CHECK(sph.height(0, 0) == doctest::Approx(0.1));
    CHECK(sph.height(0.5, 0.3) ==
          doctest::Approx(0.1 + 2.0 - std::sqrt(4.0 - 0.25 - 0.09)).epsilon(1e-14));
    check_gradients(sph, 0.4, -0.3);

    auto hyp = HeightProfile::hyperboloid(1.5, 1.2, 0.05);
    CHECK(hyp.height(0, 0) == doctest::Approx(0.05));
    check_gradients(hyp, 0.8, 0.2);

    auto cyl = HeightProfile::cylinder(1.0, 0.4, 0.2);
    check_gradients(cyl, 0.2, 0.1);
    // translation along its own axis changes nothing
    double ca = std::cos(0.4), sa = std::sin(0.4);
    CHECK(cyl.height(0.3 * ca, 0.3 * sa) == doctest::Approx(cyl.height(0, 0)).epsilon(1e-14));

    auto poly = HeightProfile::polynomial(
        1.0, {{2, 0, 0.5}, {0, 2, 0.25}, {3, 0, 0.1}, {1, 1, -0.2}});
    check_gradients(poly, 0.3, 0.7);

    auto rad = HeightProfile::radial_polynomial(0.5, 0.8, 0.3, -0.05);
    check_gradients(rad, 0.3, -0.6);
    check_gradients(rad, 0.0, 1e-3);
}

TEST_CASE("profile patches") {
    auto sph = HeightProfile::sphere(2.0, 0.0);
    CHECK(sph.patch_radius(0.5) == doctest::Approx(2.0 * 0.5 / std::sqrt(1.25)));
    CHECK_THROWS_AS(sph.eval(2.5, 0.0), GeometryError);
    auto hyp = HeightProfile::hyperboloid(1.0, 0.8, 0.0);
    CHECK(std::isinf(hyp.patch_radius(0.9)));    // slopes saturate below the cap
    CHECK(hyp.patch_radius(0.4) ==
          doctest::Approx(0.4 / (0.8 * std::sqrt(0.64 - 0.16))).epsilon(1e-12));
}

TEST_CASE("tilt transform") {
    SUBCASE("flat profile: pure shear") {
        auto t = tilt_transform(HeightProfile::flat(2.0), 0.05);
        CHECK(t.height(1.0, 0.0) == doctest::Approx(2.0 - 0.05 * 1.0).epsilon(1e-14));
        CHECK(t.height(0.0, 3.0) == doctest::Approx(2.0).epsilon(1e-14));
    }
    SUBCASE("eps = 0 is the identity") {
        auto p = HeightProfile::sphere(1.0, 0.3);
        auto t = tilt_transform(p, 0.0);
        CHECK(t.height(0.2, 0.1) == p.height(0.2, 0.1));
    }
    SUBCASE("general profile: delta H = -eps (x + H Hx)") {
        auto p = HeightProfile::polynomial(0.5, {{2, 0, 0.3}, {0, 2, 0.3}});
        double eps = 0.02;
        auto t = tilt_transform(p, eps);
        ProfilePoint b = p.eval(0.4, -0.2);
        CHECK(t.height(0.4, -0.2) ==
              doctest::Approx(b.H - eps * (0.4 + b.H * b.Hx)).epsilon(1e-14));
    }
    CHECK_THROWS_AS(tilt_transform(HeightProfile::flat(1.0), 0.2), DomainError);
}

TEST_CASE("grid profile reproduces a smooth function") {
    GridProfile g;
    g.nx = g.ny = 41;
    g.x0 = g.y0 = -1.0;
    g.dx = g.dy = 0.05;
    auto f = [](double x, double y) { return 1.0 + 0.3 * x * x + 0.2 * y * y + 0.1 * x * y; };
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i)
            g.values.push_back(f(g.x0 + i * g.dx, g.y0 + j * g.dy));
    auto prof = HeightProfile::grid(std::move(g));
    ProfilePoint p = prof.eval(0.13, -0.27);
    CHECK(p.H == doctest::Approx(f(0.13, -0.27)).epsilon(1e-6));
    CHECK(p.Hx == doctest::Approx(0.6 * 0.13 + 0.1 * (-0.27)).epsilon(1e-4));
    CHECK(p.Hy == doctest::Approx(0.4 * (-0.27) + 0.1 * 0.13).epsilon(1e-4));
    CHECK_THROWS_AS(prof.eval(3.0, 0.0), GeometryError);
}

TEST_CASE("json descriptors and CSV grids") {
    auto p = profile_from_json(R"({"kind":"sphere","radius":2.5,"offset":0.01})");
    CHECK(p.kind_name() == "sphere");
    CHECK(p.height(0, 0) == doctest::Approx(0.01));

    auto q = profile_from_json(
        R"({"kind":"polynomial","offset":0.2,"terms":[{"i":2,"j":0,"c":1.5}]})");
    CHECK(q.height(2.0, 0.0) == doctest::Approx(0.2 + 6.0));

    CHECK_THROWS_AS(profile_from_json(R"({"kind":"cone"})"), DomainError);

    std::string path = std::string(GRADPFA_TEST_TMP_DIR) + "/grid.csv";
    {
        std::ofstream out(path);
        out << "x,y,H\n";
        for (int j = 0; j < 6; ++j)
            for (int i = 0; i < 6; ++i)
                out << i * 0.1 << "," << j * 0.1 << "," << 1.0 + 0.01 * i + 0.02 * j << "\n";
    }
    auto g = grid_from_csv_file(path);
    CHECK(g.kind_name() == "grid");
    CHECK(g.height(0.25, 0.35) == doctest::Approx(1.0 + 0.025 + 0.07).epsilon(1e-9));
}
