#pragma once

// Single-valued height profiles z = H(x, y) over the reference plane, with
// analytic gradients and second derivatives where available and
// finite-difference ones for gridded data.

#include <limits>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "gradpfa/errors.hpp"

namespace gradpfa {

struct ProfilePoint {
    double H = 0.0;
    double Hx = 0.0;
    double Hy = 0.0;
    double Hxx = 0.0;
    double Hxy = 0.0;
    double Hyy = 0.0;
};

struct FlatProfile {
    double offset = 0.0;
};

struct SphereProfile {
    double radius = 1.0;
    double offset = 0.0;      // apex height above the reference plane
};

struct CylinderProfile {
    double radius = 1.0;
    double axis_angle = 0.0;  // axis direction in the plane, radians from +x
    double offset = 0.0;
};

struct HyperboloidProfile {
    double radius = 1.0;      // apex curvature scale: H ~ lambda^2 rho^2 / (2R)
    double lambda = 1.0;
    double offset = 0.0;
};

struct PolynomialTerm {
    int ix = 0;
    int iy = 0;
    double c = 0.0;
};

// Sum of c x^i y^j with i + j <= 4 plus offset.
struct PolynomialProfile {
    double offset = 0.0;
    std::vector<PolynomialTerm> terms;
};

// offset + a2 rho^2 + a3 rho^3 + a4 rho^4; the odd radial term models the
// tip asymmetry that analytic x-y polynomials cannot represent.
struct RadialPolynomialProfile {
    double offset = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
    double a4 = 0.0;
};

struct GridProfile {
    double x0 = 0.0, y0 = 0.0;
    double dx = 1.0, dy = 1.0;
    int nx = 0, ny = 0;
    std::vector<double> values;   // row-major: values[iy*nx + ix]

    // derivative lattices, filled at construction (fourth-order central
    // differences, one-sided at edges)
    std::vector<double> d10, d01, d20, d11, d02;

    double at(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * nx + ix]; }
};

class HeightProfile;

// First-order tilt of a base profile: H' = H - eps (x + H dH/dx).
struct TiltedProfile {
    std::shared_ptr<const HeightProfile> base;
    double epsilon = 0.0;
};

class HeightProfile {
public:
    using Kind = std::variant<FlatProfile, SphereProfile, CylinderProfile,
                              HyperboloidProfile, PolynomialProfile,
                              RadialPolynomialProfile, GridProfile, TiltedProfile>;

    HeightProfile() : kind_(FlatProfile{}) {}
    explicit HeightProfile(Kind k) : kind_(std::move(k)) {}

    static HeightProfile flat(double offset);
    static HeightProfile sphere(double radius, double offset);
    static HeightProfile cylinder(double radius, double axis_angle, double offset);
    static HeightProfile hyperboloid(double radius, double lambda, double offset);
    static HeightProfile polynomial(double offset, std::vector<PolynomialTerm> terms);
    static HeightProfile radial_polynomial(double offset, double a2, double a3, double a4);
    static HeightProfile grid(GridProfile g);

    ProfilePoint eval(double x, double y) const;
    double height(double x, double y) const { return eval(x, y).H; }

    // Largest radius around the origin on which the profile is defined and
    // |grad H| stays below the cap; +inf when unrestricted.
    double patch_radius(double slope_cap) const;

    const Kind& kind() const { return kind_; }
    std::string kind_name() const;

private:
    Kind kind_;
};

// Tilt by an infinitesimal angle about the y axis: delta H = -eps (x + H Hx).
// |eps| <= 0.1; used for invariance testing.
HeightProfile tilt_transform(const HeightProfile& p, double epsilon);

// JSON descriptor ({"kind": ..., parameters...}) or CSV grid (x,y,H columns).
HeightProfile profile_from_json(const std::string& json_text);
HeightProfile profile_from_json_file(const std::string& path);
HeightProfile grid_from_csv_file(const std::string& path);

} // namespace gradpfa
