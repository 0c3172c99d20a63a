#include "gradpfa/profile.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace gradpfa {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ProfilePoint eval_flat(const FlatProfile& p, double, double) {
    ProfilePoint r;
    r.H = p.offset;
    return r;
}

ProfilePoint eval_sphere(const SphereProfile& p, double x, double y) {
    double rho2 = x * x + y * y;
    double R2 = p.radius * p.radius;
    if (rho2 >= R2)
        throw GeometryError("sphere profile evaluated outside its disk");
    double s = std::sqrt(R2 - rho2);
    ProfilePoint r;
    r.H = p.offset + p.radius - s;
    r.Hx = x / s;
    r.Hy = y / s;
    double s3 = s * s * s;
    r.Hxx = 1.0 / s + x * x / s3;
    r.Hyy = 1.0 / s + y * y / s3;
    r.Hxy = x * y / s3;
    return r;
}

ProfilePoint eval_cylinder(const CylinderProfile& p, double x, double y) {
    // t = signed distance from the axis line through the origin
    double sa = std::sin(p.axis_angle), ca = std::cos(p.axis_angle);
    double t = -x * sa + y * ca;
    double R2 = p.radius * p.radius;
    if (t * t >= R2)
        throw GeometryError("cylinder profile evaluated outside its strip");
    double s = std::sqrt(R2 - t * t);
    ProfilePoint r;
    r.H = p.offset + p.radius - s;
    double dH_dt = t / s;
    double d2H_dt2 = R2 / (s * s * s);
    r.Hx = dH_dt * (-sa);
    r.Hy = dH_dt * ca;
    r.Hxx = d2H_dt2 * sa * sa;
    r.Hyy = d2H_dt2 * ca * ca;
    r.Hxy = -d2H_dt2 * sa * ca;
    return r;
}

ProfilePoint eval_hyperboloid(const HyperboloidProfile& p, double x, double y) {
    double rho2 = x * x + y * y;
    double l2 = p.lambda * p.lambda;
    double w = std::sqrt(p.radius * p.radius + l2 * rho2);
    ProfilePoint r;
    r.H = p.offset + w - p.radius;
    r.Hx = l2 * x / w;
    r.Hy = l2 * y / w;
    double w3 = w * w * w;
    r.Hxx = l2 / w - l2 * l2 * x * x / w3;
    r.Hyy = l2 / w - l2 * l2 * y * y / w3;
    r.Hxy = -l2 * l2 * x * y / w3;
    return r;
}

double ipow(double v, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= v;
    return r;
}

ProfilePoint eval_polynomial(const PolynomialProfile& p, double x, double y) {
    ProfilePoint r;
    r.H = p.offset;
    for (const auto& t : p.terms) {
        double xi = ipow(x, t.ix), yj = ipow(y, t.iy);
        r.H += t.c * xi * yj;
        if (t.ix >= 1) r.Hx += t.c * t.ix * ipow(x, t.ix - 1) * yj;
        if (t.iy >= 1) r.Hy += t.c * t.iy * xi * ipow(y, t.iy - 1);
        if (t.ix >= 2) r.Hxx += t.c * t.ix * (t.ix - 1) * ipow(x, t.ix - 2) * yj;
        if (t.iy >= 2) r.Hyy += t.c * t.iy * (t.iy - 1) * xi * ipow(y, t.iy - 2);
        if (t.ix >= 1 && t.iy >= 1)
            r.Hxy += t.c * t.ix * t.iy * ipow(x, t.ix - 1) * ipow(y, t.iy - 1);
    }
    return r;
}

ProfilePoint eval_radial(const RadialPolynomialProfile& p, double x, double y) {
    double rho2 = x * x + y * y;
    double rho = std::sqrt(rho2);
    ProfilePoint r;
    r.H = p.offset + p.a2 * rho2 + p.a3 * rho2 * rho + p.a4 * rho2 * rho2;
    // H = g(rho); Hx = g' x/rho etc., with g'/rho finite at the origin
    double gp_over_rho = 2.0 * p.a2 + 3.0 * p.a3 * rho + 4.0 * p.a4 * rho2;
    r.Hx = gp_over_rho * x;
    r.Hy = gp_over_rho * y;
    double c = rho > 0.0 ? (3.0 * p.a3 / rho + 8.0 * p.a4) : 8.0 * p.a4;
    // d/dx (gp_over_rho) = c' x with c' = d(gp_over_rho)/drho / rho
    r.Hxx = gp_over_rho + c * x * x;
    r.Hyy = gp_over_rho + c * y * y;
    r.Hxy = c * x * y;
    if (rho == 0.0) { r.Hxy = 0.0; }
    return r;
}

// --- gridded profiles: lattice derivatives + Catmull-Rom interpolation

double cr_weight(double t, int k) {
    // Catmull-Rom kernel weights for the 4 support points, t in [0,1)
    switch (k) {
        case 0: return 0.5 * (-t + 2 * t * t - t * t * t);
        case 1: return 0.5 * (2 - 5 * t * t + 3 * t * t * t);
        case 2: return 0.5 * (t + 4 * t * t - 3 * t * t * t);
        default: return 0.5 * (-t * t + t * t * t);
    }
}

void fill_grid_derivatives(GridProfile& g) {
    const int nx = g.nx, ny = g.ny;
    auto idx = [nx](int i, int j) { return static_cast<std::size_t>(j) * nx + i; };
    auto d1 = [](auto get, int i, int n, double h) {
        // fourth-order central, second-order one-sided at the edges
        if (i >= 2 && i + 2 < n)
            return (-get(i + 2) + 8 * get(i + 1) - 8 * get(i - 1) + get(i - 2)) / (12 * h);
        if (i == 0) return (-3 * get(0) + 4 * get(1) - get(2)) / (2 * h);
        if (i == 1) return (get(2) - get(0)) / (2 * h);
        if (i == n - 1) return (3 * get(n - 1) - 4 * get(n - 2) + get(n - 3)) / (2 * h);
        return (get(n - 1) - get(n - 3)) / (2 * h);
    };
    g.d10.resize(g.values.size());
    g.d01.resize(g.values.size());
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            g.d10[idx(i, j)] = d1([&](int k) { return g.at(k, j); }, i, nx, g.dx);
            g.d01[idx(i, j)] = d1([&](int k) { return g.at(i, k); }, j, ny, g.dy);
        }
    g.d20.resize(g.values.size());
    g.d11.resize(g.values.size());
    g.d02.resize(g.values.size());
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            g.d20[idx(i, j)] = d1([&](int k) { return g.d10[idx(k, j)]; }, i, nx, g.dx);
            g.d11[idx(i, j)] = d1([&](int k) { return g.d10[idx(i, k)]; }, j, ny, g.dy);
            g.d02[idx(i, j)] = d1([&](int k) { return g.d01[idx(i, k)]; }, j, ny, g.dy);
        }
}

double grid_interp(const GridProfile& g, const std::vector<double>& field,
                   double x, double y) {
    const int nx = g.nx, ny = g.ny;
    double fx = (x - g.x0) / g.dx, fy = (y - g.y0) / g.dy;
    if (fx < 0 || fx > nx - 1 || fy < 0 || fy > ny - 1)
        throw GeometryError("grid profile evaluated outside its lattice");
    int i0 = std::clamp(static_cast<int>(std::floor(fx)), 0, nx - 2);
    int j0 = std::clamp(static_cast<int>(std::floor(fy)), 0, ny - 2);
    double tx = fx - i0, ty = fy - j0;
    double s = 0.0;
    for (int a = 0; a < 4; ++a) {
        int i = std::clamp(i0 - 1 + a, 0, nx - 1);
        double wa = cr_weight(tx, a);
        double row = 0.0;
        for (int b = 0; b < 4; ++b) {
            int j = std::clamp(j0 - 1 + b, 0, ny - 1);
            row += cr_weight(ty, b) * field[static_cast<std::size_t>(j) * nx + i];
        }
        s += wa * row;
    }
    return s;
}

} // namespace

HeightProfile HeightProfile::flat(double offset) { return HeightProfile(FlatProfile{offset}); }

HeightProfile HeightProfile::sphere(double radius, double offset) {
    if (!(radius > 0.0)) throw DomainError("sphere radius must be positive");
    return HeightProfile(SphereProfile{radius, offset});
}

HeightProfile HeightProfile::cylinder(double radius, double axis_angle, double offset) {
    if (!(radius > 0.0)) throw DomainError("cylinder radius must be positive");
    return HeightProfile(CylinderProfile{radius, axis_angle, offset});
}

HeightProfile HeightProfile::hyperboloid(double radius, double lambda, double offset) {
    if (!(radius > 0.0) || !(lambda > 0.0))
        throw DomainError("hyperboloid parameters must be positive");
    return HeightProfile(HyperboloidProfile{radius, lambda, offset});
}

HeightProfile HeightProfile::polynomial(double offset, std::vector<PolynomialTerm> terms) {
    for (const auto& t : terms)
        if (t.ix < 0 || t.iy < 0 || t.ix + t.iy > 4)
            throw DomainError("polynomial terms limited to total degree 4");
    return HeightProfile(PolynomialProfile{offset, std::move(terms)});
}

HeightProfile HeightProfile::radial_polynomial(double offset, double a2, double a3, double a4) {
    return HeightProfile(RadialPolynomialProfile{offset, a2, a3, a4});
}

HeightProfile HeightProfile::grid(GridProfile g) {
    if (g.nx < 5 || g.ny < 5)
        throw DomainError("grid profile needs at least 5x5 samples");
    if (g.values.size() != static_cast<std::size_t>(g.nx) * g.ny)
        throw DomainError("grid profile value count does not match dimensions");
    fill_grid_derivatives(g);
    return HeightProfile(std::move(g));
}

ProfilePoint HeightProfile::eval(double x, double y) const {
    return std::visit(
        [&](const auto& k) -> ProfilePoint {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, FlatProfile>) return eval_flat(k, x, y);
            else if constexpr (std::is_same_v<T, SphereProfile>) return eval_sphere(k, x, y);
            else if constexpr (std::is_same_v<T, CylinderProfile>) return eval_cylinder(k, x, y);
            else if constexpr (std::is_same_v<T, HyperboloidProfile>) return eval_hyperboloid(k, x, y);
            else if constexpr (std::is_same_v<T, PolynomialProfile>) return eval_polynomial(k, x, y);
            else if constexpr (std::is_same_v<T, RadialPolynomialProfile>) return eval_radial(k, x, y);
            else if constexpr (std::is_same_v<T, GridProfile>) {
                ProfilePoint r;
                r.H = grid_interp(k, k.values, x, y);
                r.Hx = grid_interp(k, k.d10, x, y);
                r.Hy = grid_interp(k, k.d01, x, y);
                r.Hxx = grid_interp(k, k.d20, x, y);
                r.Hxy = grid_interp(k, k.d11, x, y);
                r.Hyy = grid_interp(k, k.d02, x, y);
                return r;
            } else {
                static_assert(std::is_same_v<T, TiltedProfile>);
                ProfilePoint b = k.base->eval(x, y);
                ProfilePoint r;
                double e = k.epsilon;
                r.H = b.H - e * (x + b.H * b.Hx);
                r.Hx = b.Hx - e * (1.0 + b.Hx * b.Hx + b.H * b.Hxx);
                r.Hy = b.Hy - e * (b.Hy * b.Hx + b.H * b.Hxy);
                // second derivatives truncated at first order in the base
                // third derivatives; only nested tilts would notice
                r.Hxx = b.Hxx - e * 3.0 * b.Hx * b.Hxx;
                r.Hxy = b.Hxy - e * (b.Hxx * b.Hy + b.Hx * b.Hxy);
                r.Hyy = b.Hyy - e * b.Hyy * b.Hx;
                return r;
            }
        },
        kind_);
}

double HeightProfile::patch_radius(double slope_cap) const {
    return std::visit(
        [&](const auto& k) -> double {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, SphereProfile>) {
                double f = slope_cap / std::sqrt(1.0 + slope_cap * slope_cap);
                return k.radius * f;
            } else if constexpr (std::is_same_v<T, CylinderProfile>) {
                double f = slope_cap / std::sqrt(1.0 + slope_cap * slope_cap);
                return k.radius * f;    // strip half-width; used as a radial bound
            } else if constexpr (std::is_same_v<T, HyperboloidProfile>) {
                if (slope_cap >= k.lambda) return kInf;
                double c = slope_cap;
                return c * k.radius / (k.lambda * std::sqrt(k.lambda * k.lambda - c * c));
            } else if constexpr (std::is_same_v<T, GridProfile>) {
                double rx = std::min(-k.x0, k.x0 + (k.nx - 1) * k.dx);
                double ry = std::min(-k.y0, k.y0 + (k.ny - 1) * k.dy);
                return std::max(0.0, std::min(rx, ry));
            } else if constexpr (std::is_same_v<T, TiltedProfile>) {
                return k.base->patch_radius(slope_cap);
            } else {
                (void)k;
                return kInf;
            }
        },
        kind_);
}

std::string HeightProfile::kind_name() const {
    return std::visit(
        [](const auto& k) -> std::string {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, FlatProfile>) return "flat";
            else if constexpr (std::is_same_v<T, SphereProfile>) return "sphere";
            else if constexpr (std::is_same_v<T, CylinderProfile>) return "cylinder";
            else if constexpr (std::is_same_v<T, HyperboloidProfile>) return "hyperboloid";
            else if constexpr (std::is_same_v<T, PolynomialProfile>) return "polynomial";
            else if constexpr (std::is_same_v<T, RadialPolynomialProfile>) return "radial-polynomial";
            else if constexpr (std::is_same_v<T, GridProfile>) return "grid";
            else return "tilted(" + k.base->kind_name() + ")";
        },
        kind_);
}

HeightProfile tilt_transform(const HeightProfile& p, double epsilon) {
    if (std::abs(epsilon) > 0.1)
        throw DomainError("tilt angle limited to |eps| <= 0.1");
    if (epsilon == 0.0) return p;
    TiltedProfile t;
    t.base = std::make_shared<HeightProfile>(p);
    t.epsilon = epsilon;
    return HeightProfile(t);
}

namespace {

HeightProfile profile_from_json_obj(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    double offset = j.value("offset", 0.0);
    if (kind == "flat") return HeightProfile::flat(offset);
    if (kind == "sphere") return HeightProfile::sphere(j.at("radius").get<double>(), offset);
    if (kind == "cylinder")
        return HeightProfile::cylinder(j.at("radius").get<double>(),
                                       j.value("axis_angle", 0.0), offset);
    if (kind == "hyperboloid")
        return HeightProfile::hyperboloid(j.at("radius").get<double>(),
                                          j.at("lambda").get<double>(), offset);
    if (kind == "polynomial") {
        std::vector<PolynomialTerm> terms;
        for (const auto& t : j.at("terms"))
            terms.push_back({t.at("i").get<int>(), t.at("j").get<int>(), t.at("c").get<double>()});
        return HeightProfile::polynomial(offset, std::move(terms));
    }
    if (kind == "radial-polynomial")
        return HeightProfile::radial_polynomial(offset, j.value("a2", 0.0),
                                                j.value("a3", 0.0), j.value("a4", 0.0));
    if (kind == "grid") return grid_from_csv_file(j.at("csv").get<std::string>());
    throw DomainError("unknown profile kind '" + kind + "'");
}

} // namespace

HeightProfile profile_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    return profile_from_json_obj(j);
}

HeightProfile profile_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open profile descriptor " + path);
    nlohmann::json j;
    in >> j;
    return profile_from_json_obj(j);
}

HeightProfile grid_from_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open grid CSV " + path);
    std::vector<double> xs, ys, hs;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first && (line.find("x") != std::string::npos || line.find("#") == 0)) {
            first = false;
            continue;    // header
        }
        first = false;
        std::istringstream ls(line);
        std::string tok;
        double v[3];
        for (int i = 0; i < 3; ++i) {
            if (!std::getline(ls, tok, ',')) throw DomainError("grid CSV needs x,y,H columns");
            v[i] = std::stod(tok);
        }
        xs.push_back(v[0]);
        ys.push_back(v[1]);
        hs.push_back(v[2]);
    }
    if (hs.empty()) throw DomainError("grid CSV is empty");
    // row-major lattice: x varies fastest
    int nx = 1;
    while (nx < static_cast<int>(xs.size()) && xs[nx] != xs[0]) ++nx;
    int ny = static_cast<int>(xs.size()) / nx;
    if (nx * ny != static_cast<int>(xs.size()))
        throw DomainError("grid CSV does not form a complete lattice");
    GridProfile g;
    g.nx = nx;
    g.ny = ny;
    g.x0 = xs[0];
    g.y0 = ys[0];
    g.dx = nx > 1 ? xs[1] - xs[0] : 1.0;
    g.dy = ny > 1 ? ys[static_cast<std::size_t>(nx)] - ys[0] : 1.0;
    if (!(g.dx > 0.0) || !(g.dy > 0.0))
        throw DomainError("grid CSV must be sorted with increasing x then y");
    g.values = std::move(hs);
    return HeightProfile::grid(std::move(g));
}

} // namespace gradpfa
