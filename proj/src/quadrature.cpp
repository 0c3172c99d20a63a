#include "gradpfa/quadrature.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

#include "gradpfa/errors.hpp"

namespace gradpfa {

namespace {
constexpr double kPi = std::numbers::pi;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.resize(n);
    weights.resize(n);
    // Newton iteration on P_n, symmetric rule
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

void gauss_laguerre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    // Golub-Welsch on the Jacobi matrix of the Laguerre recurrence
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        J(i, i) = 2.0 * i + 1.0;
        if (i + 1 < n) {
            double b = static_cast<double>(i + 1);
            J(i, i + 1) = b;
            J(i + 1, i) = b;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < n; ++i) {
        nodes[i] = es.eigenvalues()(i);
        double v0 = es.eigenvectors()(0, i);
        weights[i] = v0 * v0;    // mu_0 = Int e^{-x} dx = 1
    }
}

namespace {

// Gauss-Kronrod 15/7 pair on [-1,1]
const double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
const double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
const double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

void gk15(const Integrand1D& f, double a, double b, double& val, double& err) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fc = f(c);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        double x = h * kXgk[j];
        double f1 = f(c - x), f2 = f(c + x);
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    val = resk * h;
    double diff = std::abs(resk - resg) * h;
    err = diff;
}

struct Panel {
    double a, b, val, err;
    bool operator<(const Panel& o) const { return err < o.err; }
};

} // namespace

QuadratureResult integrate_1d(const Integrand1D& f, double a, double b,
                              double rel_tol, double abs_tol, int max_panels) {
    QuadratureResult res;
    std::priority_queue<Panel> pq;
    Panel p{a, b, 0, 0};
    gk15(f, a, b, p.val, p.err);
    res.evaluations = 15;
    double total = p.val, toterr = p.err;
    pq.push(p);
    int panels = 1;
    while (toterr > std::max(abs_tol, rel_tol * std::abs(total)) && panels < max_panels) {
        Panel top = pq.top();
        pq.pop();
        double mid = 0.5 * (top.a + top.b);
        Panel l{top.a, mid, 0, 0}, r{mid, top.b, 0, 0};
        gk15(f, l.a, l.b, l.val, l.err);
        gk15(f, r.a, r.b, r.val, r.err);
        res.evaluations += 30;
        total += l.val + r.val - top.val;
        toterr += l.err + r.err - top.err;
        pq.push(l);
        pq.push(r);
        ++panels;
    }
    res.value = total;
    res.error = toterr;
    res.converged = toterr <= std::max(abs_tol, rel_tol * std::abs(total)) ||
                    toterr <= 1e-15 * std::abs(total);
    return res;
}

namespace {

struct Cell {
    Rect r;
    double val = 0.0;
    double err = 0.0;
    long id = 0;
};

struct CellOrder {
    bool operator()(const Cell& a, const Cell& b) const {
        if (a.err != b.err) return a.err < b.err;
        return a.id > b.id;    // older cell wins ties
    }
};

class TensorRule {
public:
    explicit TensorRule(int order) {
        gauss_legendre(order, x_, w_);
        gauss_legendre(2 * order, x2_, w2_);
    }

    // value with order n and error vs order 2n
    void eval(const Integrand2D& f, const Rect& r, double& val, double& err,
              long& evals) const {
        val = tensor(f, r, x_, w_);
        double v2 = tensor(f, r, x2_, w2_);
        evals += static_cast<long>(x_.size() * x_.size() + x2_.size() * x2_.size());
        err = std::abs(v2 - val);
        val = v2;    // keep the better estimate
    }

private:
    static double tensor(const Integrand2D& f, const Rect& r,
                         const std::vector<double>& x, const std::vector<double>& w) {
        double hx = 0.5 * (r.x1 - r.x0), cx = 0.5 * (r.x0 + r.x1);
        double hy = 0.5 * (r.y1 - r.y0), cy = 0.5 * (r.y0 + r.y1);
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            double xi = cx + hx * x[i];
            double row = 0.0;
            for (std::size_t j = 0; j < x.size(); ++j)
                row += w[j] * f(xi, cy + hy * x[j]);
            s += w[i] * row;
        }
        return s * hx * hy;
    }

    std::vector<double> x_, w_, x2_, w2_;
};

QuadratureResult adaptive_2d(const Integrand2D& f, const Rect& r0, double rel_tol,
                             int order, int max_cells) {
    TensorRule rule(order);
    QuadratureResult res;
    std::priority_queue<Cell, std::vector<Cell>, CellOrder> pq;
    std::vector<Cell> done;
    long next_id = 0;

    Cell c{r0, 0, 0, next_id++};
    rule.eval(f, c.r, c.val, c.err, res.evaluations);
    double total = c.val, toterr = c.err;
    pq.push(c);
    int ncells = 1;

    while (toterr > rel_tol * std::max(std::abs(total), 1e-300) && ncells < max_cells) {
        Cell top = pq.top();
        pq.pop();
        if (top.err <= 1e-18 * std::abs(total)) {    // nothing left worth refining
            done.push_back(top);
            if (pq.empty()) break;
            continue;
        }
        double xm = 0.5 * (top.r.x0 + top.r.x1);
        double ym = 0.5 * (top.r.y0 + top.r.y1);
        Rect quads[4] = {{top.r.x0, xm, top.r.y0, ym},
                         {xm, top.r.x1, top.r.y0, ym},
                         {top.r.x0, xm, ym, top.r.y1},
                         {xm, top.r.x1, ym, top.r.y1}};
        total -= top.val;
        toterr -= top.err;
        for (const Rect& q : quads) {
            Cell child{q, 0, 0, next_id++};
            rule.eval(f, child.r, child.val, child.err, res.evaluations);
            total += child.val;
            toterr += child.err;
            pq.push(child);
        }
        ncells += 3;
    }
    // deterministic compensated re-summation in cell id order
    while (!pq.empty()) {
        done.push_back(pq.top());
        pq.pop();
    }
    std::sort(done.begin(), done.end(),
              [](const Cell& a, const Cell& b) { return a.id < b.id; });
    double sum = 0.0, comp = 0.0, errsum = 0.0;
    for (const Cell& c2 : done) {
        double y = c2.val - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        errsum += c2.err;
    }
    res.value = sum;
    res.error = errsum;
    res.converged = errsum <= rel_tol * std::max(std::abs(sum), 1e-300) * 1.5 ||
                    errsum <= 1e-14 * std::abs(sum);
    return res;
}

} // namespace

QuadratureResult integrate_rectangle(const Integrand2D& f, const Rect& r,
                                     double rel_tol, int order, int max_cells) {
    if (!(r.x1 > r.x0) || !(r.y1 > r.y0))
        throw DomainError("integration rectangle must have positive extent");
    return adaptive_2d(f, r, rel_tol, order, max_cells);
}

QuadratureResult integrate_disk(const Integrand2D& f, double cx, double cy,
                                double radius, double rel_tol, int order,
                                int max_cells) {
    if (!(radius > 0.0)) throw DomainError("disk radius must be positive");
    auto polar = [&](double rr, double phi) {
        return rr * f(cx + rr * std::cos(phi), cy + rr * std::sin(phi));
    };
    Rect pr{0.0, radius, 0.0, 2.0 * kPi};
    return adaptive_2d(polar, pr, rel_tol, order, max_cells);
}

double fixed_grid_rectangle(const Integrand2D& f, const Rect& r, int panels,
                            int order) {
    std::vector<double> x, w;
    gauss_legendre(order, x, w);
    double hx = (r.x1 - r.x0) / panels, hy = (r.y1 - r.y0) / panels;
    double sum = 0.0, comp = 0.0;
    for (int px = 0; px < panels; ++px) {
        for (int py = 0; py < panels; ++py) {
            double ax = r.x0 + px * hx, ay = r.y0 + py * hy;
            double cxm = ax + 0.5 * hx, cym = ay + 0.5 * hy;
            double cell = 0.0;
            for (int i = 0; i < order; ++i) {
                double xi = cxm + 0.5 * hx * x[i];
                double row = 0.0;
                for (int j = 0; j < order; ++j)
                    row += w[j] * f(xi, cym + 0.5 * hy * x[j]);
                cell += w[i] * row;
            }
            cell *= 0.25 * hx * hy;
            double y = cell - comp;
            double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
    }
    return sum;
}

} // namespace gradpfa
