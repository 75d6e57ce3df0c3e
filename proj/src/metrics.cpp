#include "pointpair/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pointpair {

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0) || !std::isfinite(alpha))
        throw std::invalid_argument("alpha must be a positive finite number");
}

void require_kind(const DomainShape& d, DomainKind k, const char* what) {
    if (d.kind != k) throw std::invalid_argument(std::string(what) + " is only defined on " +
                                                 (k == DomainKind::HalfSpace ? "the half-space" : "the unit ball"));
}

}  // namespace

double gpp(const DomainShape& d, double alpha, const Point& x, const Point& y) {
    check_alpha(alpha);
    double dx = dist_to_boundary(d, x);
    double dy = dist_to_boundary(d, y);
    double r = dist(x, y);
    if (r == 0) return 0;
    // the last operation is a correctly rounded sqrt, so exact ratios such as
    // rr/(rr+q) = 1/2 come out correctly rounded
    double rr = r * r, q = alpha * dx * dy;
    double den = rr + q;
    if (rr > 0 && std::isfinite(den)) return std::sqrt(rr / den);
    // scales beyond ~1e150: normalize by r before squaring
    double u = std::sqrt(alpha) * (std::sqrt(dx) / r) * std::sqrt(dy);
    return 1.0 / std::hypot(1.0, u);
}

double point_pair(const DomainShape& d, const Point& x, const Point& y) {
    return gpp(d, 4.0, x, y);
}

double j_metric(const DomainShape& d, const Point& x, const Point& y) {
    double m = std::min(dist_to_boundary(d, x), dist_to_boundary(d, y));
    return std::log1p(dist(x, y) / m);
}

double j_star(const DomainShape& d, const Point& x, const Point& y) {
    double m = std::min(dist_to_boundary(d, x), dist_to_boundary(d, y));
    double r = dist(x, y);
    if (r == 0) return 0;
    return r / (r + 2 * m);
}

double t_metric(const DomainShape& d, const Point& x, const Point& y) {
    double dx = dist_to_boundary(d, x);
    double dy = dist_to_boundary(d, y);
    double r = dist(x, y);
    if (r == 0) return 0;
    return r / (r + dx + dy);
}

// ---------------------------------------------------------------------------
// s metric

namespace {

double chord_sum(const Point& x, const Point& y, const Point& z) {
    return dist(x, z) + dist(z, y);
}

// golden-section minimum of f over [a, b]
template <class F>
double golden_min(F f, double a, double b, double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double h = b - a;
    double c = b - inv_phi * h, dpt = a + inv_phi * h;
    double fc = f(c), fd = f(dpt);
    while (h > tol) {
        if (fc < fd) {
            b = dpt;
            dpt = c;
            fd = fc;
            h = b - a;
            c = b - inv_phi * h;
            fc = f(c);
        } else {
            a = c;
            c = dpt;
            fc = fd;
            h = b - a;
            dpt = a + inv_phi * h;
            fd = f(dpt);
        }
    }
    return std::min(fc, fd);
}

// infimum of |x-z|+|z-y| over the unit sphere: the minimizer lies in the
// plane through x, y and the origin, so reduce to the boundary angle there
double ball_chord_inf(const DomainShape& d, const Point& x, const Point& y) {
    const int n = d.dim;
    Point u = Point::zero(n), v = Point::zero(n);
    double nx = norm(x), ny = norm(y);
    if (nx < 1e-300 && ny < 1e-300) return 2.0;  // both at the center
    u = (nx >= ny) ? (1.0 / nx) * x : (1.0 / ny) * y;
    Point w = (nx >= ny) ? y : x;
    Point w_perp = w - dot(w, u) * u;
    double npe = norm(w_perp);
    if (npe > 1e-14 * std::max(1.0, norm(w))) {
        v = (1.0 / npe) * w_perp;
    } else {
        // collinear with the center: any orthogonal direction works
        int k = 0;
        for (int i = 1; i < n; ++i)
            if (std::abs(u[i]) < std::abs(u[k])) k = i;
        Point e = Point::zero(n);
        e[k] = 1;
        Point p = e - dot(e, u) * u;
        v = (1.0 / norm(p)) * p;
    }
    const double X1 = dot(x, u), X2 = dot(x, v);
    const double Y1 = dot(y, u), Y2 = dot(y, v);
    auto f = [&](double th) {
        double c = std::cos(th), s = std::sin(th);
        return std::sqrt((X1 - c) * (X1 - c) + (X2 - s) * (X2 - s)) +
               std::sqrt((Y1 - c) * (Y1 - c) + (Y2 - s) * (Y2 - s));
    };
    constexpr double two_pi = 6.283185307179586476925286766559;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 16; ++k)
        best = std::min(best, golden_min(f, two_pi * k / 16, two_pi * (k + 1) / 16, 1e-10));
    // near-boundary pairs dip sharply near the angles of x and y; when both
    // dips share one sweep window the window is not unimodal, so bracket
    // each dip separately across the midpoint of the short arc between them
    double thx = std::atan2(X2, X1);
    double half = 0.5 * std::remainder(std::atan2(Y2, Y1) - thx, two_pi);
    double m = thx + half;
    double lo = std::min(thx, thx + 2 * half), hi = std::max(thx, thx + 2 * half);
    best = std::min(best, golden_min(f, lo - 0.25, m, 1e-10));
    best = std::min(best, golden_min(f, m, hi + 0.25, 1e-10));
    return best;
}

double brute_chord_inf(const DomainShape& d, const Point& x, const Point& y) {
    const int n = d.dim;
    Point best_z = nearest_boundary_point(d, x);
    double best = chord_sum(x, y, best_z);
    auto consider = [&](const Point& z) {
        double f = chord_sum(x, y, z);
        if (f < best) {
            best = f;
            best_z = z;
        }
    };
    consider(nearest_boundary_point(d, y));
    // dense sweep along the chord, projected onto the boundary
    Point step = y - x;
    for (int i = 0; i <= 100; ++i) {
        double t = -0.5 + 2.0 * i / 100.0;
        consider(project_to_boundary(d, x + t * step));
    }
    if (d.kind == DomainKind::PuncturedSpace) {
        for (const Point& p : d.punctures) consider(p);
        return best;  // the boundary is discrete: the sweep is exhaustive
    }
    if (d.kind == DomainKind::BallComplementInBox) {
        const double L = d.box_halfside;
        const Point q = d.removed_ball_center();
        for (const Point& p : {x, y, 0.5 * (x + y)}) {
            for (int i = 0; i < n; ++i) {
                for (double side : {-L, L}) {
                    Point z = p;
                    z[i] = side;
                    if (dist(z, q) >= d.ball_radius) consider(z);
                }
            }
            Point u = p - q;
            if (norm(u) > 0) consider(q + (d.ball_radius / norm(u)) * u);
        }
        for (int i = 1; i < n; ++i) {
            Point e = Point::zero(n);
            e[i] = d.ball_radius;
            consider(q + e);
            consider(q - e);
        }
    }
    // pattern-search refinement on the boundary via projection
    double scale = std::max({dist(x, y), dist(x, best_z), 1e-30});
    Point w = best_z;
    int dirs = 2 * n + 2;
    Point chord = y - x;
    double nc = norm(chord);
    for (double step_len = 0.5 * scale; step_len > 1e-11 * scale; step_len *= 0.5) {
        bool improved = true;
        int guard = 0;
        while (improved && ++guard < 200) {
            improved = false;
            for (int k = 0; k < dirs; ++k) {
                Point dir = Point::zero(n);
                if (k < 2 * n) {
                    dir[k / 2] = (k % 2) ? -1.0 : 1.0;
                } else if (nc > 0) {
                    dir = ((k % 2) ? -1.0 / nc : 1.0 / nc) * chord;
                } else {
                    continue;
                }
                Point z = project_to_boundary(d, w + step_len * dir);
                double f = chord_sum(x, y, z);
                if (f < best) {
                    best = f;
                    w = z;
                    improved = true;
                }
            }
        }
    }
    return best;
}

}  // namespace

double s_metric(const DomainShape& d, const Point& x, const Point& y, SMode mode, bool* fell_back) {
    if (fell_back) *fell_back = false;
    dist_to_boundary(d, x);
    dist_to_boundary(d, y);
    double r = dist(x, y);
    if (r == 0) return 0;
    if (mode == SMode::Auto) mode = SMode::ClosedForm;
    if (mode == SMode::ClosedForm) {
        switch (d.kind) {
            case DomainKind::HalfSpace:
                return r / dist(x, reflect_across_boundary(d, y));
            case DomainKind::Strip:
                return r / std::min(dist(x, reflect_across_boundary(d, y, 0)),
                                    dist(x, reflect_across_boundary(d, y, 1)));
            case DomainKind::PuncturedSpace: {
                double inf = chord_sum(x, y, d.punctures[0]);
                for (size_t i = 1; i < d.punctures.size(); ++i)
                    inf = std::min(inf, chord_sum(x, y, d.punctures[i]));
                return r / inf;
            }
            case DomainKind::UnitBall:
                return r / ball_chord_inf(d, x, y);
            case DomainKind::BallComplementInBox:
                if (fell_back) *fell_back = true;
                return r / brute_chord_inf(d, x, y);
        }
    }
    return r / brute_chord_inf(d, x, y);
}

// ---------------------------------------------------------------------------
// hyperbolic distances

namespace {

double sh_half_rho(const DomainShape& d, const Point& x, const Point& y) {
    double r = dist(x, y);
    if (d.kind == DomainKind::HalfSpace) {
        double xn = dist_to_boundary(d, x), yn = dist_to_boundary(d, y);
        return 0.5 * r / (std::sqrt(xn) * std::sqrt(yn));
    }
    double dx = dist_to_boundary(d, x), dy = dist_to_boundary(d, y);
    double ax = dx * (2 - dx);  // 1 - |x|^2 without cancellation
    double ay = dy * (2 - dy);
    return r / (std::sqrt(ax) * std::sqrt(ay));
}

}  // namespace

double rho_half_space(const DomainShape& d, const Point& x, const Point& y) {
    require_kind(d, DomainKind::HalfSpace, "rho_half_space");
    return 2 * std::asinh(sh_half_rho(d, x, y));
}

double rho_ball(const DomainShape& d, const Point& x, const Point& y) {
    require_kind(d, DomainKind::UnitBall, "rho_ball");
    return 2 * std::asinh(sh_half_rho(d, x, y));
}

double th_half_rho(const DomainShape& d, const Point& x, const Point& y) {
    if (d.kind != DomainKind::HalfSpace && d.kind != DomainKind::UnitBall)
        throw std::invalid_argument("th_half_rho needs the half-space or the unit ball");
    double sh = sh_half_rho(d, x, y);
    if (std::isinf(sh)) return 1.0;
    return sh / std::sqrt(1.0 + sh * sh);
}

}  // namespace pointpair
