#include "pointpair/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace pointpair {

Point operator+(const Point& a, const Point& b) {
    Point r = a;
    for (int i = 0; i < a.dim(); ++i) r[i] += b[i];
    return r;
}

Point operator-(const Point& a, const Point& b) {
    Point r = a;
    for (int i = 0; i < a.dim(); ++i) r[i] -= b[i];
    return r;
}

Point operator*(double s, const Point& a) {
    Point r = a;
    for (int i = 0; i < a.dim(); ++i) r[i] *= s;
    return r;
}

double dot(const Point& a, const Point& b) {
    double s = 0;
    for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

double norm_sq(const Point& a) { return dot(a, a); }
double norm(const Point& a) { return std::sqrt(norm_sq(a)); }
double dist(const Point& a, const Point& b) { return norm(a - b); }

namespace {

void check_dim(int n) {
    if (n < kMinDim || n > kMaxDim)
        throw std::invalid_argument("dimension must be in [2, 8], got " + std::to_string(n));
}

void check_point(const DomainShape& d, const Point& x) {
    if (x.dim() != d.dim)
        throw std::invalid_argument("point dimension " + std::to_string(x.dim()) +
                                    " does not match domain dimension " + std::to_string(d.dim));
}

Point axis(int n, int i, double v) {
    Point p = Point::zero(n);
    p[i] = v;
    return p;
}

}  // namespace

DomainShape DomainShape::half_space(int n) {
    check_dim(n);
    DomainShape d;
    d.kind = DomainKind::HalfSpace;
    d.dim = n;
    return d;
}

DomainShape DomainShape::unit_ball(int n) {
    check_dim(n);
    DomainShape d;
    d.kind = DomainKind::UnitBall;
    d.dim = n;
    return d;
}

DomainShape DomainShape::punctured(int n, std::vector<Point> ps) {
    check_dim(n);
    if (ps.empty()) throw std::invalid_argument("punctured domain needs at least one puncture");
    for (const Point& p : ps)
        if (p.dim() != n) throw std::invalid_argument("puncture dimension mismatch");
    for (size_t i = 0; i < ps.size(); ++i)
        for (size_t j = i + 1; j < ps.size(); ++j)
            if (ps[i] == ps[j]) throw std::invalid_argument("punctures must be distinct");
    DomainShape d;
    d.kind = DomainKind::PuncturedSpace;
    d.dim = n;
    d.punctures = std::move(ps);
    return d;
}

DomainShape DomainShape::strip(int n, double r) {
    check_dim(n);
    if (!(r > 0)) throw std::invalid_argument("strip radius must be positive");
    DomainShape d;
    d.kind = DomainKind::Strip;
    d.dim = n;
    d.strip_radius = r;
    return d;
}

DomainShape DomainShape::box_minus_ball(int n, double L, double r) {
    check_dim(n);
    if (!(L > 0)) throw std::invalid_argument("box half-side must be positive");
    if (!(r > 0 && r < L))
        throw std::invalid_argument("removed ball radius must satisfy 0 < r < L");
    DomainShape d;
    d.kind = DomainKind::BallComplementInBox;
    d.dim = n;
    d.box_halfside = L;
    d.ball_radius = r;
    return d;
}

Point DomainShape::removed_ball_center() const {
    return axis(dim, 0, -box_halfside);
}

bool DomainShape::is_convex() const {
    switch (kind) {
        case DomainKind::HalfSpace:
        case DomainKind::UnitBall:
        case DomainKind::Strip:
            return true;
        default:
            return false;
    }
}

std::string DomainShape::label() const {
    std::string s;
    switch (kind) {
        case DomainKind::HalfSpace: s = "halfspace"; break;
        case DomainKind::UnitBall: s = "ball"; break;
        case DomainKind::PuncturedSpace:
            s = "punctured(" + std::to_string(punctures.size()) + ")";
            break;
        case DomainKind::Strip: s = "strip"; break;
        case DomainKind::BallComplementInBox: s = "boxminusball"; break;
    }
    return s + " n=" + std::to_string(dim);
}

bool contains(const DomainShape& d, const Point& x) {
    check_point(d, x);
    switch (d.kind) {
        case DomainKind::HalfSpace:
            return x[d.dim - 1] > 0;
        case DomainKind::UnitBall:
            return norm(x) < 1;
        case DomainKind::PuncturedSpace:
            for (const Point& p : d.punctures)
                if (p == x) return false;
            return true;
        case DomainKind::Strip:
            return x[0] > 0 && x[0] < 2 * d.strip_radius;
        case DomainKind::BallComplementInBox: {
            for (int i = 0; i < d.dim; ++i)
                if (std::abs(x[i]) >= d.box_halfside) return false;
            return dist(x, d.removed_ball_center()) > d.ball_radius;
        }
    }
    return false;
}

double dist_to_boundary(const DomainShape& d, const Point& x) {
    check_point(d, x);
    double v = 0;
    switch (d.kind) {
        case DomainKind::HalfSpace:
            v = x[d.dim - 1];
            break;
        case DomainKind::UnitBall:
            v = 1 - norm(x);
            break;
        case DomainKind::PuncturedSpace: {
            v = dist(x, d.punctures[0]);
            for (size_t i = 1; i < d.punctures.size(); ++i)
                v = std::min(v, dist(x, d.punctures[i]));
            break;
        }
        case DomainKind::Strip:
            v = std::min(x[0], 2 * d.strip_radius - x[0]);
            break;
        case DomainKind::BallComplementInBox: {
            v = d.box_halfside - std::abs(x[0]);
            for (int i = 1; i < d.dim; ++i)
                v = std::min(v, d.box_halfside - std::abs(x[i]));
            v = std::min(v, dist(x, d.removed_ball_center()) - d.ball_radius);
            break;
        }
    }
    if (!(v > 0))
        throw std::domain_error("point is on or outside the boundary of " + d.label());
    return v;
}

Point nearest_boundary_point(const DomainShape& d, const Point& x) {
    dist_to_boundary(d, x);  // membership check
    switch (d.kind) {
        case DomainKind::HalfSpace: {
            Point z = x;
            z[d.dim - 1] = 0;
            return z;
        }
        case DomainKind::UnitBall: {
            double r = norm(x);
            if (r == 0) return axis(d.dim, 0, 1.0);  // center tie-break: +e_1
            return (1.0 / r) * x;
        }
        case DomainKind::PuncturedSpace: {
            size_t best = 0;
            double bd = dist(x, d.punctures[0]);
            for (size_t i = 1; i < d.punctures.size(); ++i) {
                double di = dist(x, d.punctures[i]);
                if (di < bd) {
                    bd = di;
                    best = i;
                }
            }
            return d.punctures[best];
        }
        case DomainKind::Strip: {
            Point z = x;
            // midline tie goes to the x_1 = 0 face
            z[0] = (x[0] <= d.strip_radius) ? 0.0 : 2 * d.strip_radius;
            return z;
        }
        case DomainKind::BallComplementInBox: {
            // candidates: each box face in coordinate order, then the sphere
            Point best = Point::zero(d.dim);
            double bd = 0;
            bool have = false;
            const Point q = d.removed_ball_center();
            for (int i = 0; i < d.dim; ++i) {
                for (double side : {-d.box_halfside, d.box_halfside}) {
                    Point z = x;
                    z[i] = side;
                    // face points inside the removed disk are not boundary
                    if (dist(z, q) < d.ball_radius) continue;
                    double di = dist(x, z);
                    if (!have || di < bd) {
                        bd = di;
                        best = z;
                        have = true;
                    }
                }
            }
            Point u = x - q;
            Point zs = q + (d.ball_radius / norm(u)) * u;
            double ds = dist(x, zs);
            if (!have || ds < bd) best = zs;
            return best;
        }
    }
    throw std::logic_error("unreachable");
}

Point reflect_across_boundary(const DomainShape& d, const Point& x, int face) {
    check_point(d, x);
    switch (d.kind) {
        case DomainKind::HalfSpace: {
            Point z = x;
            z[d.dim - 1] = -z[d.dim - 1];
            return z;
        }
        case DomainKind::Strip: {
            if (face != 0 && face != 1)
                throw std::invalid_argument("strip face must be 0 (x1=0) or 1 (x1=2r)");
            Point z = x;
            z[0] = (face == 0) ? -z[0] : 4 * d.strip_radius - z[0];
            return z;
        }
        default:
            throw std::invalid_argument("reflection requires a flat boundary face");
    }
}

Point project_to_boundary(const DomainShape& d, const Point& x) {
    check_point(d, x);
    switch (d.kind) {
        case DomainKind::HalfSpace: {
            Point z = x;
            z[d.dim - 1] = 0;
            return z;
        }
        case DomainKind::UnitBall: {
            double r = norm(x);
            if (r == 0) return axis(d.dim, 0, 1.0);
            return (1.0 / r) * x;
        }
        case DomainKind::PuncturedSpace:
            return nearest_boundary_point(d, contains(d, x) ? x : x + axis(d.dim, 0, 1e-9));
        case DomainKind::Strip: {
            Point z = x;
            z[0] = (x[0] <= d.strip_radius) ? 0.0 : 2 * d.strip_radius;
            return z;
        }
        case DomainKind::BallComplementInBox: {
            const double L = d.box_halfside;
            const Point q = d.removed_ball_center();
            // clamp into the closed box first, then push to the nearest face
            Point z = x;
            for (int i = 0; i < d.dim; ++i) z[i] = std::clamp(z[i], -L, L);
            int fi = 0;
            double fsign = -1, gap = 2 * L;
            for (int i = 0; i < d.dim; ++i) {
                if (L - z[i] < gap) { gap = L - z[i]; fi = i; fsign = 1; }
                if (z[i] + L < gap) { gap = z[i] + L; fi = i; fsign = -1; }
            }
            Point zf = z;
            zf[fi] = fsign * L;
            if (dist(zf, q) >= d.ball_radius) return zf;
            // face landing inside the removed disk: take the sphere instead;
            // the clamped source has (z - q)_1 >= 0, so the radial point stays
            // inside the box (coordinates bounded by r < L)
            Point u = (z == q) ? axis(d.dim, 1, 1.0) : z - q;
            return q + (d.ball_radius / norm(u)) * u;
        }
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// sampling

namespace {

Point unit_direction(SplitMix64& g, int n) {
    for (;;) {
        Point v = Point::zero(n);
        for (int i = 0; i < n; ++i) v[i] = g.gaussian();
        double r = norm(v);
        if (r > 1e-6) return (1.0 / r) * v;
    }
}

}  // namespace

Point PairSampler::point(SplitMix64& g) const {
    const int n = domain.dim;
    const double D = scale_decades;
    switch (domain.kind) {
        case DomainKind::HalfSpace: {
            Point p = Point::zero(n);
            double h = g.log_uniform(-D / 2, D / 2);
            for (int i = 0; i + 1 < n; ++i) p[i] = h * g.uniform(-4, 4);
            p[n - 1] = h;
            return p;
        }
        case DomainKind::UnitBall: {
            Point dir = unit_direction(g, n);
            if (g.next() & 1) {
                // exactly uniform in the ball
                double r = std::pow(g.u01(), 1.0 / n);
                return r * dir;
            }
            // near-boundary stratum
            double depth = g.log_uniform(-D, -0.3);
            return (1 - depth) * dir;
        }
        case DomainKind::PuncturedSpace: {
            const Point& c = domain.punctures[g.next() % domain.punctures.size()];
            for (;;) {
                double r = g.log_uniform(-D / 2, D / 2);
                Point p = c + r * unit_direction(g, n);
                if (contains(domain, p)) return p;
            }
        }
        case DomainKind::Strip: {
            const double r = domain.strip_radius;
            Point p = Point::zero(n);
            if (g.next() & 1) {
                p[0] = g.uniform(0.05 * r, 1.95 * r);
            } else {
                double depth = 2 * r * g.log_uniform(-D, -0.31);
                p[0] = (g.next() & 1) ? depth : 2 * r - depth;
            }
            double lat = 2 * r * g.log_uniform(0, D / 2);
            for (int i = 1; i < n; ++i) p[i] = g.uniform(-lat, lat);
            return p;
        }
        case DomainKind::BallComplementInBox: {
            const double L = domain.box_halfside;
            for (int tries = 0; tries < 256; ++tries) {
                Point p = Point::zero(n);
                if (g.next() % 4 == 0) {
                    // near-boundary stratum against a face
                    double depth = L * g.log_uniform(-D, -1);
                    int fi = static_cast<int>(g.next() % n);
                    double sign = (g.next() & 1) ? 1.0 : -1.0;
                    for (int i = 0; i < n; ++i) p[i] = g.uniform(-0.98 * L, 0.98 * L);
                    p[fi] = sign * (L - depth);
                } else {
                    for (int i = 0; i < n; ++i) p[i] = g.uniform(-L, L);
                }
                if (contains(domain, p) && dist_to_boundary(domain, p) > 0) return p;
            }
            throw std::runtime_error("box-minus-ball sampling failed to find an interior point");
        }
    }
    throw std::logic_error("unreachable");
}

std::pair<Point, Point> PairSampler::pair(uint64_t index) const {
    SplitMix64 g = stream_for(seed, index);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Point x = point(g);
        Point y = Point::zero(domain.dim);
        switch (g.next() % 4) {
            case 0: {  // near-coincident: |x-y| well below d(x)
                double t = dist_to_boundary(domain, x) * g.log_uniform(-scale_decades, -0.5);
                Point dir = unit_direction(g, domain.dim);
                y = x + t * dir;
                for (int h = 0; h < 48 && !contains(domain, y); ++h) {
                    t *= 0.5;
                    y = x + t * dir;
                }
                break;
            }
            case 1: {  // comparable: |x-y| of the order of d(x)
                double t = dist_to_boundary(domain, x) * g.uniform(0.2, 3.0);
                Point dir = unit_direction(g, domain.dim);
                y = x + t * dir;
                for (int h = 0; h < 48 && !contains(domain, y); ++h) {
                    t *= 0.5;
                    y = x + t * dir;
                }
                break;
            }
            default:  // independent draw (covers the far regime)
                y = point(g);
        }
        if (!contains(domain, y)) continue;
        double scale = norm(x) + norm(y) + dist_to_boundary(domain, x) + dist_to_boundary(domain, y);
        if (dist(x, y) > kPairEps * scale) return {x, y};
    }
    throw std::runtime_error("pair sampling failed to produce a distinct pair");
}

std::array<Point, 3> PairSampler::triple(uint64_t index) const {
    SplitMix64 g = stream_for(seed ^ 0xA5A5A5A5A5A5A5A5ULL, index);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Point x = point(g);
        Point y = point(g);
        Point z = point(g);
        double scale = norm(x) + norm(y) + dist_to_boundary(domain, x) + dist_to_boundary(domain, y);
        if (dist(x, y) > kPairEps * scale) return {x, y, z};
    }
    throw std::runtime_error("triple sampling failed to produce a distinct pair");
}

}  // namespace pointpair
