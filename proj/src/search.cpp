#include "pointpair/search.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>

#include "pointpair/metrics.hpp"
#include "pointpair/parallel.hpp"
#include "pointpair/rng.hpp"

namespace pointpair {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double clampd(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

}  // namespace

// ---------------------------------------------------------------------------
// unconstrained parametrizations

int param_dim(const DomainShape& d) { return d.dim; }

Point param_to_point(const DomainShape& d, const double* w) {
    const int n = d.dim;
    Point x = Point::zero(n);
    switch (d.kind) {
        case DomainKind::HalfSpace:
            for (int i = 0; i + 1 < n; ++i) x[i] = w[i];
            x[n - 1] = std::exp(clampd(w[n - 1], -700.0, 700.0));
            return x;
        case DomainKind::UnitBall: {
            double r2 = 0;
            for (int i = 0; i < n; ++i) r2 += w[i] * w[i];
            double r = std::sqrt(r2);
            if (r == 0) return x;
            double s = std::tanh(std::min(r, 18.0)) / r;
            for (int i = 0; i < n; ++i) x[i] = s * w[i];
            return x;
        }
        case DomainKind::Strip: {
            x[0] = 2 * d.strip_radius / (1 + std::exp(-clampd(w[0], -36.0, 36.0)));
            for (int i = 1; i < n; ++i) x[i] = w[i];
            return x;
        }
        case DomainKind::PuncturedSpace: {
            double r2 = 0;
            for (int i = 0; i < n; ++i) r2 += w[i] * w[i];
            double r = std::sqrt(r2);
            if (r == 0) return d.punctures[0];  // rejected downstream
            double s = std::expm1(std::min(r, 700.0)) / r;
            for (int i = 0; i < n; ++i) x[i] = d.punctures[0][i] + s * w[i];
            return x;
        }
        case DomainKind::BallComplementInBox:
            for (int i = 0; i < n; ++i)
                x[i] = d.box_halfside * std::tanh(clampd(w[i], -18.0, 18.0));
            return x;
    }
    return x;
}

void point_to_param(const DomainShape& d, const Point& x, double* w) {
    const int n = d.dim;
    switch (d.kind) {
        case DomainKind::HalfSpace:
            for (int i = 0; i + 1 < n; ++i) w[i] = x[i];
            w[n - 1] = std::log(x[n - 1]);
            return;
        case DomainKind::UnitBall: {
            double r = norm(x);
            if (r == 0) {
                for (int i = 0; i < n; ++i) w[i] = 0;
                return;
            }
            double s = std::atanh(std::min(r, 1.0 - 1e-16)) / r;
            for (int i = 0; i < n; ++i) w[i] = s * x[i];
            return;
        }
        case DomainKind::Strip: {
            double u = clampd(x[0] / (2 * d.strip_radius), 1e-17, 1.0 - 1e-17);
            w[0] = std::log(u / (1 - u));
            for (int i = 1; i < n; ++i) w[i] = x[i];
            return;
        }
        case DomainKind::PuncturedSpace: {
            Point u = x - d.punctures[0];
            double r = norm(u);
            if (r == 0) {
                for (int i = 0; i < n; ++i) w[i] = 0;
                return;
            }
            double s = std::log1p(r) / r;
            for (int i = 0; i < n; ++i) w[i] = s * u[i];
            return;
        }
        case DomainKind::BallComplementInBox:
            for (int i = 0; i < n; ++i)
                w[i] = std::atanh(clampd(x[i] / d.box_halfside, -(1.0 - 1e-16), 1.0 - 1e-16));
            return;
    }
}

// ---------------------------------------------------------------------------
// Nelder-Mead core, minimization over R^D

namespace {

struct NmOut {
    double value = kInf;
    std::vector<double> x;
    uint64_t evals = 0;
};

NmOut nm_run(std::vector<double> x0, const std::function<double(const std::vector<double>&)>& g,
             int max_evals, double shrink_tol) {
    const size_t D = x0.size();
    NmOut out;
    auto eval = [&](const std::vector<double>& w) {
        ++out.evals;
        double v = g(w);
        return std::isnan(v) ? kInf : v;
    };

    std::vector<std::vector<double>> v(D + 1, x0);
    std::vector<double> fv(D + 1);
    for (size_t i = 0; i < D; ++i) v[i + 1][i] += 0.25 * (1.0 + std::abs(x0[i]));
    for (size_t i = 0; i <= D; ++i) fv[i] = eval(v[i]);

    auto order = [&] {
        std::vector<size_t> idx(D + 1);
        std::iota(idx.begin(), idx.end(), size_t{0});
        std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return fv[a] < fv[b]; });
        std::vector<std::vector<double>> nv(D + 1);
        std::vector<double> nf(D + 1);
        for (size_t i = 0; i <= D; ++i) {
            nv[i] = std::move(v[idx[i]]);
            nf[i] = fv[idx[i]];
        }
        v = std::move(nv);
        fv = std::move(nf);
    };

    auto blend = [&](const std::vector<double>& a, double t, const std::vector<double>& b) {
        std::vector<double> r(D);
        for (size_t j = 0; j < D; ++j) r[j] = a[j] + t * (b[j] - a[j]);
        return r;
    };

    while (static_cast<int>(out.evals) < max_evals) {
        order();
        if (!std::isfinite(fv[0])) break;  // every vertex rejected
        double diam = 0;
        for (size_t i = 1; i <= D; ++i)
            for (size_t j = 0; j < D; ++j) diam = std::max(diam, std::abs(v[i][j] - v[0][j]));
        if (diam <= shrink_tol) break;

        std::vector<double> c(D, 0.0);
        for (size_t i = 0; i < D; ++i)
            for (size_t j = 0; j < D; ++j) c[j] += v[i][j] / static_cast<double>(D);

        std::vector<double> xr = blend(c, -1.0, v[D]);  // c + (c - worst)
        double fr = eval(xr);
        if (fr < fv[0]) {
            std::vector<double> xe = blend(c, -2.0, v[D]);
            double fe = eval(xe);
            if (fe < fr) {
                v[D] = std::move(xe);
                fv[D] = fe;
            } else {
                v[D] = std::move(xr);
                fv[D] = fr;
            }
        } else if (fr < fv[D - 1]) {
            v[D] = std::move(xr);
            fv[D] = fr;
        } else {
            bool shrink = false;
            if (fr < fv[D]) {
                std::vector<double> xc = blend(c, -0.5, v[D]);  // outside contraction
                double fc = eval(xc);
                if (fc <= fr) {
                    v[D] = std::move(xc);
                    fv[D] = fc;
                } else {
                    shrink = true;
                }
            } else {
                std::vector<double> xc = blend(c, 0.5, v[D]);  // inside contraction
                double fc = eval(xc);
                if (fc < fv[D]) {
                    v[D] = std::move(xc);
                    fv[D] = fc;
                } else {
                    shrink = true;
                }
            }
            if (shrink) {
                for (size_t i = 1; i <= D; ++i) {
                    v[i] = blend(v[0], 0.5, v[i]);
                    fv[i] = eval(v[i]);
                }
            }
        }
    }
    order();
    out.value = fv[0];
    out.x = v[0];
    return out;
}

}  // namespace

SearchResult refine_extremum(const DomainShape& d, int m, const Objective& f, Extremum ext,
                             const SearchOptions& opt,
                             const std::vector<std::vector<Point>>& warm_starts) {
    if (m < 1) throw std::invalid_argument("need at least one point in the configuration");
    const int pd = param_dim(d);
    const size_t D = static_cast<size_t>(m) * pd;
    const double sign = ext == Extremum::Maximize ? -1.0 : 1.0;

    auto decode = [&](const std::vector<double>& w) {
        std::vector<Point> pts(m);
        for (int i = 0; i < m; ++i) pts[i] = param_to_point(d, w.data() + i * pd);
        return pts;
    };
    auto g = [&](const std::vector<double>& w) -> double {
        std::vector<Point> pts = decode(w);
        for (const Point& p : pts)
            if (!contains(d, p)) return kInf;
        double val = sign * f(pts);
        return std::isnan(val) ? kInf : val;
    };

    std::vector<std::vector<double>> starts;
    for (const auto& ws : warm_starts) {
        if (static_cast<int>(ws.size()) != m) continue;
        std::vector<double> w(D);
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            ok = contains(d, ws[i]);
            if (ok) point_to_param(d, ws[i], w.data() + i * pd);
        }
        if (ok) starts.push_back(std::move(w));
    }
    for (int s = 0; s < opt.random_starts; ++s) {
        SplitMix64 rng = stream_for(opt.seed ^ 0x5EA4C85EA4C8ULL, static_cast<uint64_t>(s));
        std::vector<double> w(D);
        for (double& wi : w) wi = opt.start_spread * rng.gaussian();
        starts.push_back(std::move(w));
    }

    SearchResult res;
    double best = kInf;
    std::vector<double> best_w;
    for (const auto& w0 : starts) {
        NmOut o = nm_run(w0, g, opt.max_evals_per_start, opt.shrink_tol);
        res.evals += o.evals;
        ++res.starts;
        if (o.value < best) {
            best = o.value;
            best_w = std::move(o.x);
        }
    }
    if (best_w.empty()) {
        res.best_value = ext == Extremum::Maximize ? -kInf : kInf;
        return res;
    }
    res.best_value = sign * best;
    res.witness = decode(best_w);
    return res;
}

// ---------------------------------------------------------------------------
// sharpness

namespace {

Point canonical_interior_point(const DomainShape& d) {
    return extremal_limit_pair(d, 4.0, 1.0).first;
}

}  // namespace

SharpnessResult sharpness_search(const BoundRecord& b, const DomainShape& d, double alpha,
                                 const PairSampler& sampler, const SearchOptions& opt) {
    ViolationReport base = verify_bound(b, d, alpha, sampler, 1e-9);

    SharpnessResult r;
    r.bound_id = b.id;
    r.alpha = alpha;
    r.domain = d.label();
    r.lower_const = base.lower_const;
    r.upper_const = base.upper_const;
    r.sharp_lower = b.sharp_lower;
    r.sharp_upper = b.sharp_upper;
    r.samples = base.samples;
    r.scan_min = base.min_quotient;
    r.scan_max = base.max_quotient;

    Objective quot = [&](const std::vector<Point>& pts) {
        double rhs = eval_metric(b.rhs, d, pts[0], pts[1]);
        if (!(rhs > 0)) return kNaN;
        return gpp(d, alpha, pts[0], pts[1]) / rhs;
    };

    std::vector<std::vector<Point>> warm = {{base.max_q.x, base.max_q.y},
                                            {base.min_q.x, base.min_q.y}};
    auto add_pair = [&](const std::pair<Point, Point>& p) {
        if (contains(d, p.first) && contains(d, p.second) && !(p.first == p.second))
            warm.push_back({p.first, p.second});
    };
    switch (d.kind) {
        case DomainKind::HalfSpace: add_pair(extremal_halfspace_pair(alpha, d.dim)); break;
        case DomainKind::Strip: add_pair(extremal_strip_pair(alpha, d)); break;
        case DomainKind::BallComplementInBox: add_pair(extremal_halfball_pair(alpha, d)); break;
        default: break;
    }
    add_pair(extremal_limit_pair(d, alpha, 1e-6));
    add_pair(extremal_limit_pair(d, alpha, 1e6));
    if (b.rhs.kind == MetricKind::T && alpha < 2)
        add_pair(extremal_t_pair(alpha, d, canonical_interior_point(d)));

    SearchResult up = refine_extremum(d, 2, quot, Extremum::Maximize, opt, warm);
    SearchResult dn = refine_extremum(d, 2, quot, Extremum::Minimize, opt, warm);

    r.max_quotient = r.scan_max;
    r.max_witness = {base.max_q.x, base.max_q.y};
    if (std::isfinite(up.best_value) && up.best_value > r.max_quotient) {
        r.max_quotient = up.best_value;
        r.max_witness = {up.witness[0], up.witness[1]};
    }
    r.min_quotient = r.scan_min;
    r.min_witness = {base.min_q.x, base.min_q.y};
    if (std::isfinite(dn.best_value) && dn.best_value < r.min_quotient) {
        r.min_quotient = dn.best_value;
        r.min_witness = {dn.witness[0], dn.witness[1]};
    }
    r.lower_gap = std::abs(r.min_quotient - r.lower_const) / r.lower_const;
    r.upper_gap = std::abs(r.max_quotient - r.upper_const) / r.upper_const;
    return r;
}

// ---------------------------------------------------------------------------
// Moebius self-maps of the plane unit disk

Point mobius_T(const Point& a, const Point& z) {
    if (a.dim() != 2 || z.dim() != 2)
        throw std::invalid_argument("mobius_T acts on the plane disk");
    std::complex<double> ca(a[0], a[1]), cz(z[0], z[1]);
    std::complex<double> w = (cz - ca) / (1.0 - std::conj(ca) * cz);
    return Point{w.real(), w.imag()};
}

double mobius_lower_const(double alpha) {
    return std::min({std::sqrt(alpha) / 2, 0.5, 1 / std::sqrt(alpha)});
}

double mobius_upper_const(double alpha) {
    return std::max({2 / std::sqrt(alpha), 2.0, std::sqrt(alpha)});
}

namespace {

void require_plane_disk(const PairSampler& sampler, const Point& a) {
    const DomainShape& d = sampler.domain;
    if (d.kind != DomainKind::UnitBall || d.dim != 2)
        throw applicability_error("Moebius scans run on the plane unit disk");
    if (a.dim() != 2 || norm(a) >= 1)
        throw std::invalid_argument("the Moebius parameter must lie in the open disk");
}

struct WorstAcc {
    double m = kInf;
    Witness w;
    void take(double v, const Point& x, const Point& y, uint64_t i) {
        if (v < m || (v == m && i < w.index)) {
            m = v;
            w = {x, y, i, v};
        }
    }
    void absorb(const WorstAcc& o) {
        if (o.w.index != UINT64_MAX) take(o.m, o.w.x, o.w.y, o.w.index);
    }
};

WorstAcc worst_init() {
    WorstAcc a;
    a.w.index = UINT64_MAX;
    return a;
}

}  // namespace

MobiusCheck mobius_distortion_check(double alpha, const Point& a, const PairSampler& sampler,
                                    double tol) {
    require_plane_disk(sampler, a);
    if (sampler.count == 0) throw std::invalid_argument("sampler count must be positive");
    const DomainShape& d = sampler.domain;
    MobiusCheck c;
    c.alpha = alpha;
    c.a = a;
    c.lower_const = mobius_lower_const(alpha);
    c.upper_const = mobius_upper_const(alpha);
    c.samples = sampler.count;
    c.tol = tol;

    struct Acc {
        WorstAcc lo, hi;
    };
    Acc init{worst_init(), worst_init()};
    Acc acc = campaign_reduce(
        sampler.count, init,
        [&](Acc& ac, uint64_t i) {
            auto [x, y] = sampler.pair(i);
            double p = gpp(d, alpha, x, y);
            double pt = gpp(d, alpha, mobius_T(a, x), mobius_T(a, y));
            ac.lo.take(pt - c.lower_const * p, x, y, i);
            ac.hi.take(c.upper_const * p - pt, x, y, i);
        },
        [](Acc& ac, const Acc& o) {
            ac.lo.absorb(o.lo);
            ac.hi.absorb(o.hi);
        });
    c.worst_lower_margin = acc.lo.m;
    c.worst_upper_margin = acc.hi.m;
    c.worst_lower = acc.lo.w;
    c.worst_upper = acc.hi.w;
    c.pass = c.worst_lower_margin >= -tol && c.worst_upper_margin >= -tol;
    return c;
}

// ---------------------------------------------------------------------------
// conjectured dimension-free Moebius bound

namespace {

struct SupAcc {
    double best = -kInf;
    Witness w;
    void take(double v, const Point& x, const Point& y, uint64_t i) {
        if (std::isnan(v)) return;
        if (v > best || (v == best && i < w.index)) {
            best = v;
            w = {x, y, i, v};
        }
    }
    void absorb(const SupAcc& o) {
        if (o.w.index != UINT64_MAX) take(o.best, o.w.x, o.w.y, o.w.index);
    }
};

SupAcc sup_init() {
    SupAcc a;
    a.w.index = UINT64_MAX;
    return a;
}

// p(Tx, Ty) / p(x, y) through the exact identities
//   |Tx - Ty|   = |x - y| (1 - |a|^2) / (|1 - conj(a) x| |1 - conj(a) y|)
//   1 - |Tx|^2  = (1 - |a|^2)(1 - |x|^2) / |1 - conj(a) x|^2
// so near-coincident pairs do not lose the ratio to cancellation in Tx - Ty
double mobius_ratio(const DomainShape& d, double alpha, const Point& a, const Point& x,
                    const Point& y) {
    double r = dist(x, y);
    if (!(r > 0)) return kNaN;
    std::complex<double> ca(a[0], a[1]), cx(x[0], x[1]), cy(y[0], y[1]);
    double one_m_a2 = (1 - norm(a)) * (1 + norm(a));
    double fx = std::abs(1.0 - std::conj(ca) * cx);
    double fy = std::abs(1.0 - std::conj(ca) * cy);
    double m = one_m_a2 / (fx * fy);  // |Tx - Ty| / |x - y|
    double dx = dist_to_boundary(d, x), dy = dist_to_boundary(d, y);
    double tx = std::abs((cx - ca) / (1.0 - std::conj(ca) * cx));
    double ty = std::abs((cy - ca) / (1.0 - std::conj(ca) * cy));
    // d(Tx) = (1 - |Tx|^2)/(1 + |Tx|) with 1 - |x|^2 = d(x)(1 + |x|)
    double dtx = dx * (1 + norm(x)) * one_m_a2 / (fx * fx * (1 + tx));
    double dty = dy * (1 + norm(y)) * one_m_a2 / (fy * fy * (1 + ty));
    double num = r * r + alpha * dx * dy;
    double den = (r * m) * (r * m) + alpha * dtx * dty;
    return m * std::sqrt(num / den);
}

ConjectureResult finish_conjecture(double alpha, const Point& a, const PairSampler& sampler,
                                   bool refine, double tol, const SupAcc& acc) {
    const DomainShape& d = sampler.domain;
    ConjectureResult r;
    r.alpha = alpha;
    r.a = a;
    r.bound = 1 + norm(a);
    r.samples = sampler.count;
    r.tol = tol;
    r.sup_ratio = acc.best;
    r.witness = {acc.w.x, acc.w.y};
    if (refine) {
        Objective obj = [&](const std::vector<Point>& pts) {
            return mobius_ratio(d, alpha, a, pts[0], pts[1]);
        };
        std::vector<std::vector<Point>> warm = {{r.witness[0], r.witness[1]}};
        // the ratio tends to 1 + |a| along coincident pairs at the origin
        for (double eps : {1e-4, 1e-6, 1e-8})
            warm.push_back({Point{eps, 0.0}, Point{-eps, 0.0}});
        SearchOptions opt;
        opt.random_starts = 8;
        opt.seed = sampler.seed;
        SearchResult s = refine_extremum(d, 2, obj, Extremum::Maximize, opt, warm);
        if (std::isfinite(s.best_value) && s.best_value > r.sup_ratio) {
            r.sup_ratio = s.best_value;
            r.witness = {s.witness[0], s.witness[1]};
        }
        r.refined = true;
    }
    r.holds = r.sup_ratio <= r.bound + tol;
    return r;
}

}  // namespace

ConjectureResult conjecture_scan(double alpha, const Point& a, const PairSampler& sampler,
                                 bool refine, double tol) {
    require_plane_disk(sampler, a);
    if (sampler.count == 0) throw std::invalid_argument("sampler count must be positive");
    const DomainShape& d = sampler.domain;
    SupAcc acc = campaign_reduce(
        sampler.count, sup_init(),
        [&](SupAcc& ac, uint64_t i) {
            auto [x, y] = sampler.pair(i);
            ac.take(mobius_ratio(d, alpha, a, x, y), x, y, i);
        },
        [](SupAcc& ac, const SupAcc& o) { ac.absorb(o); });
    return finish_conjecture(alpha, a, sampler, refine, tol, acc);
}

ConjectureResult conjecture_scan_serial(double alpha, const Point& a, const PairSampler& sampler,
                                        bool refine, double tol) {
    require_plane_disk(sampler, a);
    if (sampler.count == 0) throw std::invalid_argument("sampler count must be positive");
    const DomainShape& d = sampler.domain;
    SupAcc acc = sup_init();
    for (uint64_t i = 0; i < sampler.count; ++i) {
        auto [x, y] = sampler.pair(i);
        acc.take(mobius_ratio(d, alpha, a, x, y), x, y, i);
    }
    return finish_conjecture(alpha, a, sampler, refine, tol, acc);
}

// ---------------------------------------------------------------------------
// quasiregular distortion

Point radial_stretch(const Point& z, double K) {
    double r = norm(z);
    if (r == 0) return z;
    return std::pow(r, K - 1) * z;
}

double qr_corollary_factor(double alpha, double K) {
    if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
    if (!(K >= 1)) throw std::invalid_argument("K must be at least 1");
    double c = 1.0 / K, sa = std::sqrt(alpha);
    return std::pow(kLambda2, 1 - c) *
           std::max({1.0, 2 / sa, std::pow(sa, c), 2 * std::pow(sa, c - 1)});
}

DistortionCheck qr_distortion_check(double alpha, double K, const PairSampler& sampler,
                                    double tol) {
    const DomainShape& d = sampler.domain;
    if (d.kind != DomainKind::UnitBall || d.dim != 2)
        throw applicability_error("the radial stretch check runs on the plane unit disk");
    if (!(K >= 1)) throw std::invalid_argument("K must be at least 1");
    if (sampler.count == 0) throw std::invalid_argument("sampler count must be positive");

    DistortionCheck c;
    c.alpha = alpha;
    c.K = K;
    c.c = 1.0 / K;
    c.factor = qr_corollary_factor(alpha, K);
    c.samples = sampler.count;
    c.tol = tol;
    const double lam = std::pow(kLambda2, 1 - c.c);

    struct Acc {
        WorstAcc th, p;
    };
    Acc init{worst_init(), worst_init()};
    Acc acc = campaign_reduce(
        sampler.count, init,
        [&](Acc& ac, uint64_t i) {
            auto [x, y] = sampler.pair(i);
            Point fx = radial_stretch(x, K), fy = radial_stretch(y, K);
            double th = th_half_rho(d, x, y), thf = th_half_rho(d, fx, fy);
            ac.th.take(lam * std::pow(th, c.c) - thf, x, y, i);
            double p = gpp(d, alpha, x, y), pf = gpp(d, alpha, fx, fy);
            ac.p.take(c.factor * std::pow(p, c.c) - pf, x, y, i);
        },
        [](Acc& ac, const Acc& o) {
            ac.th.absorb(o.th);
            ac.p.absorb(o.p);
        });
    c.worst_th_margin = acc.th.m;
    c.worst_th = acc.th.w;
    c.worst_p_margin = acc.p.m;
    c.worst_p = acc.p.w;
    c.pass = c.worst_th_margin >= -tol && c.worst_p_margin >= -tol;
    return c;
}

}  // namespace pointpair
