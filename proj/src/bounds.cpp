#include "pointpair/bounds.hpp"

#include <cmath>
#include <limits>

#include "pointpair/parallel.hpp"
#include "pointpair/search.hpp"

namespace pointpair {

std::string MetricId::name() const {
    switch (kind) {
        case MetricKind::Gpp:
            return alpha == 4.0 ? "pp" : "gpp(" + std::to_string(alpha) + ")";
        case MetricKind::JStar: return "jstar";
        case MetricKind::S: return "s";
        case MetricKind::T: return "t";
        case MetricKind::ThHalfRho: return "th(rho/2)";
    }
    return "?";
}

double eval_metric(const MetricId& m, const DomainShape& d, const Point& x, const Point& y) {
    switch (m.kind) {
        case MetricKind::Gpp: return gpp(d, m.alpha, x, y);
        case MetricKind::JStar: return j_star(d, x, y);
        case MetricKind::S: return s_metric(d, x, y);
        case MetricKind::T: return t_metric(d, x, y);
        case MetricKind::ThHalfRho: return th_half_rho(d, x, y);
    }
    return 0;
}

double PiecewiseAlpha::operator()(double alpha) const {
    for (const AlphaBranch& b : branches)
        if (alpha <= b.alpha_max) return b.value(alpha);
    return branches.back().value(alpha);
}

const char* PiecewiseAlpha::describe(double alpha) const {
    for (const AlphaBranch& b : branches)
        if (alpha <= b.alpha_max) return b.text;
    return branches.back().text;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double c_one(double) { return 1.0; }
double c_half(double) { return 0.5; }
double c_two(double) { return 2.0; }
double c_inv_sqrt2(double) { return 0.70710678118654752440; }
double c_two_over_sqrt_a(double a) { return 2.0 / std::sqrt(a); }
double c_sqrt_a_over_2(double a) { return std::sqrt(a) / 2.0; }
double c_inv_sqrt_a(double a) { return 1.0 / std::sqrt(a); }
double c_sqrt2_over_sqrt_a(double a) { return std::sqrt(2.0) / std::sqrt(a); }
double c_sqrt_ap4_over_a(double a) { return std::sqrt((a + 4.0) / a); }
double c_t_peak(double a) { return 4.0 / std::sqrt(a * (4.0 - a)); }
double c_max1_4_over_sqrt_ap4(double a) { return std::max(1.0, 4.0 / std::sqrt(a + 4.0)); }

PiecewiseAlpha pw(std::vector<AlphaBranch> bs) { return PiecewiseAlpha{std::move(bs)}; }

std::vector<BoundRecord> build_catalog() {
    std::vector<BoundRecord> v;

    // two-sided j* bounds, all domains; both constants best possible
    v.push_back(BoundRecord{
        "thm3.1",
        MetricId{MetricKind::JStar},
        pw({{4.0, c_one, "1"}, {kInf, c_two_over_sqrt_a, "2/sqrt(alpha)"}}),
        pw({{kInf, c_sqrt_ap4_over_a, "sqrt((alpha+4)/alpha)"}}),
        DomainClass::Any,
        true, true,
        "j* comparison, all domains",
        ""});

    // single-puncture refinement; the upper improves for alpha > 4
    v.push_back(BoundRecord{
        "lem3.3",
        MetricId{MetricKind::JStar},
        pw({{4.0, c_one, "1"}, {kInf, c_two_over_sqrt_a, "2/sqrt(alpha)"}}),
        pw({{4.0, c_sqrt_ap4_over_a, "sqrt(1+4/alpha)"},
            {kInf, c_max1_4_over_sqrt_ap4, "max(1, 4/sqrt(alpha+4))"}}),
        DomainClass::SinglePuncture,
        true, true,
        "j* comparison on the once-punctured space",
        "stated lower branches are case-swapped (2/sqrt(alpha) for alpha<=4, 1 for alpha>4); "
        "the derivation gives min(1, 2/sqrt(alpha)), used here. counterexample to the "
        "stated alpha<=4 branch: alpha=1, x=(1,0), y=(2,0): quotient sqrt(3) < 2"});

    // monotonicity in alpha against the classical point pair (beta = 4)
    v.push_back(BoundRecord{
        "lem4.1",
        MetricId{MetricKind::Gpp, 4.0},
        pw({{4.0, c_one, "1"}, {kInf, c_two_over_sqrt_a, "2/sqrt(alpha)"}}),
        pw({{4.0, c_two_over_sqrt_a, "2/sqrt(alpha)"}, {kInf, c_one, "1"}}),
        DomainClass::Any,
        true, true,
        "parameter comparison, reference beta = 4",
        ""});

    // s comparison, all domains
    v.push_back(BoundRecord{
        "lem4.2",
        MetricId{MetricKind::S},
        pw({{4.0, c_half, "1/2"}, {kInf, c_sqrt2_over_sqrt_a, "sqrt(2)/sqrt(alpha)"}}),
        pw({{kInf, c_sqrt_ap4_over_a, "sqrt((alpha+4)/alpha)"}}),
        DomainClass::Any,
        false, false,
        "s comparison, all domains",
        "stated lower constant for alpha > 4 (1/sqrt(2)) is false: alpha=6, x=(1,0), "
        "y=(-1,0) across a puncture gives s=1, p=2/sqrt(10) < 1/sqrt(2). proof chain via "
        "s <= sqrt(2) p4 yields sqrt(2)/sqrt(alpha), used here"});

    // s comparison with the convex improvement on the lower side
    v.push_back(BoundRecord{
        "lem4.2-convex",
        MetricId{MetricKind::S},
        pw({{2.0, c_inv_sqrt2, "1/sqrt(2)"},
            {4.0, c_sqrt_a_over_2, "sqrt(alpha)/2"},
            {kInf, c_two_over_sqrt_a, "2/sqrt(alpha)"}}),
        pw({{kInf, c_sqrt_ap4_over_a, "sqrt((alpha+4)/alpha)"}}),
        DomainClass::Convex,
        false, false,
        "s comparison, convex domains",
        "stated lower constant for alpha > 4 (1) is false: on the half-plane s equals the "
        "classical point pair, which exceeds p^alpha for alpha > 4. proof chain via "
        "s <= p4 on convex domains yields 2/sqrt(alpha), used here"});

    // t comparison; the upper peaks at 4/sqrt(alpha(4-alpha)) below alpha = 2
    v.push_back(BoundRecord{
        "lem4.3",
        MetricId{MetricKind::T},
        pw({{4.0, c_one, "1"}, {kInf, c_two_over_sqrt_a, "2/sqrt(alpha)"}}),
        pw({{2.0, c_t_peak, "4/sqrt(alpha(4-alpha))"}, {kInf, c_two, "2"}}),
        DomainClass::Any,
        true, true,
        "t comparison, all domains",
        ""});

    // th(rho/2) comparison on the half-space, where th(rho/2) = p4 exactly
    v.push_back(BoundRecord{
        "cor5.1",
        MetricId{MetricKind::ThHalfRho},
        pw({{4.0, c_one, "1"}, {kInf, c_two_over_sqrt_a, "2/sqrt(alpha)"}}),
        pw({{4.0, c_two_over_sqrt_a, "2/sqrt(alpha)"}, {kInf, c_one, "1"}}),
        DomainClass::HalfSpaceOnly,
        true, true,
        "hyperbolic comparison on the half-space",
        "stated lower constant min(1, sqrt(alpha)/2) is false for alpha > 4: x=(0,1), "
        "y=(2,1), alpha=9 gives th(rho/2) = 0.707 > p9 = 0.555. the underlying route "
        "(parameter comparison plus th(rho/2) = p4) yields min(1, 2/sqrt(alpha)), used here"});

    // th(rho/2) comparison on the unit ball
    v.push_back(BoundRecord{
        "thm5.2",
        MetricId{MetricKind::ThHalfRho},
        pw({{1.0, c_one, "1"}, {kInf, c_inv_sqrt_a, "1/sqrt(alpha)"}}),
        pw({{4.0, c_two_over_sqrt_a, "2/sqrt(alpha)"}, {kInf, c_one, "1"}}),
        DomainClass::UnitBallOnly,
        true, true,
        "hyperbolic comparison on the unit ball",
        ""});

    return v;
}

}  // namespace

const std::vector<BoundRecord>& catalog() {
    static const std::vector<BoundRecord> c = build_catalog();
    return c;
}

const BoundRecord& record(const std::string& id) {
    for (const BoundRecord& b : catalog())
        if (b.id == id) return b;
    throw std::invalid_argument("unknown bound id: " + id);
}

bool BoundRecord::applicable(const DomainShape& d) const {
    switch (applies) {
        case DomainClass::Any: return true;
        case DomainClass::Convex: return d.is_convex();
        case DomainClass::SinglePuncture:
            return d.kind == DomainKind::PuncturedSpace && d.punctures.size() == 1;
        case DomainClass::HalfSpaceOnly: return d.kind == DomainKind::HalfSpace;
        case DomainClass::UnitBallOnly: return d.kind == DomainKind::UnitBall;
    }
    return false;
}

PairMargins check_pair(const BoundRecord& b, const DomainShape& d, double alpha,
                       const Point& x, const Point& y) {
    if (!b.applicable(d))
        throw applicability_error("bound " + b.id + " does not apply to " + d.label());
    double lhs = gpp(d, alpha, x, y);
    double rhs = eval_metric(b.rhs, d, x, y);
    double lo = b.lower(alpha), up = b.upper(alpha);
    PairMargins m;
    m.lower_margin = lhs - lo * rhs;
    m.upper_margin = up * rhs - lhs;
    m.quotient = rhs > 0 ? lhs / rhs : std::numeric_limits<double>::quiet_NaN();
    return m;
}

// ---------------------------------------------------------------------------
// margin campaign

namespace {

struct MarginAcc {
    double wl = kInf, wu = kInf;
    double maxq = -kInf, minq = kInf;
    Witness wl_w, wu_w, maxq_w, minq_w;

    void take_lower(double v, const Point& x, const Point& y, uint64_t i) {
        if (v < wl || (v == wl && i < wl_w.index)) {
            wl = v;
            wl_w = {x, y, i, v};
        }
    }
    void take_upper(double v, const Point& x, const Point& y, uint64_t i) {
        if (v < wu || (v == wu && i < wu_w.index)) {
            wu = v;
            wu_w = {x, y, i, v};
        }
    }
    void take_q(double q, const Point& x, const Point& y, uint64_t i) {
        if (std::isnan(q)) return;
        if (q > maxq || (q == maxq && i < maxq_w.index)) {
            maxq = q;
            maxq_w = {x, y, i, q};
        }
        if (q < minq || (q == minq && i < minq_w.index)) {
            minq = q;
            minq_w = {x, y, i, q};
        }
    }
    void absorb(const MarginAcc& o) {
        take_lower(o.wl, o.wl_w.x, o.wl_w.y, o.wl_w.index);
        take_upper(o.wu, o.wu_w.x, o.wu_w.y, o.wu_w.index);
        take_q(o.maxq, o.maxq_w.x, o.maxq_w.y, o.maxq_w.index);
        take_q(o.minq, o.minq_w.x, o.minq_w.y, o.minq_w.index);
    }
};

MarginAcc margin_acc_init() {
    MarginAcc a;
    a.wl_w.index = a.wu_w.index = a.maxq_w.index = a.minq_w.index = UINT64_MAX;
    return a;
}

ViolationReport finish_report(const BoundRecord& b, const DomainShape& d, double alpha,
                              const PairSampler& sampler, double tol, const MarginAcc& acc) {
    ViolationReport r;
    r.bound_id = b.id;
    r.alpha = alpha;
    r.domain = d.label();
    r.lower_const = b.lower(alpha);
    r.upper_const = b.upper(alpha);
    r.worst_lower_margin = acc.wl;
    r.worst_upper_margin = acc.wu;
    r.worst_lower = acc.wl_w;
    r.worst_upper = acc.wu_w;
    r.max_quotient = acc.maxq;
    r.min_quotient = acc.minq;
    r.max_q = acc.maxq_w;
    r.min_q = acc.minq_w;
    r.samples = sampler.count;
    r.tol = tol;
    r.pass = acc.wl >= -tol && acc.wu >= -tol;
    return r;
}

}  // namespace

ViolationReport verify_bound(const BoundRecord& b, const DomainShape& d, double alpha,
                             const PairSampler& sampler, double tol) {
    if (!b.applicable(d))
        throw applicability_error("bound " + b.id + " does not apply to " + d.label());
    if (sampler.count == 0) throw std::invalid_argument("sampler count must be positive");
    MarginAcc acc = campaign_reduce(
        sampler.count, margin_acc_init(),
        [&](MarginAcc& a, uint64_t i) {
            auto [x, y] = sampler.pair(i);
            PairMargins m = check_pair(b, d, alpha, x, y);
            a.take_lower(m.lower_margin, x, y, i);
            a.take_upper(m.upper_margin, x, y, i);
            a.take_q(m.quotient, x, y, i);
        },
        [](MarginAcc& a, const MarginAcc& o) { a.absorb(o); });
    return finish_report(b, d, alpha, sampler, tol, acc);
}

ViolationReport verify_bound_serial(const BoundRecord& b, const DomainShape& d, double alpha,
                                    const PairSampler& sampler, double tol) {
    if (!b.applicable(d))
        throw applicability_error("bound " + b.id + " does not apply to " + d.label());
    if (sampler.count == 0) throw std::invalid_argument("sampler count must be positive");
    MarginAcc acc = margin_acc_init();
    for (uint64_t i = 0; i < sampler.count; ++i) {
        auto [x, y] = sampler.pair(i);
        PairMargins m = check_pair(b, d, alpha, x, y);
        acc.take_lower(m.lower_margin, x, y, i);
        acc.take_upper(m.upper_margin, x, y, i);
        acc.take_q(m.quotient, x, y, i);
    }
    return finish_report(b, d, alpha, sampler, tol, acc);
}

// ---------------------------------------------------------------------------
// quasi-metric constant

QuasiConstants quasimetric_constant_paper(double alpha) {
    if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
    QuasiConstants q;
    q.stated = alpha <= 4 ? std::sqrt((alpha + 4) / alpha) : 2 * std::sqrt(alpha + 4) / alpha;
    q.proof_chain = std::sqrt((alpha + 4) / alpha) * std::max(1.0, std::sqrt(alpha) / 2);
    return q;
}

namespace {

struct TripleAcc {
    double best = 1.0;  // the degenerate triple z = x realizes exactly 1
    uint64_t index = UINT64_MAX;
    std::array<Point, 3> w{};

    void take(double v, const std::array<Point, 3>& t, uint64_t i) {
        if (v > best || (v == best && i < index)) {
            best = v;
            index = i;
            w = t;
        }
    }
    void absorb(const TripleAcc& o) {
        if (o.index != UINT64_MAX) take(o.best, o.w, o.index);
    }
};

double triple_ratio(const DomainShape& d, double alpha, const std::array<Point, 3>& t) {
    double denom = gpp(d, alpha, t[0], t[2]) + gpp(d, alpha, t[2], t[1]);
    if (denom <= 0) return -kInf;
    return gpp(d, alpha, t[0], t[1]) / denom;
}

QuasiEstimate finish_quasi(const DomainShape& d, double alpha, const PairSampler& sampler,
                           bool refine, const TripleAcc& acc) {
    QuasiEstimate e;
    e.samples = sampler.count;
    e.scan_value = acc.best;
    e.value = acc.best;
    e.witness = acc.w;
    if (acc.index == UINT64_MAX) {
        auto [x, y] = sampler.pair(0);
        e.witness = {x, y, x};
        e.scan_value = e.value = 1.0;
    }
    if (refine) {
        Objective obj = [&](const std::vector<Point>& pts) {
            return triple_ratio(d, alpha, {pts[0], pts[1], pts[2]});
        };
        SearchOptions opt;
        opt.random_starts = 0;
        opt.seed = sampler.seed;
        std::vector<std::vector<Point>> warm = {{e.witness[0], e.witness[1], e.witness[2]}};
        SearchResult r = refine_extremum(d, 3, obj, Extremum::Maximize, opt, warm);
        if (r.best_value > e.value) {
            e.value = r.best_value;
            e.witness = {r.witness[0], r.witness[1], r.witness[2]};
        }
        e.refined = true;
    }
    return e;
}

}  // namespace

QuasiEstimate estimate_quasimetric_constant(const DomainShape& d, double alpha,
                                            const PairSampler& sampler, bool refine) {
    if (sampler.count == 0) throw std::invalid_argument("sampler count must be positive");
    TripleAcc acc = campaign_reduce(
        sampler.count, TripleAcc{},
        [&](TripleAcc& a, uint64_t i) {
            std::array<Point, 3> t = sampler.triple(i);
            a.take(triple_ratio(d, alpha, t), t, i);
        },
        [](TripleAcc& a, const TripleAcc& o) { a.absorb(o); });
    return finish_quasi(d, alpha, sampler, refine, acc);
}

QuasiEstimate estimate_quasimetric_constant_serial(const DomainShape& d, double alpha,
                                                   const PairSampler& sampler, bool refine) {
    if (sampler.count == 0) throw std::invalid_argument("sampler count must be positive");
    TripleAcc acc;
    for (uint64_t i = 0; i < sampler.count; ++i) {
        std::array<Point, 3> t = sampler.triple(i);
        acc.take(triple_ratio(d, alpha, t), t, i);
    }
    return finish_quasi(d, alpha, sampler, refine, acc);
}

// ---------------------------------------------------------------------------
// extremal configurations

std::pair<Point, Point> extremal_halfspace_pair(double alpha, int n) {
    if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
    DomainShape d = DomainShape::half_space(n);
    Point x = Point::zero(n), y = Point::zero(n);
    x[n - 1] = 1;
    y[n - 1] = 1;
    y[0] = alpha / 2;
    (void)d;
    return {x, y};
}

std::pair<Point, Point> extremal_strip_pair(double alpha, const DomainShape& strip) {
    if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
    if (strip.kind != DomainKind::Strip)
        throw applicability_error("extremal_strip_pair needs a strip domain");
    const double r = strip.strip_radius;
    Point x = Point::zero(strip.dim), y = Point::zero(strip.dim);
    x[0] = r - alpha * r / (alpha + 4);  // l + alpha (u - l) / (alpha + 4)
    y[0] = r + alpha * r / (alpha + 4);  // l + alpha (v - l) / (alpha + 4)
    return {x, y};
}

std::pair<Point, Point> extremal_halfball_pair(double alpha, const DomainShape& box) {
    if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
    if (box.kind != DomainKind::BallComplementInBox)
        throw applicability_error("extremal_halfball_pair needs the box-minus-ball domain");
    const double L = box.box_halfside, r = box.ball_radius;
    // half-ball of radius r against the face opposite the removed ball:
    // q' = L e1, inward point h = q' - r e1, lateral contact k = q' + r e2
    Point x = Point::zero(box.dim), y = Point::zero(box.dim);
    x[0] = y[0] = L - r / (alpha + 4);
    x[1] = alpha * r / (4 * (alpha + 4));
    y[1] = -x[1];
    return {x, y};
}

std::pair<Point, Point> extremal_limit_pair(const DomainShape& d, double alpha, double k) {
    if (!(alpha > 0)) throw std::invalid_argument("alpha must be positive");
    if (!(k > 0)) throw std::invalid_argument("k must be positive");
    const int n = d.dim;
    Point z = Point::zero(n), nrm = Point::zero(n);
    double depth = 1;
    switch (d.kind) {
        case DomainKind::HalfSpace:
            nrm[n - 1] = 1;
            break;
        case DomainKind::UnitBall:
            z[0] = 1;
            nrm[0] = -1;
            break;
        case DomainKind::Strip:
            nrm[0] = 1;
            depth = d.strip_radius;
            break;
        case DomainKind::PuncturedSpace: {
            z = d.punctures[0];
            nrm[0] = 1;
            for (size_t i = 1; i < d.punctures.size(); ++i)
                depth = std::min(depth, 0.5 * dist(z, d.punctures[i]));
            break;
        }
        case DomainKind::BallComplementInBox:
            z[0] = d.box_halfside;
            nrm[0] = -1;
            depth = std::min(d.box_halfside, (2 * d.box_halfside - d.ball_radius) / 2) / 1.25;
            break;
    }
    double t0 = depth / (1 + k);
    return {z + t0 * nrm, z + (t0 * (1 + k)) * nrm};
}

std::pair<Point, Point> extremal_t_pair(double alpha, const DomainShape& d, const Point& x) {
    if (!(alpha > 0 && alpha < 2))
        throw std::invalid_argument("the t-metric equality pair needs alpha in (0, 2)");
    Point z = nearest_boundary_point(d, x);
    Point y = x + (alpha / 2) * (z - x);
    return {x, y};
}

}  // namespace pointpair
