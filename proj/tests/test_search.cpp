#include <cmath>
#include <vector>

#include "doctest.h"
#include "pointpair/rng.hpp"
#include "pointpair/search.hpp"

using namespace pointpair;

namespace {

std::vector<DomainShape> search_domains() {
    return {DomainShape::half_space(2),  DomainShape::half_space(4),
            DomainShape::unit_ball(3),   DomainShape::strip(2, 0.5),
            DomainShape::punctured(3, {Point::zero(3), Point{2.0, 0.0, 0.0}}),
            DomainShape::box_minus_ball(2)};
}

}  // namespace

TEST_CASE("parameter maps round-trip interior points") {
    for (const DomainShape& d : search_domains()) {
        CHECK(param_dim(d) == d.dim);
        PairSampler sampler{d, 13};
        std::vector<double> w(param_dim(d));
        for (uint64_t i = 0; i < 200; ++i) {
            auto [x, y] = sampler.pair(i);
            for (const Point& p : {x, y}) {
                point_to_param(d, p, w.data());
                Point back = param_to_point(d, w.data());
                CHECK(contains(d, back));
                CHECK(dist(back, p) <= 1e-9 * (1 + norm(p)));
            }
        }
    }
}

TEST_CASE("parameter maps always land inside") {
    // decode must be finite for arbitrary parameter vectors; domains with an
    // excluded region (punctures, the removed ball) reject through the
    // objective instead, so only the enclosing set is guaranteed
    for (const DomainShape& d : search_domains()) {
        std::vector<double> w(param_dim(d));
        SplitMix64 g = stream_for(99, 0);
        for (int trial = 0; trial < 200; ++trial) {
            bool ok = true;
            for (double& c : w) c = 40.0 * (g.u01() - 0.5);
            Point p = param_to_point(d, w.data());
            for (int j = 0; j < p.dim(); ++j) ok = ok && std::isfinite(p[j]);
            CHECK(ok);
            if (d.kind == DomainKind::BallComplementInBox) {
                for (int j = 0; j < p.dim(); ++j) ok = ok && std::abs(p[j]) < d.box_halfside;
                CHECK(ok);
            } else if (d.kind != DomainKind::PuncturedSpace) {
                CHECK(contains(d, p));
            }
        }
    }
}

TEST_CASE("refine_extremum finds a smooth interior optimum") {
    // maximize the product of boundary distances of a single point in the
    // strip 0 < x1 < 1: optimum 1/4 on the midline
    DomainShape s = DomainShape::strip(2, 0.5);
    Objective f = [&](const std::vector<Point>& pts) {
        double d0 = dist_to_boundary(s, pts[0]);
        return d0 * (1.0 - d0);
    };
    SearchOptions opt;
    opt.random_starts = 8;
    SearchResult r = refine_extremum(s, 1, f, Extremum::Maximize, opt);
    CHECK(r.best_value == doctest::Approx(0.25).epsilon(1e-8));
    CHECK(r.witness.size() == 1);
    CHECK(std::abs(dist_to_boundary(s, r.witness[0]) - 0.5) <= 1e-5);
    CHECK(r.evals > 0);
    CHECK(r.starts >= 8);

    // minimization of the same objective drives toward the boundary
    SearchResult rmin = refine_extremum(s, 1, f, Extremum::Minimize, opt);
    CHECK(rmin.best_value < 1e-6);
}

TEST_CASE("sharpness search reaches both sharp constants") {
    DomainShape h = DomainShape::half_space(2);
    PairSampler sampler{h, 1};
    sampler.count = 5000;
    SearchOptions opt;
    opt.random_starts = 8;
    SharpnessResult r = sharpness_search(record("thm3.1"), h, 1.0, sampler, opt);
    CHECK(r.max_quotient == doctest::Approx(std::sqrt(5.0)).epsilon(1e-10));
    CHECK(r.min_quotient <= 1.0 + 1e-3);
    CHECK(r.min_quotient >= 1.0 - 1e-9);
    CHECK(r.lower_gap <= 1e-3);
    CHECK(r.upper_gap <= 1e-12);
    CHECK(r.max_quotient >= r.scan_max);
    CHECK(r.min_quotient <= r.scan_min);
    // witnesses replay
    double q = check_pair(record("thm3.1"), h, 1.0, r.max_witness[0], r.max_witness[1]).quotient;
    CHECK(q == doctest::Approx(r.max_quotient).epsilon(1e-13));
}

TEST_CASE("disk automorphism basics") {
    Point a{0.3, -0.4};
    Point origin = Point::zero(2);
    CHECK(norm(mobius_T(a, a)) <= 1e-15);
    Point t0 = mobius_T(a, origin);
    CHECK(dist(t0, Point{-0.3, 0.4}) <= 1e-15);
    SplitMix64 g = stream_for(5, 0);
    for (int i = 0; i < 100; ++i) {
        double r = std::sqrt(g.u01()) * 0.999;
        double th = 6.283185307179586 * g.u01();
        Point z{r * std::cos(th), r * std::sin(th)};
        Point tz = mobius_T(a, z);
        CHECK(norm(tz) < 1.0);
        // T_{-a} inverts T_a
        Point back = mobius_T(Point{-a[0], -a[1]}, tz);
        CHECK(dist(back, z) <= 1e-12);
    }
}

TEST_CASE("distortion constants") {
    CHECK(mobius_lower_const(4.0) == 0.5);
    CHECK(mobius_upper_const(4.0) == 2.0);
    CHECK(mobius_upper_const(1.0) == 2.0);
    CHECK(mobius_upper_const(9.0) == 3.0);
    CHECK(mobius_lower_const(9.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(mobius_lower_const(1.0) == 0.5);
    // qr factor at K = 1 collapses to the Moebius constant, exactly
    for (double a : {0.5, 1.0, 2.0, 4.0, 9.0, 16.0})
        CHECK(qr_corollary_factor(a, 1.0) == mobius_upper_const(a));
    CHECK(qr_corollary_factor(4.0, 2.0) == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("moebius distortion check passes the proved constants") {
    DomainShape disk = DomainShape::unit_ball(2);
    PairSampler sampler{disk, 17};
    sampler.count = 3000;
    for (double alpha : {1.0, 4.0, 9.0}) {
        MobiusCheck c = mobius_distortion_check(alpha, Point{0.5, 0.2}, sampler, 1e-9);
        CHECK(c.pass);
        CHECK(c.worst_lower_margin >= -1e-9);
        CHECK(c.worst_upper_margin >= -1e-9);
        CHECK(c.samples == 3000);
    }
    CHECK_THROWS(mobius_distortion_check(4.0, Point{1.5, 0.0}, sampler, 1e-9));
}

TEST_CASE("conjectured factor 1+|a| holds on sampled pairs") {
    DomainShape disk = DomainShape::unit_ball(2);
    PairSampler sampler{disk, 23};
    sampler.count = 20000;
    for (double alpha : {1.0, 9.0}) {
        Point a{0.6, 0.0};
        ConjectureResult r = conjecture_scan(alpha, a, sampler, true, 1e-6);
        CHECK(r.holds);
        CHECK(r.bound == doctest::Approx(1.6).epsilon(1e-15));
        CHECK(r.sup_ratio <= r.bound + 1e-6);
        // near-coincident pairs at the origin realize the factor
        CHECK(r.sup_ratio >= 0.98 * r.bound);
        CHECK(r.refined);
    }
}

TEST_CASE("conjecture scan is identical in serial and parallel") {
    DomainShape disk = DomainShape::unit_ball(2);
    PairSampler sampler{disk, 29};
    sampler.count = 8000;
    ConjectureResult p = conjecture_scan(4.0, Point{0.3, 0.3}, sampler, false);
    ConjectureResult s = conjecture_scan_serial(4.0, Point{0.3, 0.3}, sampler, false);
    CHECK(p.sup_ratio == s.sup_ratio);
    CHECK(p.witness[0] == s.witness[0]);
    CHECK(p.witness[1] == s.witness[1]);
    CHECK_FALSE(p.refined);
}

TEST_CASE("radial stretch") {
    CHECK(radial_stretch(Point::zero(2), 3.0) == Point::zero(2));
    Point z{0.3, -0.4};  // |z| = 0.5
    Point w = radial_stretch(z, 2.0);
    CHECK(norm(w) == doctest::Approx(0.25).epsilon(1e-15));
    // same direction
    CHECK(w[0] * z[1] == doctest::Approx(w[1] * z[0]).epsilon(1e-15));
    Point id = radial_stretch(z, 1.0);
    CHECK(dist(id, z) <= 1e-16);
}

TEST_CASE("quasiregular distortion check passes") {
    DomainShape disk = DomainShape::unit_ball(2);
    PairSampler sampler{disk, 31};
    sampler.count = 3000;
    for (double K : {1.0, 2.0}) {
        DistortionCheck c = qr_distortion_check(4.0, K, sampler, 1e-9);
        CHECK(c.pass);
        CHECK(c.c == 1.0 / K);
        CHECK(c.worst_th_margin >= -1e-9);
        CHECK(c.worst_p_margin >= -1e-9);
        CHECK(c.factor == qr_corollary_factor(4.0, K));
    }
}
