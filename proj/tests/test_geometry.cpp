#include <cmath>
#include <vector>

#include "doctest.h"
#include "pointpair/geometry.hpp"
#include "pointpair/rng.hpp"

using namespace pointpair;

namespace {

std::vector<DomainShape> all_test_domains() {
    return {
        DomainShape::half_space(2),
        DomainShape::half_space(3),
        DomainShape::half_space(8),
        DomainShape::unit_ball(2),
        DomainShape::unit_ball(5),
        DomainShape::punctured(2, {Point::zero(2)}),
        DomainShape::punctured(3, {Point::zero(3), Point{3.0, 0.0, 0.0}}),
        DomainShape::strip(2),
        DomainShape::strip(4),
        DomainShape::box_minus_ball(2),
        DomainShape::box_minus_ball(3),
    };
}

bool on_boundary(const DomainShape& d, const Point& z, double tol = 1e-12) {
    switch (d.kind) {
        case DomainKind::HalfSpace:
            return std::abs(z[d.dim - 1]) <= tol;
        case DomainKind::UnitBall:
            return std::abs(norm(z) - 1.0) <= tol;
        case DomainKind::PuncturedSpace: {
            for (const Point& p : d.punctures)
                if (dist(z, p) <= tol) return true;
            return false;
        }
        case DomainKind::Strip:
            return std::min(std::abs(z[0]), std::abs(2 * d.strip_radius - z[0])) <= tol;
        case DomainKind::BallComplementInBox: {
            double face = kMaxDim;  // any positive init
            face = 0;
            for (int i = 0; i < d.dim; ++i) face = std::max(face, std::abs(z[i]));
            bool in_closed_box = face <= d.box_halfside + tol;
            double sphere = std::abs(dist(z, d.removed_ball_center()) - d.ball_radius);
            bool on_face = std::abs(face - d.box_halfside) <= tol &&
                           dist(z, d.removed_ball_center()) >= d.ball_radius - tol;
            return in_closed_box && (on_face || sphere <= tol);
        }
    }
    return false;
}

}  // namespace

TEST_CASE("point arithmetic") {
    Point a{1.0, 2.0}, b{3.0, -1.0};
    CHECK((a + b) == Point{4.0, 1.0});
    CHECK((a - b) == Point{-2.0, 3.0});
    CHECK((2.0 * a) == Point{2.0, 4.0});
    CHECK(dot(a, b) == 1.0);
    CHECK(norm(Point{3.0, 4.0}) == 5.0);
    CHECK(dist(a, a) == 0.0);
}

TEST_CASE("boundary distance closed forms") {
    DomainShape h = DomainShape::half_space(3);
    CHECK(dist_to_boundary(h, Point{5.0, -2.0, 0.25}) == 0.25);

    DomainShape b = DomainShape::unit_ball(2);
    CHECK(dist_to_boundary(b, Point{0.6, 0.0}) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(dist_to_boundary(b, Point::zero(2)) == 1.0);

    DomainShape p = DomainShape::punctured(2, {Point::zero(2)});
    CHECK(dist_to_boundary(p, Point{3.0, 4.0}) == 5.0);

    DomainShape p2 = DomainShape::punctured(2, {Point::zero(2), Point{3.0, 0.0}});
    CHECK(dist_to_boundary(p2, Point{2.5, 0.0}) == doctest::Approx(0.5).epsilon(1e-15));

    DomainShape s = DomainShape::strip(2);
    CHECK(dist_to_boundary(s, Point{0.3, 17.0}) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(dist_to_boundary(s, Point{1.7, -4.0}) == doctest::Approx(0.3).epsilon(1e-15));
}

TEST_CASE("boundary distance rejects outside points") {
    DomainShape h = DomainShape::half_space(2);
    CHECK_THROWS_AS(dist_to_boundary(h, Point{0.0, -1.0}), std::domain_error);
    DomainShape b = DomainShape::unit_ball(2);
    CHECK_THROWS_AS(dist_to_boundary(b, Point{1.0, 0.0}), std::domain_error);
    DomainShape p = DomainShape::punctured(2, {Point::zero(2)});
    CHECK_THROWS_AS(dist_to_boundary(p, Point::zero(2)), std::domain_error);
    DomainShape x = DomainShape::box_minus_ball(2);
    CHECK_THROWS_AS(dist_to_boundary(x, x.removed_ball_center()), std::domain_error);
}

TEST_CASE("box-minus-ball distance against sampled boundary") {
    DomainShape d = DomainShape::box_minus_ball(2);
    const double L = d.box_halfside, R = d.ball_radius;
    Point q = d.removed_ball_center();

    // dense boundary cloud: four faces minus the removed disk, plus the
    // half-circle of the removed ball that lies inside the box
    std::vector<Point> cloud;
    const int N = 4000;
    for (int i = 0; i <= N; ++i) {
        double u = -L + 2 * L * i / N;
        for (Point z : {Point{u, -L}, Point{u, L}, Point{L, u}, Point{-L, u}})
            if (dist(z, q) >= R) cloud.push_back(z);
        double th = -1.5707963267948966 + 3.141592653589793 * i / N;
        Point z = q + R * Point{std::cos(th), std::sin(th)};
        if (std::abs(z[0]) <= L && std::abs(z[1]) <= L) cloud.push_back(z);
    }

    SplitMix64 g{123};
    for (int trial = 0; trial < 200; ++trial) {
        Point x{g.uniform(-L, L), g.uniform(-L, L)};
        if (!contains(d, x)) continue;
        double dd = dist_to_boundary(d, x);
        double oracle = 1e300;
        for (const Point& z : cloud) oracle = std::min(oracle, dist(x, z));
        CHECK(dd <= oracle + 1e-12);
        CHECK(dd >= oracle - 4 * L / N);  // cloud resolution
    }
}

TEST_CASE("nearest boundary point realizes the distance") {
    SplitMix64 g{7};
    for (const DomainShape& d : all_test_domains()) {
        PairSampler sampler{d, 11};
        sampler.count = 50;
        for (uint64_t i = 0; i < sampler.count; ++i) {
            auto [x, y] = sampler.pair(i);
            (void)y;
            Point z = nearest_boundary_point(d, x);
            double dd = dist_to_boundary(d, x);
            CHECK(on_boundary(d, z, 1e-9 * (1 + norm(z))));
            CHECK(dist(x, z) == doctest::Approx(dd).epsilon(1e-12));
        }
    }
    (void)g;
}

TEST_CASE("nearest boundary point deterministic tie-breaks") {
    DomainShape b = DomainShape::unit_ball(3);
    CHECK(nearest_boundary_point(b, Point::zero(3)) == Point{1.0, 0.0, 0.0});
    DomainShape s = DomainShape::strip(2);
    CHECK(nearest_boundary_point(s, Point{1.0, 5.0}) == Point{0.0, 5.0});
}

TEST_CASE("reflections across flat boundary pieces") {
    DomainShape h = DomainShape::half_space(2);
    Point x{0.3, 0.8};
    Point rx = reflect_across_boundary(h, x);
    CHECK(rx == Point{0.3, -0.8});
    CHECK(reflect_across_boundary(h, rx) == x);

    DomainShape s = DomainShape::strip(2);
    Point y{0.5, -2.0};
    CHECK(reflect_across_boundary(s, y, 0) == Point{-0.5, -2.0});
    CHECK(reflect_across_boundary(s, y, 1) == Point{3.5, -2.0});
    // involution on dyadic coordinates is exact
    CHECK(reflect_across_boundary(s, reflect_across_boundary(s, y, 1), 1) == y);
}

TEST_CASE("projection lands on the boundary") {
    SplitMix64 g{99};
    for (const DomainShape& d : all_test_domains()) {
        for (int trial = 0; trial < 100; ++trial) {
            Point probe = Point::zero(d.dim);
            for (int i = 0; i < d.dim; ++i) probe[i] = g.uniform(-6, 6);
            Point z = project_to_boundary(d, probe);
            CHECK(on_boundary(d, z, 1e-9 * (1 + norm(z))));
        }
    }
}

TEST_CASE("samplers produce interior pairs and triples on every domain") {
    for (const DomainShape& d : all_test_domains()) {
        PairSampler sampler{d, 5};
        sampler.count = 400;
        for (uint64_t i = 0; i < sampler.count; ++i) {
            auto [x, y] = sampler.pair(i);
            CHECK(contains(d, x));
            CHECK(contains(d, y));
            CHECK(dist(x, y) > 0);
            auto t = sampler.triple(i);
            CHECK(contains(d, t[0]));
            CHECK(contains(d, t[1]));
            CHECK(contains(d, t[2]));
        }
    }
}

TEST_CASE("sampler streams are pure functions of seed and index") {
    DomainShape d = DomainShape::half_space(3);
    PairSampler a{d, 42}, b{d, 42}, c{d, 43};
    a.count = b.count = c.count = 100;
    auto [x1, y1] = a.pair(57);
    (void)a.pair(3);  // consuming other indices must not disturb index 57
    auto [x2, y2] = a.pair(57);
    auto [x3, y3] = b.pair(57);
    CHECK(x1 == x2);
    CHECK(y1 == y2);
    CHECK(x1 == x3);
    CHECK(y1 == y3);
    auto [x4, y4] = c.pair(57);
    CHECK_FALSE(x1 == x4);
    (void)y4;
}

TEST_CASE("sampler spans several decades of boundary distance") {
    for (const DomainShape& d : {DomainShape::half_space(2), DomainShape::unit_ball(2)}) {
        PairSampler sampler{d, 1};
        sampler.count = 3000;
        double lo = 1e300, hi = 0;
        for (uint64_t i = 0; i < sampler.count; ++i) {
            auto [x, y] = sampler.pair(i);
            (void)y;
            double dd = dist_to_boundary(d, x);
            lo = std::min(lo, dd);
            hi = std::max(hi, dd);
        }
        CHECK(hi / lo > 100.0);
    }
}

TEST_CASE("domain classification") {
    CHECK(DomainShape::half_space(2).is_convex());
    CHECK(DomainShape::unit_ball(4).is_convex());
    CHECK(DomainShape::strip(2).is_convex());
    CHECK_FALSE(DomainShape::punctured(2, {Point::zero(2)}).is_convex());
    CHECK_FALSE(DomainShape::box_minus_ball(2).is_convex());
}

TEST_CASE("domain validation") {
    CHECK_THROWS_AS(DomainShape::half_space(1), std::invalid_argument);
    CHECK_THROWS_AS(DomainShape::half_space(9), std::invalid_argument);
    CHECK_THROWS_AS(DomainShape::punctured(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(DomainShape::strip(2, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(DomainShape::box_minus_ball(2, 1.0, 1.5), std::invalid_argument);
}
