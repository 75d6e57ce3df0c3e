#pragma once
// Canonical domains with exact boundary distance, nearest-boundary points,
// reflections, and seeded interior-pair sampling.
//
// Supported dimensions are 2..8; points are fixed-capacity to keep the
// sampling campaigns allocation-free.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pointpair/rng.hpp"

namespace pointpair {

inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 8;

// Relative coincidence tolerance for sampled pairs.
inline constexpr double kPairEps = 1e-12;

class Point {
  public:
    Point() = default;
    Point(std::initializer_list<double> cs) : n_(static_cast<int>(cs.size())) {
        int i = 0;
        for (double c : cs) c_[i++] = c;
    }
    static Point zero(int n) {
        Point p;
        p.n_ = n;
        return p;
    }

    int dim() const { return n_; }
    double operator[](int i) const { return c_[i]; }
    double& operator[](int i) { return c_[i]; }

    bool operator==(const Point& o) const {
        if (n_ != o.n_) return false;
        for (int i = 0; i < n_; ++i)
            if (c_[i] != o.c_[i]) return false;
        return true;
    }

  private:
    std::array<double, kMaxDim> c_{};
    int n_ = 0;
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(double s, const Point& a);
double dot(const Point& a, const Point& b);
double norm_sq(const Point& a);
double norm(const Point& a);
double dist(const Point& a, const Point& b);

enum class DomainKind { HalfSpace, UnitBall, PuncturedSpace, Strip, BallComplementInBox };

// Value-type description of a canonical domain.
//
//   HalfSpace            x_n > 0
//   UnitBall             |x| < 1
//   PuncturedSpace       R^n minus a finite set of punctures
//   Strip                0 < x_1 < 2r
//   BallComplementInBox  open box (-L, L)^n minus the closed ball of radius
//                        r centered at q = (-L, 0, ..., 0); the center sits
//                        on a box face, so the removed set is a half-ball
//                        carved out of the box (non-convex on purpose)
struct DomainShape {
    DomainKind kind = DomainKind::HalfSpace;
    int dim = 2;
    std::vector<Point> punctures;   // PuncturedSpace only
    double strip_radius = 1.0;      // Strip: half of the width
    double box_halfside = 2.0;      // BallComplementInBox
    double ball_radius = 1.0;       // BallComplementInBox

    static DomainShape half_space(int n);
    static DomainShape unit_ball(int n);
    static DomainShape punctured(int n, std::vector<Point> ps);
    static DomainShape strip(int n, double r = 1.0);
    static DomainShape box_minus_ball(int n, double L = 2.0, double r = 1.0);

    Point removed_ball_center() const;  // q = (-L, 0, ..., 0)
    bool is_convex() const;
    std::string label() const;
};

bool contains(const DomainShape& d, const Point& x);

// Exact closed-form distance to the boundary. Throws std::domain_error when
// x is on or outside the boundary, std::invalid_argument on dim mismatch.
double dist_to_boundary(const DomainShape& d, const Point& x);

// Boundary point realizing dist_to_boundary. Ties break deterministically:
// the ball center maps to +e_1, the strip midline to the x_1 = 0 face,
// equidistant punctures to the lowest index, box faces in coordinate order
// before the removed sphere.
Point nearest_boundary_point(const DomainShape& d, const Point& x);

// Exact mirror image across a boundary hyperplane; an involution.
// HalfSpace has a single face (argument ignored); Strip faces are
// 0 (x_1 = 0) and 1 (x_1 = 2r). Other domains have no flat boundary.
Point reflect_across_boundary(const DomainShape& d, const Point& x, int face = 0);

// Maps an arbitrary point to some point of the boundary (used by the
// brute-force chord-length oracle). Not necessarily the nearest one, but
// always a valid boundary point.
Point project_to_boundary(const DomainShape& d, const Point& x);

// Seeded interior-pair stream. pair(i) is a pure function of (parameters,
// seed, i), so streams can be partitioned arbitrarily across threads without
// changing results. Pairs mix independent draws with correlated ones so the
// near-coincident (|x-y| << d), comparable, and far regimes all appear.
// Coincident draws (|x-y| below kPairEps relative to local scale) are
// rejected and redrawn from the same per-index stream.
struct PairSampler {
    DomainShape domain;
    uint64_t seed = 0;
    double scale_decades = 4.0;
    uint64_t count = 0;

    Point point(SplitMix64& g) const;
    std::pair<Point, Point> pair(uint64_t index) const;
    std::array<Point, 3> triple(uint64_t index) const;
};

}  // namespace pointpair
