#pragma once
// The generalized point pair function and the hyperbolic-type metrics it is
// compared against. All take interior points of a canonical domain; x = y is
// allowed and evaluates to 0.

#include "pointpair/geometry.hpp"

namespace pointpair {

// p^a(x,y) = |x-y| / sqrt(|x-y|^2 + a d(x) d(y)),  a > 0.
// Evaluated as 1/sqrt(1 + a (d(x)/|x-y|)(d(y)/|x-y|)) to stay overflow-free
// across widely separated scales.
double gpp(const DomainShape& d, double alpha, const Point& x, const Point& y);

// classical point pair function, gpp with a = 4
double point_pair(const DomainShape& d, const Point& x, const Point& y);

// j(x,y) = log(1 + |x-y| / min(d(x), d(y)))
double j_metric(const DomainShape& d, const Point& x, const Point& y);

// j*(x,y) = th(j/2) = |x-y| / (|x-y| + 2 min(d(x), d(y)))
double j_star(const DomainShape& d, const Point& x, const Point& y);

// t(x,y) = |x-y| / (|x-y| + d(x) + d(y))
double t_metric(const DomainShape& d, const Point& x, const Point& y);

enum class SMode { Auto, ClosedForm, BruteForce };

// s(x,y) = |x-y| / inf_z (|x-z| + |z-y|) over boundary points z.
//
// ClosedForm routes: half-space and strip by reflection, punctured space by
// an exact minimum over punctures, the ball by golden-section minimization
// of the boundary angle in the plane through x, y and the origin (16 starts,
// tolerance 1e-10). The box-minus-ball variant has no closed form and falls
// back to BruteForce; *fell_back is set when provided.
//
// BruteForce is the independent oracle: dense candidates along the chord,
// projected to the boundary, then pattern-search refinement.
double s_metric(const DomainShape& d, const Point& x, const Point& y,
                SMode mode = SMode::Auto, bool* fell_back = nullptr);

// hyperbolic distance, half-space model: ch(rho) = 1 + |x-y|^2/(2 x_n y_n)
double rho_half_space(const DomainShape& d, const Point& x, const Point& y);

// hyperbolic distance, ball model: sh^2(rho/2) = |x-y|^2/((1-|x|^2)(1-|y|^2))
double rho_ball(const DomainShape& d, const Point& x, const Point& y);

// th(rho/2), computed from the ch/sh closed forms without forming rho, so
// near-coincident points lose no precision. Half-space and ball only.
double th_half_rho(const DomainShape& d, const Point& x, const Point& y);

}  // namespace pointpair
