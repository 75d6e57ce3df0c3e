#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pointpair/bounds.hpp"
#include "pointpair/geometry.hpp"

namespace pointpair {

// Numerical extremum searches over tuples of domain points.
//
// Each domain has an unconstrained parametrization of its interior so that
// Nelder-Mead can run on plain R^D. Parametrizations reach arbitrarily close
// to every boundary component; points that still land outside (punctures,
// the removed ball) are rejected through the objective.

enum class Extremum { Maximize, Minimize };

using Objective = std::function<double(const std::vector<Point>&)>;

struct SearchOptions {
    int random_starts = 32;
    int max_evals_per_start = 2000;  // objective evaluations per Nelder-Mead run
    double shrink_tol = 1e-12;       // simplex diameter at which a run stops
    double start_spread = 2.0;       // gaussian scale for random starts in parameter space
    uint64_t seed = 0;
};

struct SearchResult {
    double best_value = 0;
    std::vector<Point> witness;
    uint64_t evals = 0;
    int starts = 0;
};

int param_dim(const DomainShape& d);
Point param_to_point(const DomainShape& d, const double* w);
void point_to_param(const DomainShape& d, const Point& x, double* w);

// Maximize or minimize f over m-tuples of interior points. Warm starts are
// refined first, then `random_starts` gaussian starts in parameter space.
// Objectives may return NaN or +/-inf to reject a configuration.
SearchResult refine_extremum(const DomainShape& d, int m, const Objective& f, Extremum ext,
                             const SearchOptions& opt = {},
                             const std::vector<std::vector<Point>>& warm_starts = {});

// ---------------------------------------------------------------------------
// sharpness of catalog constants

struct SharpnessResult {
    std::string bound_id;
    double alpha = 0;
    std::string domain;
    double lower_const = 0, upper_const = 0;
    double scan_min = 0, scan_max = 0;  // extreme quotients seen by the sampler
    double min_quotient = 0, max_quotient = 0;  // after local refinement
    std::array<Point, 2> min_witness{}, max_witness{};
    bool sharp_lower = false, sharp_upper = false;
    double lower_gap = 0, upper_gap = 0;  // relative distance of quotient to constant
    uint64_t samples = 0;
};

// Scan quotients lhs/rhs with the sampler, then push both extremes with
// Nelder-Mead, warm-started from the scan witnesses and from the closed-form
// extremal configurations valid on the domain.
SharpnessResult sharpness_search(const BoundRecord& b, const DomainShape& d, double alpha,
                                 const PairSampler& sampler, const SearchOptions& opt = {});

// ---------------------------------------------------------------------------
// Moebius self-maps of the plane unit disk

// T_a(z) = (z - a) / (1 - conj(a) z), a in the open disk; dim 2 only.
Point mobius_T(const Point& a, const Point& z);

// Distortion of p^alpha under a fixed T_a: worst margins against the proved
// two-sided constants min(sqrt(alpha)/2, 1/2, 1/sqrt(alpha)) and
// max(2/sqrt(alpha), 2, sqrt(alpha)).
struct MobiusCheck {
    double alpha = 0;
    Point a;
    double lower_const = 0, upper_const = 0;
    double worst_lower_margin = 0, worst_upper_margin = 0;
    Witness worst_lower, worst_upper;
    uint64_t samples = 0;
    double tol = 0;
    bool pass = false;
};

double mobius_lower_const(double alpha);
double mobius_upper_const(double alpha);
MobiusCheck mobius_distortion_check(double alpha, const Point& a, const PairSampler& sampler,
                                    double tol);

// Conjectured dimension-free bound p(T x, T y) <= (1 + |a|) p(x, y):
// sampled sup of the ratio, plus a refinement pass that also probes
// near-coincident pairs at the origin, where the ratio approaches 1 + |a|.
struct ConjectureResult {
    double alpha = 0;
    Point a;
    double bound = 0;  // 1 + |a|
    double sup_ratio = 0;
    std::array<Point, 2> witness{};
    uint64_t samples = 0;
    bool refined = false;
    double tol = 0;
    bool holds = false;  // sup_ratio <= bound + tol
};

ConjectureResult conjecture_scan(double alpha, const Point& a, const PairSampler& sampler,
                                 bool refine = true, double tol = 1e-6);
ConjectureResult conjecture_scan_serial(double alpha, const Point& a, const PairSampler& sampler,
                                        bool refine = true, double tol = 1e-6);

// ---------------------------------------------------------------------------
// quasiregular distortion on the plane unit disk

// z |z|^(K-1): the standard radial stretch, inner dilatation K.
Point radial_stretch(const Point& z, double K);

// Grotzsch ring constant for the plane; lambda2_estimate converges to it.
inline constexpr double kLambda2 = 4.0;

// factor in p(f x, f y) <= factor * p(x, y)^(1/K) for K-quasiregular
// self-maps of the disk; reduces to the Moebius upper constant at K = 1
double qr_corollary_factor(double alpha, double K);

struct DistortionCheck {
    double alpha = 0, K = 0, c = 0;  // c = 1/K
    double factor = 0;               // qr_corollary_factor(alpha, K)
    double worst_th_margin = 0;      // min of lambda^(1-c) th^c - th(fx,fy)
    Witness worst_th;
    double worst_p_margin = 0;       // min of factor * p^c - p(fx,fy)
    Witness worst_p;
    uint64_t samples = 0;
    double tol = 0;
    bool pass = false;
};

DistortionCheck qr_distortion_check(double alpha, double K, const PairSampler& sampler,
                                    double tol);

}  // namespace pointpair
