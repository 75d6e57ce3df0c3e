#pragma once
// Declarative catalog of the proved two-sided bounds between the generalized
// point pair function and the comparison metrics, with campaign kernels that
// verify them over seeded sample streams.
//
// Each record stores its constants as piecewise closed forms of alpha with
// breakpoints at alpha = 2 and alpha = 4, so the checker is one generic
// loop. Where a stated constant fails on a checkable configuration
// (counterexamples in the tests), the record carries the sound proof-chain
// constant instead and keeps the stated one in stated_note, which reports
// surface.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pointpair/geometry.hpp"
#include "pointpair/metrics.hpp"

namespace pointpair {

struct applicability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class MetricKind { Gpp, JStar, S, T, ThHalfRho };

// Comparison metric of a record. alpha is the parameter of a Gpp reference
// (the classical point pair function is Gpp with alpha = 4).
struct MetricId {
    MetricKind kind = MetricKind::JStar;
    double alpha = 4.0;
    std::string name() const;
};

double eval_metric(const MetricId& m, const DomainShape& d, const Point& x, const Point& y);

struct AlphaBranch {
    double alpha_max;       // branch applies for alpha <= alpha_max
    double (*value)(double);
    const char* text;       // closed form, for reports
};

struct PiecewiseAlpha {
    std::vector<AlphaBranch> branches;  // increasing alpha_max, last = +inf
    double operator()(double alpha) const;
    const char* describe(double alpha) const;
};

enum class DomainClass { Any, Convex, SinglePuncture, HalfSpaceOnly, UnitBallOnly };

struct BoundRecord {
    std::string id;
    MetricId rhs;
    PiecewiseAlpha lower, upper;
    DomainClass applies = DomainClass::Any;
    bool sharp_lower = false, sharp_upper = false;
    std::string summary;
    std::string stated_note;  // nonempty when a stated constant needed correction

    bool applicable(const DomainShape& d) const;
};

// All shipped records: thm3.1, lem3.3, lem4.1, lem4.2, lem4.2-convex,
// lem4.3, cor5.1, thm5.2.
const std::vector<BoundRecord>& catalog();
const BoundRecord& record(const std::string& id);  // throws std::invalid_argument

struct PairMargins {
    double lower_margin;  // lhs - lower_const * rhs
    double upper_margin;  // upper_const * rhs - lhs
    double quotient;      // lhs / rhs (NaN when rhs = 0)
};

// Throws applicability_error when the record does not cover the domain.
PairMargins check_pair(const BoundRecord& b, const DomainShape& d, double alpha,
                       const Point& x, const Point& y);

struct Witness {
    Point x, y;
    uint64_t index = 0;
    double value = 0;
};

struct ViolationReport {
    std::string bound_id;
    double alpha = 0;
    std::string domain;
    double lower_const = 0, upper_const = 0;
    double worst_lower_margin = 0, worst_upper_margin = 0;
    Witness worst_lower, worst_upper;
    double max_quotient = 0, min_quotient = 0;
    Witness max_q, min_q;
    uint64_t samples = 0;
    double tol = 0;
    bool pass = false;
};

// Campaign kernel: evaluates margins over sampler.pair(0 .. count-1) and
// keeps the worst of each side. OpenMP path; ties break toward the lower
// sample index so any thread count gives byte-identical reports.
ViolationReport verify_bound(const BoundRecord& b, const DomainShape& d, double alpha,
                             const PairSampler& sampler, double tol);

// Plain-loop reference implementation, kept for testing and benchmarking.
ViolationReport verify_bound_serial(const BoundRecord& b, const DomainShape& d, double alpha,
                                    const PairSampler& sampler, double tol);

// Relaxed-triangle-inequality constants for gpp claimed by the source
// (stated) and actually produced by its displayed proof chain. They agree
// for alpha <= 4 and diverge above; the stated one even drops below 1 for
// alpha > 2 + 2 sqrt(5), which no quasi-metric constant can.
struct QuasiConstants {
    double stated;
    double proof_chain;  // sqrt((alpha+4)/alpha) * max(1, sqrt(alpha)/2)
};
QuasiConstants quasimetric_constant_paper(double alpha);

struct QuasiEstimate {
    double value = 1;          // empirical sup of p(x,y)/(p(x,z)+p(z,y))
    std::array<Point, 3> witness{};
    uint64_t samples = 0;
    double scan_value = 1;     // before local refinement
    bool refined = false;
};

// Sup over sampled triples, then Nelder-Mead refinement from the best one.
// The degenerate triple z = x (ratio exactly 1) is always included, so the
// estimate is >= 1. Never exceeds the true constant.
QuasiEstimate estimate_quasimetric_constant(const DomainShape& d, double alpha,
                                            const PairSampler& sampler, bool refine = true);
QuasiEstimate estimate_quasimetric_constant_serial(const DomainShape& d, double alpha,
                                                   const PairSampler& sampler, bool refine = true);

// --------------------------------------------------------------------------
// Extremal configurations.

// Equality pair for the upper constant sqrt((alpha+4)/alpha) against j* in
// the half-space: x = (0,...,0,1), y = (alpha/2, 0,...,0, 1).
std::pair<Point, Point> extremal_halfspace_pair(double alpha, int n);

// Same equality quotient in a strip, built from the inscribed ball touching
// both faces: center l, face contacts u and v; x = l + alpha (u-l)/(alpha+4),
// y = l + alpha (v-l)/(alpha+4).
std::pair<Point, Point> extremal_strip_pair(double alpha, const DomainShape& strip);

// Same equality quotient in the box-minus-ball domain, built against the
// face opposite the removed ball, where the domain contains a half-ball of
// radius r whose equatorial diameter lies on the boundary. Posted values:
// d(x) = d(y) = r/(alpha+4), |x-y| = alpha r / (2 (alpha+4)).
std::pair<Point, Point> extremal_halfball_pair(double alpha, const DomainShape& box);

// Pair along an inward normal with d(y)/d(x) = 1 + k. The quotient
// p/j* = (k+2)/sqrt(k^2 + alpha(1+k)) tends to 2/sqrt(alpha) as k -> 0+ and
// to 1 as k -> inf, which are the two lower-constant limits of the j*
// bounds; pick k by which branch binds for the given alpha.
std::pair<Point, Point> extremal_limit_pair(const DomainShape& d, double alpha, double k);

// Witness for the t-metric upper constant 4/sqrt(alpha(4-alpha)), alpha < 2:
// x interior, z its nearest boundary point, y = x + alpha (z - x)/2.
std::pair<Point, Point> extremal_t_pair(double alpha, const DomainShape& d, const Point& x);

}  // namespace pointpair
