#pragma once
// Arithmetic-geometric mean, the complete elliptic integral K, the planar
// Grotzsch capacity gamma_2, and the tail estimate of log(lambda_2).

#include <vector>

namespace pointpair {

// agm(a, b) for a, b > 0; quadratic convergence, iterated to double precision
double agm(double a, double b);

// K(r) = integral_0^1 dx / sqrt((1-x^2)(1-r^2 x^2)) = pi / (2 agm(1, sqrt(1-r^2)))
// for r in [0, 1)
double ell_K(double r);

// K(sqrt(1 - rc^2)) given the complementary modulus rc in (0, 1]; avoids the
// cancellation in forming sqrt(1 - r^2) when r is close to 1
double ell_K_from_complement(double rc);

// gamma_2(t) = 4 K(1/t) / K(sqrt(1 - 1/t^2)) for t > 1; strictly decreasing
double gamma2(double t);

// Tail estimates of log(lambda_2) on a geometric grid of t values.
//
// estimates[i] uses the convergent orientation 2 pi / gamma_2(t) - log t,
// which tends to log 4. displayed_form[i] records the other reading of the
// same expression, gamma_2(t)/(2 pi) - log t, which diverges to -infinity in
// the plane; it is reported alongside so the discrepancy stays visible.
struct LambdaEstimate {
    std::vector<double> t_values;
    std::vector<double> estimates;
    std::vector<double> displayed_form;
    double extrapolated = 0;
    bool converged = false;
};

// t_max >= 100 required; converged is false when the tail has not settled
LambdaEstimate lambda2_estimate(double t_max);

}  // namespace pointpair
