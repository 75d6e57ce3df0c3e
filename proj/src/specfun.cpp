#include "pointpair/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace pointpair {

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;
}

double agm(double a, double b) {
    if (!(a > 0) || !(b > 0)) throw std::invalid_argument("agm needs positive arguments");
    for (int i = 0; i < 64; ++i) {
        double am = 0.5 * (a + b);
        double gm = std::sqrt(a * b);
        if (std::abs(a - b) <= 4e-16 * am) return am;
        a = am;
        b = gm;
    }
    return 0.5 * (a + b);
}

double ell_K(double r) {
    if (!(r >= 0) || r >= 1) throw std::invalid_argument("ell_K needs r in [0, 1)");
    double rc = std::sqrt((1 - r) * (1 + r));
    return kPi / (2 * agm(1.0, rc));
}

double ell_K_from_complement(double rc) {
    if (!(rc > 0) || rc > 1) throw std::invalid_argument("complementary modulus must be in (0, 1]");
    return kPi / (2 * agm(1.0, rc));
}

double gamma2(double t) {
    if (!(t > 1)) throw std::invalid_argument("gamma2 needs t > 1");
    // pass 1/t straight through as the complementary modulus of the second K
    return 4 * ell_K(1 / t) / ell_K_from_complement(1 / t);
}

LambdaEstimate lambda2_estimate(double t_max) {
    if (!(t_max >= 100)) throw std::invalid_argument("lambda2_estimate needs t_max >= 100");
    LambdaEstimate out;
    for (double t = 100; t < t_max * 0.999999; t *= 10) out.t_values.push_back(t);
    out.t_values.push_back(t_max);
    for (double t : out.t_values) {
        double g = gamma2(t);
        out.estimates.push_back(2 * kPi / g - std::log(t));
        out.displayed_form.push_back(g / (2 * kPi) - std::log(t));
    }
    out.extrapolated = out.estimates.back();
    size_t m = out.estimates.size();
    out.converged = m >= 2 && std::abs(out.estimates[m - 1] - out.estimates[m - 2]) <= 1e-9;
    return out;
}

}  // namespace pointpair
