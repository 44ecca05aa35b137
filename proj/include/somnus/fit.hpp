#pragma once

#include <string>
#include <vector>

namespace somnus {

// Growth forms used by the trade-off reports, evaluated at the degree bound.
enum class FitForm { Log2Sq, Log2, DLogD, Power, Linear };

std::string form_name(FitForm f);
double eval_form(FitForm f, double delta, double exponent = 1.0);

// y ~ c * f(x). Least squares on the leading term only.
struct LeadingFit {
    double coefficient = 0.0;
    double max_rel_residual = 0.0;
};
LeadingFit fit_leading(const std::vector<double>& xs, const std::vector<double>& ys, FitForm f,
                       double exponent = 1.0);

// y ~ a * f(x) + b, absorbing the additive lower-order terms the bounds carry.
struct AffineFit {
    double a = 0.0;
    double b = 0.0;
};
AffineFit fit_affine(const std::vector<double>& xs, const std::vector<double>& ys, FitForm f,
                     double exponent = 1.0);

// Log-log least-squares slope (the fitted exponent of y against x).
double fit_exponent(const std::vector<double>& xs, const std::vector<double>& ys);

// Growth-consistency check: ratios of measured values between consecutive xs
// stay within rel_tol of the affine fit's predicted ratios.
bool growth_consistent(const std::vector<double>& xs, const std::vector<double>& ys, FitForm f,
                       double rel_tol, double exponent = 1.0);

}  // namespace somnus
