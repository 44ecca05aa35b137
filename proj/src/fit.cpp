#include "somnus/fit.hpp"

#include <cmath>
#include <stdexcept>

namespace somnus {

std::string form_name(FitForm f) {
    switch (f) {
        case FitForm::Log2Sq: return "log2(d)^2";
        case FitForm::Log2: return "log2(d)";
        case FitForm::DLogD: return "d*log2(d)";
        case FitForm::Power: return "d^e";
        case FitForm::Linear: return "d";
    }
    return "?";
}

double eval_form(FitForm f, double delta, double exponent) {
    double l = std::log2(std::max(delta, 2.0));
    switch (f) {
        case FitForm::Log2Sq: return l * l;
        case FitForm::Log2: return l;
        case FitForm::DLogD: return delta * l;
        case FitForm::Power: return std::pow(delta, exponent);
        case FitForm::Linear: return delta;
    }
    return 0.0;
}

LeadingFit fit_leading(const std::vector<double>& xs, const std::vector<double>& ys, FitForm f,
                       double exponent) {
    if (xs.size() != ys.size() || xs.empty()) throw std::invalid_argument("fit_leading: bad data");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double fx = eval_form(f, xs[i], exponent);
        num += ys[i] * fx;
        den += fx * fx;
    }
    LeadingFit fit;
    fit.coefficient = num / den;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double pred = fit.coefficient * eval_form(f, xs[i], exponent);
        double rel = ys[i] == 0.0 ? std::abs(pred) : std::abs(pred - ys[i]) / std::abs(ys[i]);
        fit.max_rel_residual = std::max(fit.max_rel_residual, rel);
    }
    return fit;
}

AffineFit fit_affine(const std::vector<double>& xs, const std::vector<double>& ys, FitForm f,
                     double exponent) {
    if (xs.size() != ys.size() || xs.size() < 2) throw std::invalid_argument("fit_affine: bad data");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    auto n = static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double fx = eval_form(f, xs[i], exponent);
        sx += fx;
        sy += ys[i];
        sxx += fx * fx;
        sxy += fx * ys[i];
    }
    double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw std::invalid_argument("fit_affine: degenerate xs");
    AffineFit fit;
    fit.a = (n * sxy - sx * sy) / denom;
    fit.b = (sy - fit.a * sx) / n;
    return fit;
}

double fit_exponent(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("fit_exponent: bad data");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    auto n = static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] <= 0 || ys[i] <= 0) throw std::invalid_argument("fit_exponent: need positives");
        double lx = std::log(xs[i]);
        double ly = std::log(ys[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

bool growth_consistent(const std::vector<double>& xs, const std::vector<double>& ys, FitForm f,
                       double rel_tol, double exponent) {
    AffineFit fit = fit_affine(xs, ys, f, exponent);
    if (fit.a <= 0.0) return false;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        double pred_i = fit.a * eval_form(f, xs[i], exponent) + fit.b;
        double pred_j = fit.a * eval_form(f, xs[i + 1], exponent) + fit.b;
        if (pred_i <= 0 || pred_j <= 0 || ys[i] <= 0) return false;
        double measured_ratio = ys[i + 1] / ys[i];
        double predicted_ratio = pred_j / pred_i;
        double rel = std::abs(measured_ratio - predicted_ratio) / predicted_ratio;
        if (rel > rel_tol) return false;
    }
    return true;
}

}  // namespace somnus
