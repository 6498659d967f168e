#include "uzalc/classu.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "uzalc/circle.hpp"
#include "uzalc/errors.hpp"

namespace uzalc {

namespace {

constexpr double kWindingRadius = 0.999;
constexpr int kWindingSamples = 4096;

// No root of 1 - a2 z strictly inside the unit disk <=> |a2| <= 1.
bool linear_denominator_pole_free(Complex a2) { return std::abs(a2) <= 1.0; }

// Roots of D(z) = 1 - a2 z - u z^2 must not lie strictly inside the disk.
bool quadratic_denominator_pole_free(Complex a2, Complex u) {
    if (std::abs(u) < 1e-300) return linear_denominator_pole_free(a2);
    const Complex disc = std::sqrt(a2 * a2 + 4.0 * u);
    const Complex r1 = (-a2 + disc) / (2.0 * u);
    const Complex r2 = (-a2 - disc) / (2.0 * u);
    const double tol = 1.0 - 1e-12;
    return std::abs(r1) >= tol && std::abs(r2) >= tol;
}

// Winding number of D(z) = 1 - a2 z - z omega(z) along |z| = kWindingRadius.
// Zero winding (and no near-zero sample) means no pole in the sampled disk.
bool winding_pole_free(Complex a2, const SchurParams& params) {
    const auto& unit = detail::unit_circle(kWindingSamples);
    std::vector<Complex> zs(unit.size());
    for (size_t j = 0; j < zs.size(); ++j) zs[j] = kWindingRadius * unit[j];
    const std::vector<Complex> psi = schur_eval_batch(params, zs);

    double total = 0.0;
    Complex prev, first;
    for (size_t j = 0; j < zs.size(); ++j) {
        const Complex z = zs[j];
        const Complex d = 1.0 - a2 * z - z * z * psi[j];
        if (std::abs(d) < 1e-13) return false;
        if (j > 0) total += std::arg(d / prev);
        else first = d;
        prev = d;
    }
    total += std::arg(first / prev);
    const long winding = std::lround(total / (2.0 * std::numbers::pi));
    return winding == 0;
}

}  // namespace

ClassUFunction ClassUFunction::build(Complex a2, SchwarzFunction omega, int order,
                                     bool lenient) {
    if (order < 5) throw std::invalid_argument("ClassUFunction needs order >= 5");

    const TruncatedSeries omega_s = omega.series_at(order);
    TruncatedSeries den = TruncatedSeries::constant(1.0, order) -
                          TruncatedSeries::monomial(1, order, a2) - shift_up(omega_s);
    TruncatedSeries coeffs = shift_up(recip(den));

    const double margin = 1.0 - omega.deriv_sup();

    bool pole_free;
    if (omega.is_linear())
        pole_free = quadratic_denominator_pole_free(a2, omega.linear_coeff());
    else if (omega.params().degree() == 0)
        pole_free = linear_denominator_pole_free(a2);
    else
        pole_free = winding_pole_free(a2, omega.params());

    if (!pole_free && !lenient)
        throw NotAnalyticError("reconstruction denominator vanishes inside the disk");

    return ClassUFunction(a2, std::move(omega), std::move(coeffs), margin, pole_free);
}

ClassUFunction ClassUFunction::koebe(double theta, int order) {
    const Complex phase = std::polar(1.0, theta);
    return build(2.0 * phase, SchwarzFunction::unimodular_linear(-phase * phase, order), order);
}

std::array<Complex, 3> ClassUFunction::closed_form_a345() const {
    const Complex c1 = omega_.c(1), c2 = omega_.c(2), c3 = omega_.c(3);
    const Complex a2sq = a2_ * a2_;
    const Complex a3 = c1 + a2sq;
    const Complex a4 = c2 + 2.0 * a2_ * c1 + a2sq * a2_;
    const Complex a5 = c3 + 2.0 * a2_ * c2 + c1 * c1 + 3.0 * a2sq * c1 + a2sq * a2sq;
    return {a3, a4, a5};
}

TruncatedSeries ClassUFunction::defect_series() const {
    const TruncatedSeries f_over_z = shift_down(coeffs_);  // constant term 1
    const TruncatedSeries z_over_f = recip(f_over_z);
    return z_over_f * z_over_f * deriv(coeffs_) - TruncatedSeries::constant(1.0, order());
}

ClassUFunction ClassUFunction::rotated(double theta) const {
    return build(a2_ * std::polar(1.0, theta), omega_.rotated(theta), order(), true);
}

Complex ClassUFunction::eval(Complex z) const { return z / denominator_eval(z); }

Complex ClassUFunction::denominator_eval(Complex z) const {
    return 1.0 - a2_ * z - z * omega_.eval(z);
}

TruncatedSeries ClassUFunction::denominator_series() const {
    return TruncatedSeries::constant(1.0, order()) - TruncatedSeries::monomial(1, order(), a2_) -
           shift_up(omega_.series_at(order()));
}

}  // namespace uzalc
