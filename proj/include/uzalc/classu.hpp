#pragma once

#include <array>

#include "uzalc/schwarz.hpp"
#include "uzalc/series.hpp"

namespace uzalc {

/// Function f reconstructed from (a2, omega) through
///   z / f(z) = 1 - a2 z - z omega(z),
/// with cached Taylor coefficients (index n holds a_n, a_0 = 0, a_1 = 1),
/// the membership margin 1 - sup_{|z|=1} |omega'|, and a pole-freeness
/// verdict for the reconstruction's denominator.
class ClassUFunction {
public:
    /// Reconstructs f and its coefficient series through order N.
    /// Pole-freeness of D(z) = 1 - a2 z - z omega(z) is decided by the
    /// winding number of D along |z| = 0.999 sampled at 4096 points, except
    /// for degree-0 and exact-linear omega where the denominator is a
    /// polynomial of degree <= 2 and the roots are checked in closed form.
    /// A pole inside the disk throws NotAnalyticError unless lenient is set,
    /// in which case the object is returned with pole_free() == false.
    static ClassUFunction build(Complex a2, SchwarzFunction omega, int order = 64,
                                bool lenient = false);

    /// The rotated Koebe witness: a2 = 2 e^{i theta}, omega(z) = -e^{2 i theta} z,
    /// giving coefficients a_n = n e^{i (n-1) theta}.
    static ClassUFunction koebe(double theta = 0.0, int order = 64);

    Complex a2() const { return a2_; }
    const SchwarzFunction& omega() const { return omega_; }

    int order() const { return coeffs_.order(); }
    const TruncatedSeries& coeffs() const { return coeffs_; }
    Complex coefficient(int n) const { return coeffs_.at(n); }

    double membership_margin() const { return membership_margin_; }
    bool pole_free() const { return pole_free_; }

    /// The closed forms of a3, a4, a5 in terms of a2 and c1, c2, c3:
    ///   a3 = c1 + a2^2
    ///   a4 = c2 + 2 a2 c1 + a2^3
    ///   a5 = c3 + 2 a2 c2 + c1^2 + 3 a2^2 c1 + a2^4
    std::array<Complex, 3> closed_form_a345() const;

    /// Series of (z/f)^2 f' - 1, computed entirely in series arithmetic.
    /// Equals z^2 omega'(z) coefficientwise (accurate through order N-2).
    TruncatedSeries defect_series() const;

    /// Coefficients a_n -> e^{i (n-1) theta} a_n, realized by rebuilding from
    /// a2 e^{i theta} and the rotated omega.
    ClassUFunction rotated(double theta) const;

    /// Exact rational evaluation f(z) = z / D(z), no truncation.
    Complex eval(Complex z) const;

    /// Exact rational evaluation of the denominator D(z) = 1 - a2 z - z omega(z).
    Complex denominator_eval(Complex z) const;

    /// Denominator as a series at the coefficient order.
    TruncatedSeries denominator_series() const;

private:
    ClassUFunction(Complex a2, SchwarzFunction omega, TruncatedSeries coeffs, double margin,
                   bool pole_free)
        : a2_(a2),
          omega_(std::move(omega)),
          coeffs_(std::move(coeffs)),
          membership_margin_(margin),
          pole_free_(pole_free) {}

    Complex a2_;
    SchwarzFunction omega_;
    TruncatedSeries coeffs_;
    double membership_margin_;
    bool pole_free_;
};

}  // namespace uzalc
