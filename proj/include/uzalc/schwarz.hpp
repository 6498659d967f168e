#pragma once

#include <array>
#include <vector>

#include "uzalc/series.hpp"

namespace uzalc {

/// Schur parameters gamma_0..gamma_{d-1} generating, via the Mobius recursion
/// with terminal function psi_d = 0, an analytic self-map psi of the unit
/// disk. Degree d = 0 means psi = 0. Each |gamma_k| must stay below 1 by at
/// least kSchurMargin so the induced psi maps the disk into the closed disk.
struct SchurParams {
    static constexpr double kSchurMargin = 1e-9;

    SchurParams() = default;
    explicit SchurParams(std::vector<Complex> gammas);

    int degree() const { return static_cast<int>(gamma.size()); }

    std::vector<Complex> gamma;
};

/// psi(z) by the backward recursion
///   psi_d = 0,  psi_k(z) = (gamma_k + z psi_{k+1}(z)) / (1 + conj(gamma_k) z psi_{k+1}(z)).
/// Requires |z| <= 1. Throws NumericDegeneracyError if a recursion denominator
/// falls below 1e-14 in magnitude (cannot happen for |gamma|, |z| < 1).
Complex schur_eval(const SchurParams& params, Complex z);

/// (omega(z), omega'(z)) where omega(z) = z psi(z), by forward-mode
/// differentiation of the recursion. Exact rational evaluation, no truncation.
std::array<Complex, 2> omega_and_deriv(const SchurParams& params, Complex z);

/// Batch psi evaluation (values only), one pass per recursion level.
std::vector<Complex> schur_eval_batch(const SchurParams& params, const std::vector<Complex>& zs);

/// Series of omega(z) = z psi(z) through the given order, computed by running
/// the Schur recursion in series arithmetic. Coefficient k equals c_k; c_0 = 0.
TruncatedSeries omega_series(const SchurParams& params, int order);

/// Upper estimate of sup_{|z|=1} |omega'(z)|: the max over grid_size
/// equispaced boundary points, inflated by 10*(pi/grid_size) times the
/// observed max slope of the boundary profile between adjacent points.
/// Requires grid_size >= 64. A value <= 1 certifies that any function built
/// on this omega lies in the class.
double deriv_boundary_sup(const SchurParams& params, int grid_size = 8192);

/// Raw max of |omega'| over the same boundary grid without the slope
/// inflation: a lower bound on the true supremum. Cheap at coarse grids,
/// which makes it a sound early-reject filter for membership screening.
double deriv_grid_max(const SchurParams& params, int grid_size);

struct Lemma1Report {
    bool pass = false;
    std::array<double, 3> slacks{};  // bound minus |c_k|, k = 1..3
};

/// Coefficient-bound check for the representing Schwarz function:
///   |c1| <= 1,  |c2| <= (1-|c1|^2)/2,  |c3| <= (1 - |c1|^2 - 4|c2|^2/(1+|c1|))/3.
/// pass iff every slack >= -tol.
Lemma1Report lemma1_check(Complex c1, Complex c2, Complex c3, double tol);

/// The Schwarz function omega(z) = z psi(z) of the representation, with its
/// coefficient series and a cached boundary estimate of sup |omega'|.
///
/// Two constructions:
///  - from_schur: psi from Schur parameters, all |gamma_k| <= 1 - 1e-9;
///  - unimodular_linear: the exact limit family omega(z) = u z with |u| = 1
///    (|u| <= 1 accepted), kept in closed form so sharpness witnesses are
///    exact. The Koebe representation is u = -e^{2 i theta}.
class SchwarzFunction {
public:
    static SchwarzFunction from_schur(SchurParams params, int order = 64,
                                      int grid_size = 8192);
    static SchwarzFunction unimodular_linear(Complex u, int order = 64);

    bool is_linear() const { return linear_; }
    const SchurParams& params() const { return params_; }
    Complex linear_coeff() const { return linear_coeff_; }

    int order() const { return series_.order(); }
    const TruncatedSeries& series() const { return series_; }

    /// Series recomputed at a different order (returns the cache when equal).
    TruncatedSeries series_at(int order) const;

    Complex c(int k) const { return series_[k]; }

    /// Exact pointwise omega(z).
    Complex eval(Complex z) const;

    /// Exact pointwise omega'(z).
    Complex deriv_eval(Complex z) const;

    /// Cached boundary estimate of sup_{|z|=1} |omega'|.
    double deriv_sup() const { return deriv_sup_; }

    /// The Schwarz function representing the rotated reconstruction:
    /// omega_theta(z) = e^{i theta} omega(e^{i theta} z).
    SchwarzFunction rotated(double theta) const;

    Lemma1Report lemma1(double tol = 1e-9) const;

private:
    SchwarzFunction(SchurParams params, bool linear, Complex u, int order, int grid_size);

    SchurParams params_;
    bool linear_ = false;
    Complex linear_coeff_{0.0, 0.0};
    TruncatedSeries series_;
    double deriv_sup_ = 0.0;
    int grid_size_ = 8192;
};

}  // namespace uzalc
