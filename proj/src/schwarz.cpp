#include "uzalc/schwarz.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "uzalc/circle.hpp"
#include "uzalc/errors.hpp"

namespace uzalc {

namespace {

constexpr double kDegeneracyTol = 1e-14;

}  // namespace

SchurParams::SchurParams(std::vector<Complex> gammas) : gamma(std::move(gammas)) {
    for (const Complex& g : gamma) {
        if (std::abs(g) > 1.0 - kSchurMargin)
            throw std::invalid_argument("Schur parameter magnitude exceeds 1 - 1e-9");
    }
}

Complex schur_eval(const SchurParams& params, Complex z) {
    Complex psi(0.0, 0.0);
    for (int k = params.degree() - 1; k >= 0; --k) {
        const Complex g = params.gamma[static_cast<size_t>(k)];
        const Complex u = z * psi;
        const Complex den = 1.0 + std::conj(g) * u;
        const double nd = std::norm(den);
        if (nd < kDegeneracyTol * kDegeneracyTol)
            throw NumericDegeneracyError("Schur recursion denominator collapsed");
        psi = (g + u) * std::conj(den) / nd;
    }
    return psi;
}

std::array<Complex, 2> omega_and_deriv(const SchurParams& params, Complex z) {
    Complex psi(0.0, 0.0), dpsi(0.0, 0.0);
    for (int k = params.degree() - 1; k >= 0; --k) {
        const Complex g = params.gamma[static_cast<size_t>(k)];
        const Complex u = z * psi;
        const Complex du = psi + z * dpsi;
        const Complex den = 1.0 + std::conj(g) * u;
        const double nd = std::norm(den);
        if (nd < kDegeneracyTol * kDegeneracyTol)
            throw NumericDegeneracyError("Schur recursion denominator collapsed");
        const Complex inv = std::conj(den) / nd;
        psi = (g + u) * inv;
        dpsi = du * (1.0 - std::norm(g)) * inv * inv;
    }
    return {z * psi, psi + z * dpsi};
}

TruncatedSeries omega_series(const SchurParams& params, int order) {
    TruncatedSeries psi(order);
    const TruncatedSeries one = TruncatedSeries::constant(1.0, order);
    for (int k = params.degree() - 1; k >= 0; --k) {
        const Complex g = params.gamma[static_cast<size_t>(k)];
        const TruncatedSeries u = shift_up(psi);
        psi = (TruncatedSeries::constant(g, order) + u) * recip(one + std::conj(g) * u);
    }
    return shift_up(psi);
}

std::vector<Complex> schur_eval_batch(const SchurParams& params, const std::vector<Complex>& zs) {
    const size_t n = zs.size();
    std::vector<double> pr(n, 0.0), pi_(n, 0.0);
    for (int k = params.degree() - 1; k >= 0; --k) {
        const Complex g = params.gamma[static_cast<size_t>(k)];
        const double gr = g.real(), gi = g.imag();
        for (size_t j = 0; j < n; ++j) {
            const double zr = zs[j].real(), zi = zs[j].imag();
            const double ur = zr * pr[j] - zi * pi_[j];
            const double ui = zr * pi_[j] + zi * pr[j];
            const double denr = 1.0 + gr * ur + gi * ui;
            const double deni = gr * ui - gi * ur;
            const double nd = denr * denr + deni * deni;
            if (nd < kDegeneracyTol * kDegeneracyTol)
                throw NumericDegeneracyError("Schur recursion denominator collapsed");
            const double inv = 1.0 / nd;
            const double nr = gr + ur, ni = gi + ui;
            pr[j] = (nr * denr + ni * deni) * inv;
            pi_[j] = (ni * denr - nr * deni) * inv;
        }
    }
    std::vector<Complex> out(n);
    for (size_t j = 0; j < n; ++j) out[j] = Complex(pr[j], pi_[j]);
    return out;
}

namespace {

struct GridProfile {
    double grid_max = 0.0;
    double slope_max = 0.0;
};

GridProfile deriv_grid_profile(const SchurParams& params, int grid_size) {
    const int d = params.degree();
    const auto& tab = detail::unit_circle(grid_size);
    const size_t n = static_cast<size_t>(grid_size);

    // |omega'| on the grid, recursion expanded into real arithmetic so the
    // level loop stays out of the point loop's way.
    std::vector<double> pr(n, 0.0), pi_(n, 0.0), qr(n, 0.0), qi(n, 0.0);
    for (int k = d - 1; k >= 0; --k) {
        const Complex g = params.gamma[static_cast<size_t>(k)];
        const double gr = g.real(), gi = g.imag();
        const double om = 1.0 - (gr * gr + gi * gi);
        for (size_t j = 0; j < n; ++j) {
            const double zr = tab[j].real(), zi = tab[j].imag();
            const double ur = zr * pr[j] - zi * pi_[j];
            const double ui = zr * pi_[j] + zi * pr[j];
            const double tr = pr[j] + zr * qr[j] - zi * qi[j];
            const double ti = pi_[j] + zr * qi[j] + zi * qr[j];
            const double denr = 1.0 + gr * ur + gi * ui;
            const double deni = gr * ui - gi * ur;
            const double nd = denr * denr + deni * deni;
            if (nd < kDegeneracyTol * kDegeneracyTol)
                throw NumericDegeneracyError("Schur recursion denominator collapsed");
            const double inv = 1.0 / nd;
            const double nr = gr + ur, ni = gi + ui;
            pr[j] = (nr * denr + ni * deni) * inv;
            pi_[j] = (ni * denr - nr * deni) * inv;
            const double c2r = (denr * denr - deni * deni) * inv * inv;
            const double c2i = -2.0 * denr * deni * inv * inv;
            qr[j] = om * (tr * c2r - ti * c2i);
            qi[j] = om * (tr * c2i + ti * c2r);
        }
    }

    GridProfile p;
    double prev = 0.0, first = 0.0;
    for (size_t j = 0; j < n; ++j) {
        const double zr = tab[j].real(), zi = tab[j].imag();
        const double wr = pr[j] + zr * qr[j] - zi * qi[j];
        const double wi = pi_[j] + zr * qi[j] + zi * qr[j];
        const double m = std::hypot(wr, wi);
        p.grid_max = std::max(p.grid_max, m);
        if (j > 0) p.slope_max = std::max(p.slope_max, std::abs(m - prev));
        else first = m;
        prev = m;
    }
    p.slope_max = std::max(p.slope_max, std::abs(first - prev));
    return p;
}

}  // namespace

double deriv_boundary_sup(const SchurParams& params, int grid_size) {
    if (grid_size < 64) throw std::invalid_argument("deriv_boundary_sup: grid_size must be >= 64");
    if (params.degree() == 0) return 0.0;
    const GridProfile p = deriv_grid_profile(params, grid_size);
    const double dtheta = 2.0 * std::numbers::pi / grid_size;
    // modulus-of-continuity correction: observed max slope over a half
    // spacing, with a 10x safety factor
    return p.grid_max + 10.0 * (p.slope_max / dtheta) * (std::numbers::pi / grid_size);
}

double deriv_grid_max(const SchurParams& params, int grid_size) {
    if (grid_size < 64) throw std::invalid_argument("deriv_grid_max: grid_size must be >= 64");
    if (params.degree() == 0) return 0.0;
    return deriv_grid_profile(params, grid_size).grid_max;
}

Lemma1Report lemma1_check(Complex c1, Complex c2, Complex c3, double tol) {
    const double x1 = std::abs(c1), x2 = std::abs(c2), x3 = std::abs(c3);
    Lemma1Report r;
    r.slacks[0] = 1.0 - x1;
    r.slacks[1] = 0.5 * (1.0 - x1 * x1) - x2;
    r.slacks[2] = (1.0 - x1 * x1 - 4.0 * x2 * x2 / (1.0 + x1)) / 3.0 - x3;
    r.pass = r.slacks[0] >= -tol && r.slacks[1] >= -tol && r.slacks[2] >= -tol;
    return r;
}

SchwarzFunction::SchwarzFunction(SchurParams params, bool linear, Complex u, int order,
                                 int grid_size)
    : params_(std::move(params)),
      linear_(linear),
      linear_coeff_(u),
      series_(linear ? TruncatedSeries::monomial(1, order, u) : omega_series(params_, order)),
      deriv_sup_(linear ? std::abs(u) : deriv_boundary_sup(params_, grid_size)),
      grid_size_(grid_size) {}

SchwarzFunction SchwarzFunction::from_schur(SchurParams params, int order, int grid_size) {
    if (order < 3) throw std::invalid_argument("SchwarzFunction needs order >= 3");
    return SchwarzFunction(std::move(params), false, Complex(0.0, 0.0), order, grid_size);
}

SchwarzFunction SchwarzFunction::unimodular_linear(Complex u, int order) {
    if (order < 3) throw std::invalid_argument("SchwarzFunction needs order >= 3");
    if (std::abs(u) > 1.0 + 1e-12)
        throw std::invalid_argument("linear Schwarz coefficient must satisfy |u| <= 1");
    return SchwarzFunction(SchurParams{}, true, u, order, 8192);
}

TruncatedSeries SchwarzFunction::series_at(int order) const {
    if (order == series_.order()) return series_;
    if (linear_) return TruncatedSeries::monomial(1, order, linear_coeff_);
    return omega_series(params_, order);
}

Complex SchwarzFunction::eval(Complex z) const {
    if (linear_) return linear_coeff_ * z;
    return z * schur_eval(params_, z);
}

Complex SchwarzFunction::deriv_eval(Complex z) const {
    if (linear_) return linear_coeff_;
    return omega_and_deriv(params_, z)[1];
}

SchwarzFunction SchwarzFunction::rotated(double theta) const {
    const Complex rot2 = std::polar(1.0, 2.0 * theta);
    if (linear_) return unimodular_linear(linear_coeff_ * rot2, series_.order());
    std::vector<Complex> g(params_.gamma);
    for (size_t k = 0; k < g.size(); ++k)
        g[k] *= std::polar(1.0, (static_cast<double>(k) + 2.0) * theta);
    return from_schur(SchurParams(std::move(g)), series_.order(), grid_size_);
}

Lemma1Report SchwarzFunction::lemma1(double tol) const {
    return lemma1_check(series_[1], series_[2], series_[3], tol);
}

}  // namespace uzalc
