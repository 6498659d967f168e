#include "uzalc/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "uzalc/errors.hpp"

namespace uzalc {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw OrderMismatchError("series order mismatch: " + std::to_string(a.order()) +
                                 " vs " + std::to_string(b.order()));
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    c_.assign(static_cast<size_t>(order) + 1, Complex(0.0, 0.0));
}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("series needs at least a constant term");
}

TruncatedSeries TruncatedSeries::constant(Complex c0, int order) {
    TruncatedSeries s(order);
    s.c_[0] = c0;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int k, int order, Complex scale) {
    TruncatedSeries s(order);
    if (k < 0 || k > order) throw std::invalid_argument("monomial degree out of range");
    s.c_[static_cast<size_t>(k)] = scale;
    return s;
}

Complex TruncatedSeries::at(int k) const {
    if (k < 0 || k > order()) throw std::out_of_range("series coefficient index out of range");
    return c_[static_cast<size_t>(k)];
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    std::vector<Complex> c(a.coeffs());
    for (size_t k = 0; k < c.size(); ++k) c[k] += b.coeffs()[k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    std::vector<Complex> c(a.coeffs());
    for (size_t k = 0; k < c.size(); ++k) c[k] -= b.coeffs()[k];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a) {
    std::vector<Complex> c(a.coeffs());
    for (auto& v : c) v = -v;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(Complex s, const TruncatedSeries& a) {
    std::vector<Complex> c(a.coeffs());
    for (auto& v : c) v *= s;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& a, Complex s) { return s * a; }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    const size_t n = x.size();
    std::vector<Complex> c(n, Complex(0.0, 0.0));
    for (size_t i = 0; i < n; ++i) {
        if (x[i] == Complex(0.0, 0.0)) continue;
        for (size_t j = 0; j + i < n; ++j) c[i + j] += x[i] * y[j];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries recip(const TruncatedSeries& a) {
    const auto& x = a.coeffs();
    if (std::abs(x[0]) < 1e-12)
        throw SingularSeriesError("series reciprocal: constant term is numerically zero");
    const size_t n = x.size();
    std::vector<Complex> b(n);
    const Complex inv0 = 1.0 / x[0];
    b[0] = inv0;
    for (size_t k = 1; k < n; ++k) {
        Complex acc(0.0, 0.0);
        for (size_t j = 1; j <= k; ++j) acc += x[j] * b[k - j];
        b[k] = -inv0 * acc;
    }
    return TruncatedSeries(std::move(b));
}

TruncatedSeries deriv(const TruncatedSeries& a) {
    const auto& x = a.coeffs();
    std::vector<Complex> c(x.size(), Complex(0.0, 0.0));
    for (size_t k = 0; k + 1 < x.size(); ++k) c[k] = static_cast<double>(k + 1) * x[k + 1];
    return TruncatedSeries(std::move(c));
}

Complex eval(const TruncatedSeries& a, Complex z0) {
    const auto& x = a.coeffs();
    Complex acc(0.0, 0.0);
    for (size_t k = x.size(); k-- > 0;) acc = acc * z0 + x[k];
    return acc;
}

TruncatedSeries shift_up(const TruncatedSeries& a, int k) {
    if (k < 0) throw std::invalid_argument("shift_up: negative shift");
    const auto& x = a.coeffs();
    std::vector<Complex> c(x.size(), Complex(0.0, 0.0));
    for (size_t j = static_cast<size_t>(k); j < x.size(); ++j) c[j] = x[j - static_cast<size_t>(k)];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries shift_down(const TruncatedSeries& a, int k) {
    if (k < 0) throw std::invalid_argument("shift_down: negative shift");
    const auto& x = a.coeffs();
    std::vector<Complex> c(x.size(), Complex(0.0, 0.0));
    for (size_t j = static_cast<size_t>(k); j < x.size(); ++j) c[j - static_cast<size_t>(k)] = x[j];
    return TruncatedSeries(std::move(c));
}

double max_coeff_dist(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    double m = 0.0;
    for (int k = 0; k <= a.order(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

}  // namespace uzalc
