#pragma once

#include <complex>
#include <vector>

namespace uzalc {

using Complex = std::complex<double>;

/// Truncated complex power series in z: coefficient k holds the z^k term,
/// k = 0..order(). Values are immutable after construction; every operation
/// is pure. Binary operations require equal order and return that order,
/// discarding terms beyond it.
class TruncatedSeries {
public:
    /// Zero series of the given order (order+1 coefficients).
    explicit TruncatedSeries(int order);

    /// Takes ownership of the coefficient vector; order = coeffs.size()-1.
    explicit TruncatedSeries(std::vector<Complex> coeffs);

    static TruncatedSeries constant(Complex c0, int order);

    /// scale * z^k at the given order.
    static TruncatedSeries monomial(int k, int order, Complex scale = 1.0);

    int order() const { return static_cast<int>(c_.size()) - 1; }

    /// Unchecked coefficient access, 0 <= k <= order().
    Complex operator[](int k) const { return c_[static_cast<size_t>(k)]; }

    /// Checked coefficient access.
    Complex at(int k) const;

    const std::vector<Complex>& coeffs() const { return c_; }

private:
    std::vector<Complex> c_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a);
TruncatedSeries operator*(Complex s, const TruncatedSeries& a);
TruncatedSeries operator*(const TruncatedSeries& a, Complex s);

/// Truncated Cauchy product: coefficient k = sum_{j=0..k} a_j b_{k-j}.
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

inline TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a * b;
}

/// Multiplicative inverse through the common order, by the forward recurrence
/// b_0 = 1/a_0, b_k = -(1/a_0) sum_{j=1..k} a_j b_{k-j}.
/// Requires |a_0| >= 1e-12, else SingularSeriesError.
TruncatedSeries recip(const TruncatedSeries& a);

/// Termwise derivative. The order is kept with the top coefficient set to
/// zero; callers needing strict order bookkeeping read indices <= order-1.
TruncatedSeries deriv(const TruncatedSeries& a);

/// Horner evaluation of the truncated polynomial at z0.
Complex eval(const TruncatedSeries& a, Complex z0);

/// Multiplication by z^k with truncation at the original order.
TruncatedSeries shift_up(const TruncatedSeries& a, int k = 1);

/// Division by z^k; requires the k lowest coefficients to be exactly
/// representable as dropped (they are discarded). Top fills with zeros.
TruncatedSeries shift_down(const TruncatedSeries& a, int k = 1);

/// max_k |a_k - b_k| for equal-order series.
double max_coeff_dist(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace uzalc
