#pragma once

#include <cmath>

namespace uzalc {

/// Closed interval [lo, hi] with outward-widened arithmetic: every operation
/// computes in round-to-nearest and then widens both endpoints by 4 units in
/// the last place, so the result encloses the exact real-arithmetic image
/// without relying on directed rounding modes.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    constexpr Interval(double point) : lo(point), hi(point) {}
    constexpr Interval(double l, double h) : lo(l), hi(h) {}

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
};

namespace detail {

inline double step_down(double x, int n = 4) {
    for (int i = 0; i < n; ++i) x = std::nextafter(x, -INFINITY);
    return x;
}

inline double step_up(double x, int n = 4) {
    for (int i = 0; i < n; ++i) x = std::nextafter(x, INFINITY);
    return x;
}

inline Interval widen(double lo, double hi) { return Interval(step_down(lo), step_up(hi)); }

}  // namespace detail

inline Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

inline Interval operator+(const Interval& a, const Interval& b) {
    return detail::widen(a.lo + b.lo, a.hi + b.hi);
}

inline Interval operator-(const Interval& a, const Interval& b) {
    return detail::widen(a.lo - b.hi, a.hi - b.lo);
}

inline Interval operator*(const Interval& a, const Interval& b) {
    const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return detail::widen(std::fmin(std::fmin(p1, p2), std::fmin(p3, p4)),
                         std::fmax(std::fmax(p1, p2), std::fmax(p3, p4)));
}

/// Division; the denominator must be bounded away from zero.
Interval operator/(const Interval& a, const Interval& b);

/// Tight square: [a]^2 >= 0 even when 0 is interior.
inline Interval sq(const Interval& a) {
    const double p1 = a.lo * a.lo, p2 = a.hi * a.hi;
    if (a.lo >= 0.0) return detail::widen(p1, p2);
    if (a.hi <= 0.0) return detail::widen(p2, p1);
    // 0 is attained exactly, so only the upper end needs outward rounding
    const Interval w = detail::widen(0.0, std::fmax(p1, p2));
    return Interval(0.0, w.hi);
}

inline Interval cube(const Interval& a) {
    // monotone, endpoint cubes suffice
    return detail::widen(a.lo * a.lo * a.lo, a.hi * a.hi * a.hi);
}

inline double sq(double x) { return x * x; }
inline double cube(double x) { return x * x * x; }

inline Interval hull(const Interval& a, const Interval& b) {
    return Interval(std::fmin(a.lo, b.lo), std::fmax(a.hi, b.hi));
}

}  // namespace uzalc
