#include "uzalc/interval.hpp"

#include <stdexcept>

namespace uzalc {

Interval operator/(const Interval& a, const Interval& b) {
    if (b.lo <= 0.0 && b.hi >= 0.0)
        throw std::domain_error("interval division by an interval containing zero");
    const double p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
    return detail::widen(std::fmin(std::fmin(p1, p2), std::fmin(p3, p4)),
                         std::fmax(std::fmax(p1, p2), std::fmax(p3, p4)));
}

}  // namespace uzalc
