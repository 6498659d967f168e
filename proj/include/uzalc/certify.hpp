#pragma once

#include <array>
#include <optional>
#include <string>

#include "uzalc/interval.hpp"

namespace uzalc {

/// The three auxiliary bound functions maximized over the proof region
///   G = { (x, y) : 0 <= x <= 1, 0 <= y <= (1 - x^2)/2 }:
///   f1(x,y) = (1 - x^2 - 4y^2/(1+x))/3 + 4y +  x^2 + 3x   (sup over G: 4)
///   f2(x,y) = (1 - x^2 - 4y^2/(1+x))/3 + 2y        + 3x   (sup over G: 3)
///   g (x,y) = (1 - x^2 - 4y^2/(1+x))/3 + 4y + 2x^2 + 9x   (sup over G: 11)
enum class AuxKind { f1, f2, g };

std::string aux_name(AuxKind k);
std::optional<AuxKind> aux_from_name(const std::string& name);

/// The sharp constant each function stays below on G.
double aux_sharp_bound(AuxKind k);

template <typename T>
T aux_formula(AuxKind k, const T& x, const T& y) {
    const T common = (T(1.0) - sq(x) - T(4.0) * sq(y) / (T(1.0) + x)) / T(3.0);
    switch (k) {
        case AuxKind::f1: return common + T(4.0) * y + sq(x) + T(3.0) * x;
        case AuxKind::f2: return common + T(2.0) * y + T(3.0) * x;
        case AuxKind::g: return common + T(4.0) * y + T(2.0) * sq(x) + T(9.0) * x;
    }
    return T(0.0);
}

/// y-partial of the auxiliary functions: 4 - (8/3) y/(1+x) for f1 and g,
/// 2 - (8/3) y/(1+x) for f2. Positive throughout G, which confines the
/// maxima to the boundary.
template <typename T>
T aux_dy_formula(AuxKind k, const T& x, const T& y) {
    const T slope = (T(8.0) / T(3.0)) * y / (T(1.0) + x);
    return (k == AuxKind::f2 ? T(2.0) : T(4.0)) - slope;
}

double aux_eval(AuxKind k, double x, double y);
Interval aux_dy_eval_interval(AuxKind k, const Interval& x, const Interval& y);
double aux_dy_eval(AuxKind k, double x, double y);

/// Axis-aligned box inside the bounding rectangle [0,1] x [0,1/2].
struct Box {
    Interval x;
    Interval y;
};

/// Guaranteed enclosure of { aux(k, x, y) : (x, y) in box } by the natural
/// interval extension.
Interval aux_eval_interval(AuxKind k, const Box& box);

/// Sound reduction of a box against the constraint y <= (1 - x^2)/2: the cap
/// is evaluated at x.lo (where it is largest) and rounded up, so every point
/// of box intersect G survives. Empty result when the box misses G.
std::optional<Box> clip_to_G(const Box& box);

enum class CertStatus { proven, refuted, budget_exceeded };
std::string status_name(CertStatus s);

/// Outcome of a branch-and-bound supremum certification over G.
/// status == proven guarantees sup_G <= certified_sup_hi <= claimed_bound + tol;
/// attained_lo is a rigorous lower bound on the value at witness (a point of
/// G), so attained_lo <= sup_G always.
struct Certificate {
    AuxKind kind = AuxKind::f1;
    double claimed_bound = 0.0;
    double certified_sup_hi = 0.0;
    double attained_lo = 0.0;
    double witness_x = 0.0;
    double witness_y = 0.0;
    long boxes_processed = 0;
    int max_depth = 0;
    CertStatus status = CertStatus::proven;
};

inline constexpr double kDefaultCertifyTol = 1e-6;
inline constexpr long kDefaultMaxBoxes = 10'000'000;

/// Certifies sup_G aux(kind) <= claimed_bound + tol by exhaustive interval
/// subdivision: any box whose enclosure exceeds claimed_bound + tol is bisected
/// along its wider dimension (ties toward x, LIFO worklist); certification
/// succeeds when the worklist empties. A point of G whose rigorously
/// lower-bounded value exceeds claimed_bound + tol refutes the claim.
Certificate certify_max(AuxKind kind, double claimed_bound, double tol = kDefaultCertifyTol,
                        long max_boxes = kDefaultMaxBoxes);

/// Outcome of the y-partial positivity certification over G.
/// status == proven guarantees inf_G d/dy aux >= certified_inf_lo > 0;
/// point_min_hi is an upper bound on the infimum from a witness evaluation.
struct PositivityCertificate {
    AuxKind kind = AuxKind::f1;
    double certified_inf_lo = 0.0;
    double point_min_hi = 0.0;
    double witness_x = 0.0;
    double witness_y = 0.0;
    long boxes_processed = 0;
    int max_depth = 0;
    CertStatus status = CertStatus::proven;
};

/// Interval-certifies d/dy aux > 0 on G and encloses the infimum tightly
/// (within 1e-10 of the best point value found).
PositivityCertificate certify_dy_positive(AuxKind kind, long max_boxes = kDefaultMaxBoxes);

/// One edge of G with the closed-form restriction of the auxiliary function:
///   edge "x=0":          variable y in [0, 1/2]
///   edge "y=0":          variable x in [0, 1]
///   edge "y=(1-x^2)/2":  variable x in [0, 1]
/// closed_form_max/argmax are the analytic maximum of the restriction
/// polynomial; certified_hi/attained_lo come from 1-D interval bisection of
/// the same polynomial; max_crosscheck_diff is the largest difference between
/// the closed form and the 2-D formula on 1000 edge points.
struct EdgeReport {
    std::string edge;
    double closed_form_max = 0.0;
    double argmax = 0.0;
    double certified_hi = 0.0;
    double attained_lo = 0.0;
    double max_crosscheck_diff = 0.0;
    long boxes_processed = 0;
};

std::array<EdgeReport, 3> edge_profiles(AuxKind kind);

/// Dense-scan oracle: the max of aux over resolution^2 rectangle points that
/// lie in G, with its location. Requires resolution >= 101.
struct GridResult {
    double max = 0.0;
    double argmax_x = 0.0;
    double argmax_y = 0.0;
};

GridResult grid_oracle(AuxKind kind, int resolution);

/// Certified positivity of a 1-D interval extension on [lo, hi] by bisection;
/// used for the edge-restriction monotonicity checks.
template <typename F>
bool certify_positive_1d(F enclose, double lo, double hi, long max_iters = 1'000'000);

template <typename F>
bool certify_positive_1d(F enclose, double lo, double hi, long max_iters) {
    struct Seg {
        double lo, hi;
    };
    std::array<Seg, 128> stack;
    int top = 0;
    stack[top++] = {lo, hi};
    long iters = 0;
    while (top > 0) {
        if (++iters > max_iters || top >= 127) return false;
        const Seg s = stack[--top];
        const Interval e = enclose(Interval(s.lo, s.hi));
        if (e.lo > 0.0) continue;
        if (e.hi <= 0.0) return false;
        const double m = 0.5 * (s.lo + s.hi);
        if (m <= s.lo || m >= s.hi) return false;  // cannot split further
        stack[top++] = {s.lo, m};
        stack[top++] = {m, s.hi};
    }
    return true;
}

}  // namespace uzalc
