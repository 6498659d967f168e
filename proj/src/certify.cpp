#include "uzalc/certify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace uzalc {

namespace {

bool point_in_G(double x, double y) {
    return x >= 0.0 && x <= 1.0 && y >= 0.0 && 2.0 * y <= 1.0 - x * x;
}

struct WorkItem {
    Box box;
    int depth;
};

// Closed-form restriction of aux(kind) to one edge of G. Edge 0 is x = 0
// with t = y in [0, 1/2]; edge 1 is y = 0 and edge 2 is y = (1 - x^2)/2,
// both with t = x in [0, 1].
template <typename T>
T edge_formula(AuxKind k, int edge, const T& t) {
    switch (edge) {
        case 0: {
            const T common = (T(1.0) - T(4.0) * sq(t)) / T(3.0);
            switch (k) {
                case AuxKind::f1: return common + T(4.0) * t;
                case AuxKind::f2: return common + T(2.0) * t;
                case AuxKind::g: return common + T(4.0) * t;
            }
            break;
        }
        case 1: {
            const T common = (T(1.0) - sq(t)) / T(3.0);
            switch (k) {
                case AuxKind::f1: return common + sq(t) + T(3.0) * t;
                case AuxKind::f2: return common + T(3.0) * t;
                case AuxKind::g: return common + T(2.0) * sq(t) + T(9.0) * t;
            }
            break;
        }
        case 2: {
            switch (k) {
                case AuxKind::f1:
                    return T(2.0) + (T(10.0) / T(3.0)) * t - sq(t) - cube(t) / T(3.0);
                case AuxKind::f2:
                    return T(1.0) + (T(10.0) / T(3.0)) * t - sq(t) - cube(t) / T(3.0);
                case AuxKind::g:
                    return T(2.0) + (T(28.0) / T(3.0)) * t - cube(t) / T(3.0);
            }
            break;
        }
        default: break;
    }
    return T(0.0);
}

struct Edge1DResult {
    double sup_hi;
    double attained_lo;
    double arg;
    long boxes;
};

template <typename EnclFn, typename PointFn>
Edge1DResult certify_sup_1d(EnclFn enclose, PointFn point_value, double lo, double hi,
                            double tol) {
    std::vector<std::pair<double, double>> stack;
    stack.reserve(256);
    stack.emplace_back(lo, hi);
    Edge1DResult r{-HUGE_VAL, -HUGE_VAL, lo, 0};
    auto consider = [&](double t) {
        const Interval v = point_value(t);
        if (v.lo > r.attained_lo) {
            r.attained_lo = v.lo;
            r.arg = t;
        }
    };
    consider(lo);
    consider(hi);
    while (!stack.empty()) {
        const auto [a, b] = stack.back();
        stack.pop_back();
        ++r.boxes;
        const double m = 0.5 * (a + b);
        consider(m);
        const Interval e = enclose(Interval(a, b));
        if (e.hi <= r.attained_lo + tol || !(m > a && m < b)) {
            r.sup_hi = std::max(r.sup_hi, e.hi);
            continue;
        }
        stack.emplace_back(a, m);
        stack.emplace_back(m, b);
    }
    return r;
}

}  // namespace

std::string aux_name(AuxKind k) {
    switch (k) {
        case AuxKind::f1: return "f1";
        case AuxKind::f2: return "f2";
        case AuxKind::g: return "g";
    }
    return "?";
}

std::optional<AuxKind> aux_from_name(const std::string& name) {
    if (name == "f1") return AuxKind::f1;
    if (name == "f2") return AuxKind::f2;
    if (name == "g") return AuxKind::g;
    return std::nullopt;
}

double aux_sharp_bound(AuxKind k) {
    switch (k) {
        case AuxKind::f1: return 4.0;
        case AuxKind::f2: return 3.0;
        case AuxKind::g: return 11.0;
    }
    return 0.0;
}

std::string status_name(CertStatus s) {
    switch (s) {
        case CertStatus::proven: return "proven";
        case CertStatus::refuted: return "refuted";
        case CertStatus::budget_exceeded: return "budget_exceeded";
    }
    return "?";
}

double aux_eval(AuxKind k, double x, double y) { return aux_formula<double>(k, x, y); }

double aux_dy_eval(AuxKind k, double x, double y) { return aux_dy_formula<double>(k, x, y); }

Interval aux_dy_eval_interval(AuxKind k, const Interval& x, const Interval& y) {
    return aux_dy_formula<Interval>(k, x, y);
}

Interval aux_eval_interval(AuxKind k, const Box& box) {
    return aux_formula<Interval>(k, box.x, box.y);
}

std::optional<Box> clip_to_G(const Box& box) {
    Box b{Interval(std::max(box.x.lo, 0.0), std::min(box.x.hi, 1.0)),
          Interval(std::max(box.y.lo, 0.0), box.y.hi)};
    if (b.x.lo > b.x.hi || b.y.lo > b.y.hi) return std::nullopt;
    // Upper-rounded cap (1 - x.lo^2)/2; the cap decreases in x, so this keeps
    // every point of box intersect G.
    const Interval cap = (Interval(1.0) - sq(Interval(b.x.lo))) / Interval(2.0);
    if (b.y.lo > cap.hi) return std::nullopt;
    b.y.hi = std::min(b.y.hi, cap.hi);
    if (b.y.hi < b.y.lo) return std::nullopt;
    return b;
}

Certificate certify_max(AuxKind kind, double claimed_bound, double tol, long max_boxes) {
    Certificate cert;
    cert.kind = kind;
    cert.claimed_bound = claimed_bound;
    cert.status = CertStatus::proven;

    double sup_hi = -HUGE_VAL;
    double attained = -HUGE_VAL;
    double wx = 0.0, wy = 0.0;

    auto consider_point = [&](double x, double y) {
        if (!point_in_G(x, y)) return;
        const Interval v = aux_formula<Interval>(kind, Interval(x), Interval(y));
        if (v.lo > attained) {
            attained = v.lo;
            wx = x;
            wy = y;
        }
    };

    std::vector<WorkItem> stack;
    stack.reserve(1024);
    stack.push_back({{Interval(0.0, 1.0), Interval(0.0, 0.5)}, 0});

    while (!stack.empty()) {
        const WorkItem item = stack.back();
        stack.pop_back();
        const auto clipped = clip_to_G(item.box);
        if (!clipped) continue;
        ++cert.boxes_processed;
        cert.max_depth = std::max(cert.max_depth, item.depth);
        if (cert.boxes_processed > max_boxes) {
            cert.status = CertStatus::budget_exceeded;
            break;
        }
        const Box& b = *clipped;
        consider_point(b.x.lo, b.y.lo);
        consider_point(b.x.hi, b.y.lo);
        consider_point(b.x.lo, b.y.hi);
        consider_point(b.x.hi, b.y.hi);
        consider_point(b.x.mid(), b.y.mid());
        if (attained > claimed_bound + tol) {
            cert.status = CertStatus::refuted;
            break;
        }
        const Interval e = aux_eval_interval(kind, b);
        if (e.hi <= claimed_bound + tol) {
            sup_hi = std::max(sup_hi, e.hi);
            continue;
        }
        const double xm = b.x.mid();
        const double ym = b.y.mid();
        const bool can_split_x = xm > b.x.lo && xm < b.x.hi;
        const bool can_split_y = ym > b.y.lo && ym < b.y.hi;
        if (!can_split_x && !can_split_y) {
            // Width exhausted at machine precision; take the enclosure as-is.
            sup_hi = std::max(sup_hi, e.hi);
            continue;
        }
        const bool split_x = can_split_x && (!can_split_y || b.x.width() >= b.y.width());
        if (split_x) {
            stack.push_back({{Interval(b.x.lo, xm), b.y}, item.depth + 1});
            stack.push_back({{Interval(xm, b.x.hi), b.y}, item.depth + 1});
        } else {
            stack.push_back({{b.x, Interval(b.y.lo, ym)}, item.depth + 1});
            stack.push_back({{b.x, Interval(ym, b.y.hi)}, item.depth + 1});
        }
    }

    if (!std::isfinite(sup_hi)) sup_hi = attained;
    cert.certified_sup_hi = sup_hi;
    cert.attained_lo = attained;
    cert.witness_x = wx;
    cert.witness_y = wy;
    return cert;
}

PositivityCertificate certify_dy_positive(AuxKind kind, long max_boxes) {
    PositivityCertificate cert;
    cert.kind = kind;
    cert.status = CertStatus::proven;

    // Seed the optimistic upper estimate of the infimum from a dense scan.
    const int n = 257;
    double best_hi = HUGE_VAL;
    for (int i = 0; i < n; ++i) {
        const double x = static_cast<double>(i) / (n - 1);
        for (int j = 0; j < n; ++j) {
            const double y = 0.5 * static_cast<double>(j) / (n - 1);
            if (!point_in_G(x, y)) break;
            const Interval v = aux_dy_formula<Interval>(kind, Interval(x), Interval(y));
            if (v.hi < best_hi) {
                best_hi = v.hi;
                cert.witness_x = x;
                cert.witness_y = y;
            }
        }
    }
    cert.point_min_hi = best_hi;

    const double tol = 1e-10;
    double inf_lo = HUGE_VAL;

    std::vector<WorkItem> stack;
    stack.reserve(1024);
    stack.push_back({{Interval(0.0, 1.0), Interval(0.0, 0.5)}, 0});

    while (!stack.empty()) {
        const WorkItem item = stack.back();
        stack.pop_back();
        const auto clipped = clip_to_G(item.box);
        if (!clipped) continue;
        ++cert.boxes_processed;
        cert.max_depth = std::max(cert.max_depth, item.depth);
        if (cert.boxes_processed > max_boxes) {
            cert.status = CertStatus::budget_exceeded;
            break;
        }
        const Box& b = *clipped;
        const Interval e = aux_dy_formula<Interval>(kind, b.x, b.y);
        if (e.hi < 0.0) {
            // The whole box (which meets G) has negative derivative.
            cert.status = CertStatus::refuted;
            inf_lo = std::min(inf_lo, e.lo);
            break;
        }
        const double xm = b.x.mid();
        const double ym = b.y.mid();
        const bool can_split_x = xm > b.x.lo && xm < b.x.hi;
        const bool can_split_y = ym > b.y.lo && ym < b.y.hi;
        if (e.lo >= best_hi - tol || (!can_split_x && !can_split_y)) {
            inf_lo = std::min(inf_lo, e.lo);
            continue;
        }
        const bool split_x = can_split_x && (!can_split_y || b.x.width() >= b.y.width());
        if (split_x) {
            stack.push_back({{Interval(b.x.lo, xm), b.y}, item.depth + 1});
            stack.push_back({{Interval(xm, b.x.hi), b.y}, item.depth + 1});
        } else {
            stack.push_back({{b.x, Interval(b.y.lo, ym)}, item.depth + 1});
            stack.push_back({{b.x, Interval(ym, b.y.hi)}, item.depth + 1});
        }
    }

    cert.certified_inf_lo = std::isfinite(inf_lo) ? inf_lo : 0.0;
    if (cert.status == CertStatus::proven && cert.certified_inf_lo <= 0.0)
        cert.status = CertStatus::refuted;
    return cert;
}

std::array<EdgeReport, 3> edge_profiles(AuxKind kind) {
    std::array<EdgeReport, 3> reports;
    const std::array<std::string, 3> names = {"x=0", "y=0", "y=(1-x^2)/2"};
    const std::array<double, 3> domain_hi = {0.5, 1.0, 1.0};
    // All nine edge restrictions are strictly increasing, so the analytic
    // argmax is the right endpoint of the parameter range.
    for (int edge = 0; edge < 3; ++edge) {
        EdgeReport rep;
        rep.edge = names[edge];
        rep.argmax = domain_hi[edge];
        rep.closed_form_max = edge_formula<double>(kind, edge, rep.argmax);

        auto enclose = [&](const Interval& t) { return edge_formula<Interval>(kind, edge, t); };
        auto point_value = [&](double t) { return edge_formula<Interval>(kind, edge, Interval(t)); };
        const Edge1DResult r =
            certify_sup_1d(enclose, point_value, 0.0, domain_hi[edge], 1e-10);
        rep.certified_hi = r.sup_hi;
        rep.attained_lo = r.attained_lo;
        rep.boxes_processed = r.boxes;

        // Crosscheck the closed form against the two-variable formula on a
        // dense set of edge points.
        double max_diff = 0.0;
        const int m = 1000;
        for (int i = 0; i < m; ++i) {
            const double t = domain_hi[edge] * static_cast<double>(i) / (m - 1);
            double x = 0.0, y = 0.0;
            if (edge == 0) {
                y = t;
            } else if (edge == 1) {
                x = t;
            } else {
                x = t;
                y = 0.5 * (1.0 - t * t);
            }
            const double diff = std::fabs(edge_formula<double>(kind, edge, t) -
                                          aux_formula<double>(kind, x, y));
            max_diff = std::max(max_diff, diff);
        }
        rep.max_crosscheck_diff = max_diff;
        reports[edge] = rep;
    }
    return reports;
}

GridResult grid_oracle(AuxKind kind, int resolution) {
    if (resolution < 101) throw std::invalid_argument("grid_oracle: resolution must be >= 101");
    GridResult r{-HUGE_VAL, 0.0, 0.0};
    for (int i = 0; i < resolution; ++i) {
        const double x = static_cast<double>(i) / (resolution - 1);
        for (int j = 0; j < resolution; ++j) {
            const double y = 0.5 * static_cast<double>(j) / (resolution - 1);
            if (!point_in_G(x, y)) break;
            const double v = aux_formula<double>(kind, x, y);
            if (v > r.max) {
                r.max = v;
                r.argmax_x = x;
                r.argmax_y = y;
            }
        }
    }
    return r;
}

}  // namespace uzalc
