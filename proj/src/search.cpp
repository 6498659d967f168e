#include "uzalc/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "uzalc/errors.hpp"
#include "uzalc/io_json.hpp"
#include "uzalc/schwarz.hpp"

namespace uzalc {

namespace {

constexpr double kSampleGammaRadius = 0.999;
constexpr double kSampleA2Radius = 2.0;
constexpr double kGammaScale = 1.0 - 1e-9;  // squashing range matches the Schur cap
constexpr int kRejectionBudget = 10'000;
constexpr int kPrefilterGrid = 512;

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Complex draw_disk(std::mt19937_64& rng, double radius) {
    const double r = radius * std::sqrt(uniform01(rng));
    const double phi = 2.0 * std::numbers::pi * uniform01(rng);
    return Complex(r * std::cos(phi), r * std::sin(phi));
}

/// w in R^2 -> disk of the given radius, |w| = r landing at radius*r/(1+r).
Complex squash_to_disk(const Complex& w, double scale) {
    const double r = std::abs(w);
    return w * (scale / (1.0 + r));
}

/// Inverse of squash_to_disk for |z| < scale.
Complex unsquash(const Complex& z, double scale) {
    const double rho = std::abs(z);
    return z / std::max(scale - rho, 1e-12);
}

struct Candidate {
    Complex a2;
    std::vector<Complex> gammas;
};

Candidate decode(const std::vector<double>& x, int d) {
    Candidate c;
    c.a2 = squash_to_disk(Complex(x[0], x[1]), kSampleA2Radius);
    c.gammas.resize(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) {
        const Complex w(x[static_cast<size_t>(2 + 2 * k)], x[static_cast<size_t>(3 + 2 * k)]);
        c.gammas[static_cast<size_t>(k)] = squash_to_disk(w, kGammaScale);
    }
    return c;
}

std::vector<double> encode(const Complex& a2, const std::vector<Complex>& gammas) {
    std::vector<double> x(2 + 2 * gammas.size());
    const Complex w = unsquash(a2, kSampleA2Radius);
    x[0] = w.real();
    x[1] = w.imag();
    for (size_t k = 0; k < gammas.size(); ++k) {
        const Complex v = unsquash(gammas[k], kGammaScale);
        x[2 + 2 * k] = v.real();
        x[3 + 2 * k] = v.imag();
    }
    return x;
}

}  // namespace

ClassUFunction rebuild(const Complex& a2, const std::vector<Complex>& gammas, int order) {
    auto omega = SchwarzFunction::from_schur(SchurParams(gammas), order);
    return ClassUFunction::build(a2, std::move(omega), order, /*lenient=*/true);
}

Sample sample(std::mt19937_64& rng, int d, int order, double margin) {
    if (d < 0) throw std::invalid_argument("sample: degree must be >= 0");
    for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
        const Complex a2 = draw_disk(rng, kSampleA2Radius);
        std::vector<Complex> gammas(static_cast<size_t>(d));
        // Radius halves per index: late parameters drive the boundary slope of
        // the derivative past 1 almost surely at full radius, which would
        // starve the rejection loop beyond degree 3. gamma_0 keeps the whole
        // disk and |gamma_1| <= ~1/2 still spans the saturation range of the
        // second coefficient bound.
        for (int k = 0; k < d; ++k)
            gammas[static_cast<size_t>(k)] = draw_disk(rng, kSampleGammaRadius * std::pow(0.5, k));
        SchurParams params(gammas);
        // The coarse grid is a subset of the full one, so its max is a lower
        // bound on the boundary estimate: rejecting on it never loses a
        // candidate the full check would have accepted.
        if (d > 0 && deriv_grid_max(params, kPrefilterGrid) > 1.0 - margin) continue;
        auto omega = SchwarzFunction::from_schur(std::move(params), order);
        auto fn = ClassUFunction::build(a2, std::move(omega), order, /*lenient=*/true);
        if (fn.membership_margin() >= margin && fn.pole_free())
            return Sample{a2, std::move(gammas), std::move(fn)};
    }
    throw SamplingStarvedError("sample: rejection budget exhausted");
}

namespace {

struct RestartOutcome {
    double value = -HUGE_VAL;
    Complex a2;
    std::vector<Complex> gammas;
    double margin = 0.0;
    bool pole_free = false;
    long evaluations = 0;
};

/// One simplex-reflection (Nelder-Mead) restart seeded at the given sample.
RestartOutcome optimize_from(const SearchConfig& config, const Sample& start) {
    const int d = config.degree;
    const size_t dim = static_cast<size_t>(2 + 2 * d);
    RestartOutcome best;

    auto eval_point = [&](const std::vector<double>& x) -> double {
        ++best.evaluations;
        const Candidate c = decode(x, d);
        SchurParams params(c.gammas);
        if (d > 0 && deriv_grid_max(params, kPrefilterGrid) > 1.0 - config.margin)
            return -HUGE_VAL;
        auto omega = SchwarzFunction::from_schur(std::move(params), config.order);
        auto fn = ClassUFunction::build(c.a2, std::move(omega), config.order, /*lenient=*/true);
        if (fn.membership_margin() < config.margin || !fn.pole_free()) return -HUGE_VAL;
        const double v = evaluate(config.spec, fn);
        if (v > best.value) {
            best.value = v;
            best.a2 = c.a2;
            best.gammas = c.gammas;
            best.margin = fn.membership_margin();
            best.pole_free = fn.pole_free();
        }
        return v;
    };

    std::vector<std::vector<double>> xs(dim + 1);
    std::vector<double> fs(dim + 1, -HUGE_VAL);
    xs[0] = encode(start.a2, start.gammas);
    // Score the seed from its own fields: the roundtrip through squashed
    // coordinates is off by an ulp, which must not perturb the recorded
    // start point or, on a borderline draw, flip its feasibility.
    ++best.evaluations;
    best.value = evaluate(config.spec, start.fn);
    best.a2 = start.a2;
    best.gammas = start.gammas;
    best.margin = start.fn.membership_margin();
    best.pole_free = start.fn.pole_free();
    fs[0] = best.value;
    if (config.iterations == 0) return best;

    const double step = 0.5;
    for (size_t i = 1; i <= dim; ++i) {
        xs[i] = xs[0];
        xs[i][i - 1] += step;
        fs[i] = eval_point(xs[i]);
    }

    std::vector<size_t> idx(dim + 1);
    std::iota(idx.begin(), idx.end(), 0u);
    std::vector<double> centroid(dim), xr(dim), xe(dim), xc(dim);

    for (int it = 0; it < config.iterations; ++it) {
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return fs[a] > fs[b]; });
        const size_t ib = idx[0], iw = idx[dim], isw = idx[dim - 1];

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (size_t r = 0; r < dim; ++r)
            for (size_t j = 0; j < dim; ++j) centroid[j] += xs[idx[r]][j];
        for (size_t j = 0; j < dim; ++j) centroid[j] /= static_cast<double>(dim);

        for (size_t j = 0; j < dim; ++j) xr[j] = centroid[j] + (centroid[j] - xs[iw][j]);
        const double fr = eval_point(xr);

        if (fr > fs[ib]) {
            for (size_t j = 0; j < dim; ++j) xe[j] = centroid[j] + 2.0 * (centroid[j] - xs[iw][j]);
            const double fe = eval_point(xe);
            if (fe > fr) {
                xs[iw] = xe;
                fs[iw] = fe;
            } else {
                xs[iw] = xr;
                fs[iw] = fr;
            }
        } else if (fr > fs[isw]) {
            xs[iw] = xr;
            fs[iw] = fr;
        } else {
            const double sign = fr > fs[iw] ? 0.5 : -0.5;
            for (size_t j = 0; j < dim; ++j) xc[j] = centroid[j] + sign * (centroid[j] - xs[iw][j]);
            const double fc = eval_point(xc);
            if (fc > std::max(fr, fs[iw])) {
                xs[iw] = xc;
                fs[iw] = fc;
            } else {
                for (size_t r = 1; r <= dim; ++r) {
                    const size_t i = idx[r];
                    for (size_t j = 0; j < dim; ++j)
                        xs[i][j] = xs[ib][j] + 0.5 * (xs[i][j] - xs[ib][j]);
                    fs[i] = eval_point(xs[i]);
                }
            }
        }
    }
    return best;
}

void validate(const SearchConfig& config) {
    if (config.degree < 0) throw std::invalid_argument("search: degree must be >= 0");
    if (config.restarts < 1) throw std::invalid_argument("search: restarts must be >= 1");
    if (config.iterations < 0) throw std::invalid_argument("search: iterations must be >= 0");
    if (config.order < config.spec.required_index())
        throw std::invalid_argument("search: order too small for the functional");
    if (config.margin < 0.0) throw std::invalid_argument("search: margin must be >= 0");
}

}  // namespace

std::vector<BestRecord> run_restarts(const SearchConfig& config) {
    validate(config);
    std::mt19937_64 rng(config.seed);
    const double b = bound(config.spec);
    std::vector<BestRecord> records;
    records.reserve(static_cast<size_t>(config.restarts));
    for (int r = 0; r < config.restarts; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        const Sample start = sample(rng, config.degree, config.order, config.margin);
        const RestartOutcome out = optimize_from(config, start);
        const auto t1 = std::chrono::steady_clock::now();
        BestRecord rec;
        rec.spec = config.spec;
        rec.value = out.value;
        rec.bound = b;
        rec.excess = out.value - b;
        rec.a2 = out.a2;
        rec.gammas = out.gammas;
        rec.membership_margin = out.margin;
        rec.pole_free = out.pole_free;
        rec.seed = config.seed;
        rec.evaluations = out.evaluations;
        rec.wall_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        records.push_back(std::move(rec));
    }
    return records;
}

BestRecord maximize(const SearchConfig& config) {
    const auto records = run_restarts(config);
    const auto it = std::max_element(records.begin(), records.end(),
                                     [](const BestRecord& a, const BestRecord& b) {
                                         return a.value < b.value;
                                     });
    return *it;
}

std::vector<BestRecord> run_and_persist(const SearchConfig& config, const std::string& path) {
    std::ofstream out(path, std::ios::app);
    if (!out.is_open()) throw std::runtime_error("search: cannot open " + path);
    auto records = run_restarts(config);
    const auto it = std::max_element(records.begin(), records.end(),
                                     [](const BestRecord& a, const BestRecord& b) {
                                         return a.value < b.value;
                                     });
    records.push_back(*it);  // final best, appended last
    for (const BestRecord& rec : records) {
        out << record_to_json(rec).dump() << '\n';
        if (!out) throw std::runtime_error("search: write failed on " + path);
    }
    return records;
}

}  // namespace uzalc
