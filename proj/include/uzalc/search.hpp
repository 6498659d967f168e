#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "uzalc/classu.hpp"
#include "uzalc/functionals.hpp"

namespace uzalc {

/// Budget and feasibility knobs for the randomized extremal search.
struct SearchConfig {
    FunctionalSpec spec = FunctionalSpec::Zalcman(2);
    int degree = 4;        // number of Schur parameters
    int restarts = 50;
    int iterations = 500;  // simplex steps per restart
    std::uint64_t seed = 0;
    int order = 64;
    double margin = 1e-6;  // minimum membership margin for feasibility
};

/// Best feasible point found by one restart (or overall). Rebuilding from
/// (a2, gammas) and re-evaluating the functional reproduces value exactly,
/// so persisted records are reproducible.
struct BestRecord {
    FunctionalSpec spec = FunctionalSpec::Zalcman(2);
    double value = 0.0;
    double bound = 0.0;
    double excess = 0.0;
    Complex a2{0.0, 0.0};
    std::vector<Complex> gammas;
    double membership_margin = 0.0;
    bool pole_free = false;
    std::uint64_t seed = 0;
    long evaluations = 0;
    long wall_ms = 0;
};

/// One accepted random draw from the parameter space together with the
/// function it builds.
struct Sample {
    Complex a2{0.0, 0.0};
    std::vector<Complex> gammas;
    ClassUFunction fn;
};

/// Draws a2 uniformly on |a2| <= 2 and Schur parameter k uniformly on
/// |gamma| <= 0.999 * 2^-k, rejecting until the built function has
/// membership_margin >= margin and is pole-free. The per-index radius taper
/// keeps the acceptance rate above a few percent at every degree (full-radius
/// tails push the boundary derivative past 1 almost surely beyond degree 3)
/// while gamma_0 keeps the whole disk and gamma_1 still reaches the
/// saturation range of the second coefficient bound. Throws
/// SamplingStarvedError after 10^4 rejected tries.
Sample sample(std::mt19937_64& rng, int d, int order = 64, double margin = 1e-6);

/// Multi-restart simplex-reflection maximization of |functional| over
/// (a2, gammas), with disk constraints handled by radial squashing into
/// unconstrained coordinates and infeasible points scored -inf. Deterministic
/// for a fixed config.
BestRecord maximize(const SearchConfig& config);

/// As maximize, but returns the per-restart records (best is their max).
std::vector<BestRecord> run_restarts(const SearchConfig& config);

/// Runs the search and appends one JSONL record per restart plus a final
/// best record to path (append mode; re-runs accumulate). Returns all
/// appended records, final last.
std::vector<BestRecord> run_and_persist(const SearchConfig& config, const std::string& path);

/// Rebuilds the function a persisted record describes.
ClassUFunction rebuild(const Complex& a2, const std::vector<Complex>& gammas, int order = 64);

}  // namespace uzalc
