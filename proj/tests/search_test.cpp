#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "uzalc/errors.hpp"
#include "uzalc/io_json.hpp"
#include "uzalc/search.hpp"

using namespace uzalc;

TEST_CASE("sampling is deterministic for a fixed generator state") {
    std::mt19937_64 rng1(123), rng2(123);
    for (int i = 0; i < 5; ++i) {
        const Sample a = sample(rng1, 3);
        const Sample b = sample(rng2, 3);
        CHECK(a.a2.real() == b.a2.real());
        CHECK(a.a2.imag() == b.a2.imag());
        REQUIRE(a.gammas.size() == 3);
        REQUIRE(b.gammas.size() == 3);
        for (size_t k = 0; k < 3; ++k) {
            CHECK(a.gammas[k].real() == b.gammas[k].real());
            CHECK(a.gammas[k].imag() == b.gammas[k].imag());
        }
        CHECK(a.fn.coefficient(5) == b.fn.coefficient(5));
    }
}

TEST_CASE("accepted samples are feasible class members") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 300; ++i) {
        const Sample s = sample(rng, 4);
        CHECK(s.fn.membership_margin() >= 1e-6);
        CHECK(s.fn.pole_free());
        CHECK(std::abs(s.a2) <= 2.0 + 1e-9);
        for (const Complex& g : s.gammas) CHECK(std::abs(g) <= 0.999 + 1e-12);
    }
}

TEST_CASE("degree zero forces |a2| <= 1") {
    // with no Schur parameters the reciprocal is linear, and pole-freeness
    // is exactly the unit-disk condition on a2
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const Sample s = sample(rng, 0, 8);
        CHECK(std::abs(s.a2) <= 1.0 + 1e-12);
        CHECK(s.fn.membership_margin() == 1.0);
    }
}

TEST_CASE("unsatisfiable feasibility starves the sampler") {
    std::mt19937_64 rng(1);
    CHECK_THROWS_AS(sample(rng, 0, 8, 1.5), SamplingStarvedError);
    CHECK_THROWS_AS(sample(rng, -1, 8), std::invalid_argument);
}

TEST_CASE("zero iterations returns the seed sample's record") {
    SearchConfig cfg;
    cfg.spec = FunctionalSpec::Zalcman(2);
    cfg.degree = 2;
    cfg.restarts = 1;
    cfg.iterations = 0;
    cfg.seed = 99;

    const BestRecord rec = maximize(cfg);

    // replay the draw independently
    std::mt19937_64 rng(cfg.seed);
    const Sample s = sample(rng, cfg.degree, cfg.order, cfg.margin);
    CHECK(rec.a2 == s.a2);
    REQUIRE(rec.gammas.size() == s.gammas.size());
    for (size_t k = 0; k < s.gammas.size(); ++k) CHECK(rec.gammas[k] == s.gammas[k]);
    CHECK(rec.value == evaluate(cfg.spec, s.fn));
    CHECK(rec.evaluations == 1);
    CHECK(rec.seed == cfg.seed);
    CHECK(rec.bound == 1.0);
    CHECK(rec.excess == rec.value - rec.bound);
    CHECK(rec.membership_margin == s.fn.membership_margin());
    CHECK(rec.pole_free);

    // a rebuilt function reproduces the recorded value exactly
    const ClassUFunction fn = rebuild(rec.a2, rec.gammas, cfg.order);
    CHECK(evaluate(cfg.spec, fn) == rec.value);
}

TEST_CASE("the search is deterministic") {
    SearchConfig cfg;
    cfg.spec = FunctionalSpec::GenZalcman(2, 3);
    cfg.degree = 2;
    cfg.restarts = 2;
    cfg.iterations = 40;
    cfg.seed = 31;

    const BestRecord a = maximize(cfg);
    const BestRecord b = maximize(cfg);
    CHECK(a.value == b.value);
    CHECK(a.a2 == b.a2);
    REQUIRE(a.gammas.size() == b.gammas.size());
    for (size_t k = 0; k < a.gammas.size(); ++k) CHECK(a.gammas[k] == b.gammas[k]);
    CHECK(a.excess == b.excess);
    CHECK(a.membership_margin == b.membership_margin);
    CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("persisted records reload and re-evaluate") {
    const std::string path = "search_test_records.jsonl";
    std::filesystem::remove(path);

    SearchConfig cfg;
    cfg.spec = FunctionalSpec::GenZalcman(2, 3);
    cfg.degree = 2;
    cfg.restarts = 3;
    cfg.iterations = 30;
    cfg.seed = 8;

    const auto records = run_and_persist(cfg, path);
    REQUIRE(records.size() == 4);  // three restarts plus the final best
    double best = -HUGE_VAL;
    for (size_t i = 0; i + 1 < records.size(); ++i) best = std::max(best, records[i].value);
    CHECK(records.back().value == best);

    std::ifstream in(path);
    REQUIRE(in.is_open());
    std::string line;
    int lines = 0;
    while (std::getline(in, line)) {
        const auto j = nlohmann::json::parse(line);
        const BestRecord rec = record_from_json(j);
        CHECK(rec.spec == cfg.spec);
        CHECK(rec.bound == 2.0);
        CHECK(rec.membership_margin >= cfg.margin);
        CHECK(rec.pole_free);
        CHECK(std::abs(rec.excess - (rec.value - rec.bound)) <= 1e-12);
        const ClassUFunction fn = rebuild(rec.a2, rec.gammas, cfg.order);
        CHECK(std::abs(evaluate(rec.spec, fn) - rec.value) <= 1e-10);
        ++lines;
    }
    CHECK(lines == 4);

    // append mode: a re-run accumulates
    run_and_persist(cfg, path);
    std::ifstream in2(path);
    lines = 0;
    while (std::getline(in2, line)) ++lines;
    CHECK(lines == 8);
    std::filesystem::remove(path);
}

TEST_CASE("a short search recovers a near-extremal first functional") {
    // the value equals |c1| here, so the optimum pushes the single Schur
    // parameter toward the boundary while staying pole-free
    SearchConfig cfg;
    cfg.spec = FunctionalSpec::Zalcman(2);
    cfg.degree = 1;
    cfg.restarts = 8;
    cfg.iterations = 120;
    cfg.seed = 7;
    cfg.order = 16;

    const BestRecord rec = maximize(cfg);
    CHECK(rec.value >= 0.8);
    CHECK(rec.value <= 1.0);
    CHECK(rec.pole_free);
    CHECK(rec.membership_margin >= cfg.margin);
}

TEST_CASE("configuration validation") {
    SearchConfig cfg;
    cfg.restarts = 0;
    CHECK_THROWS_AS(run_restarts(cfg), std::invalid_argument);
    cfg = SearchConfig{};
    cfg.degree = -1;
    CHECK_THROWS_AS(run_restarts(cfg), std::invalid_argument);
    cfg = SearchConfig{};
    cfg.iterations = -1;
    CHECK_THROWS_AS(run_restarts(cfg), std::invalid_argument);
    cfg = SearchConfig{};
    cfg.margin = -0.1;
    CHECK_THROWS_AS(run_restarts(cfg), std::invalid_argument);
    cfg = SearchConfig{};
    cfg.spec = FunctionalSpec::Zalcman(5);  // reads a9, beyond order 6
    cfg.order = 6;
    CHECK_THROWS_AS(run_restarts(cfg), std::invalid_argument);
    cfg = SearchConfig{};
    cfg.spec = FunctionalSpec::Krushkal(5, 1);  // reads a5: order 5 suffices
    cfg.order = 5;
    cfg.degree = 0;
    cfg.restarts = 1;
    cfg.iterations = 0;
    CHECK_NOTHROW(run_restarts(cfg));
}
