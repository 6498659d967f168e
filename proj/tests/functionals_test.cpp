#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "uzalc/classu.hpp"
#include "uzalc/functionals.hpp"
#include "uzalc/schwarz.hpp"

using namespace uzalc;

TEST_CASE("spec grammar round-trips") {
    CHECK(FunctionalSpec::parse("Z:2") == FunctionalSpec::Zalcman(2));
    CHECK(FunctionalSpec::parse("GZ:2,4") == FunctionalSpec::GenZalcman(2, 4));
    CHECK(FunctionalSpec::parse("K:5,1") == FunctionalSpec::Krushkal(5, 1));
    CHECK(FunctionalSpec::Zalcman(3).str() == "Z:3");
    CHECK(FunctionalSpec::GenZalcman(2, 3).str() == "GZ:2,3");
    CHECK(FunctionalSpec::Krushkal(4, 2).str() == "K:4,2");
    for (const char* text : {"Z:2", "Z:17", "GZ:3,9", "K:6,3"})
        CHECK(FunctionalSpec::parse(text).str() == text);

    for (const char* bad : {"", "Z", "Z:", "Z:x", "Z:2,3", "GZ:2", "GZ:,3", "K:4", "Q:4",
                            "Z:-2", "GZ:2,3,4", "z:2", "K:4,"})
        CHECK_THROWS_AS(FunctionalSpec::parse(bad), std::invalid_argument);

    CHECK_THROWS_AS(FunctionalSpec::Zalcman(1), std::invalid_argument);
    CHECK_THROWS_AS(FunctionalSpec::GenZalcman(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(FunctionalSpec::Krushkal(4, 0), std::invalid_argument);
}

TEST_CASE("required coefficient index") {
    CHECK(FunctionalSpec::Zalcman(2).required_index() == 3);
    CHECK(FunctionalSpec::Zalcman(3).required_index() == 5);
    CHECK(FunctionalSpec::GenZalcman(2, 4).required_index() == 5);
    CHECK(FunctionalSpec::Krushkal(5, 1).required_index() == 5);
}

TEST_CASE("sharp constants") {
    CHECK(bound(FunctionalSpec::Zalcman(2)) == 1.0);
    CHECK(bound(FunctionalSpec::Zalcman(3)) == 4.0);
    CHECK(bound(FunctionalSpec::GenZalcman(2, 3)) == 2.0);
    CHECK(bound(FunctionalSpec::GenZalcman(2, 4)) == 3.0);
    CHECK(bound(FunctionalSpec::Krushkal(4, 1)) == 4.0);   // 2^3 - 4
    CHECK(bound(FunctionalSpec::Krushkal(5, 1)) == 11.0);  // 2^4 - 5
    // conjectural parameters still get the formula constants
    CHECK(bound(FunctionalSpec::GenZalcman(3, 3)) == 4.0);
    CHECK(bound(FunctionalSpec::Krushkal(3, 2)) == 7.0);   // 2^4 - 9
}

TEST_CASE("proven-case registry") {
    CHECK(proven_specs().size() == 6);
    for (const auto& s : proven_specs()) CHECK(is_proven_case(s));
    CHECK_FALSE(is_proven_case(FunctionalSpec::Zalcman(4)));
    CHECK_FALSE(is_proven_case(FunctionalSpec::GenZalcman(3, 3)));
    CHECK_FALSE(is_proven_case(FunctionalSpec::Krushkal(4, 2)));
}

TEST_CASE("witness saturates every proven bound, at several rotations") {
    for (const double theta : {0.0, 0.7, std::numbers::pi}) {
        const auto k = ClassUFunction::koebe(theta);
        for (const auto& spec : proven_specs())
            CHECK(std::abs(evaluate(spec, k) - bound(spec)) < 1e-12);
    }
}

TEST_CASE("hand-computed values") {
    // identity-like reconstruction: a2 = 0, omega = 0 -> f(z) = z, all higher a_n = 0
    const auto id = ClassUFunction::build(Complex(0.0, 0.0),
                                          SchwarzFunction::from_schur(SchurParams{}));
    CHECK(evaluate(FunctionalSpec::GenZalcman(2, 3), id) == 0.0);
    CHECK(excess(FunctionalSpec::GenZalcman(2, 3), id) == -2.0);

    // a2 = 1, c1 = 0.5: a3 = 1.5, so |a2^2 - a3| = 0.5
    const auto f = ClassUFunction::build(
        Complex(1.0, 0.0), SchwarzFunction::from_schur(SchurParams({Complex(0.5, 0.0)})), 64,
        true);
    CHECK(evaluate(FunctionalSpec::Zalcman(2), f) == doctest::Approx(0.5).epsilon(1e-12));

    // K:2,p compares a2^p with itself and vanishes identically
    const auto spec = FunctionalSpec::Krushkal(2, 3);
    CHECK(bound(spec) == 0.0);
    CHECK(evaluate(spec, f) < 1e-14);
}

TEST_CASE("order guard") {
    const auto f = ClassUFunction::build(Complex(0.5, 0.0),
                                         SchwarzFunction::from_schur(SchurParams{}, 6), 6);
    CHECK_NOTHROW(evaluate(FunctionalSpec::Krushkal(5, 1), f));
    CHECK_THROWS_AS(evaluate(FunctionalSpec::Zalcman(5), f), std::invalid_argument);
}

TEST_CASE("no random member beats a proven bound") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int accepted = 0;
    while (accepted < 200) {
        std::vector<Complex> g(4);
        // radius halves per index, else almost no degree-4 draw is a member
        for (size_t k = 0; k < g.size(); ++k) {
            const double r = 0.999 * std::pow(0.5, static_cast<double>(k)) * std::sqrt(unit(rng));
            const double phi = 2.0 * std::numbers::pi * unit(rng);
            g[k] = Complex(r * std::cos(phi), r * std::sin(phi));
        }
        const double ra = 2.0 * std::sqrt(unit(rng));
        const double pa = 2.0 * std::numbers::pi * unit(rng);
        const Complex a2(ra * std::cos(pa), ra * std::sin(pa));
        const auto omega = SchwarzFunction::from_schur(SchurParams(g));
        if (omega.deriv_sup() > 1.0) continue;
        const auto f = ClassUFunction::build(a2, omega, 64, true);
        if (!f.pole_free()) continue;
        ++accepted;
        for (const auto& spec : proven_specs()) CHECK(excess(spec, f) <= 1e-9);
    }
}
