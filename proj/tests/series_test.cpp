#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "uzalc/errors.hpp"
#include "uzalc/series.hpp"

using namespace uzalc;

TEST_CASE("construction and coefficient access") {
    TruncatedSeries zero(4);
    CHECK(zero.order() == 4);
    for (int k = 0; k <= 4; ++k) CHECK(zero[k] == Complex(0.0, 0.0));

    const auto c = TruncatedSeries::constant(Complex(2.0, 1.0), 3);
    CHECK(c[0] == Complex(2.0, 1.0));
    CHECK(c[3] == Complex(0.0, 0.0));

    const auto m = TruncatedSeries::monomial(2, 5, Complex(3.0, 0.0));
    CHECK(m[2] == Complex(3.0, 0.0));
    CHECK(m[1] == Complex(0.0, 0.0));
    CHECK_THROWS_AS(m.at(6), std::out_of_range);
    CHECK_THROWS_AS(m.at(-1), std::out_of_range);
    CHECK_THROWS_AS(TruncatedSeries(-1), std::invalid_argument);
    CHECK_THROWS_AS(TruncatedSeries::monomial(7, 5), std::invalid_argument);
}

TEST_CASE("ring operations") {
    const auto one = TruncatedSeries::constant(1.0, 3);
    const auto z = TruncatedSeries::monomial(1, 3);
    const auto p = one + z;          // 1 + z
    const auto p2 = p * p;           // 1 + 2z + z^2
    CHECK(p2[0] == Complex(1.0));
    CHECK(p2[1] == Complex(2.0));
    CHECK(p2[2] == Complex(1.0));
    CHECK(p2[3] == Complex(0.0));

    // truncation drops z^3 and z^4 of (1 + z + z^2)^2
    const auto q = TruncatedSeries(std::vector<Complex>{1.0, 1.0, 1.0});
    const auto q2 = q * q;
    CHECK(q2.order() == 2);
    CHECK(q2[0] == Complex(1.0));
    CHECK(q2[1] == Complex(2.0));
    CHECK(q2[2] == Complex(3.0));

    CHECK((p - p)[1] == Complex(0.0));
    CHECK((-p)[0] == Complex(-1.0));
    CHECK((2.0 * p)[1] == Complex(2.0));
    CHECK((p * Complex(0.0, 1.0))[0] == Complex(0.0, 1.0));

    const auto other_order = TruncatedSeries::constant(1.0, 5);
    CHECK_THROWS_AS(p + other_order, OrderMismatchError);
    CHECK_THROWS_AS(p * other_order, OrderMismatchError);
    CHECK_THROWS_AS(max_coeff_dist(p, other_order), OrderMismatchError);
}

TEST_CASE("reciprocal by forward recurrence") {
    // 1/(1 - z) = 1 + z + z^2 + ...
    const auto den = TruncatedSeries::constant(1.0, 10) - TruncatedSeries::monomial(1, 10);
    const auto geo = recip(den);
    for (int k = 0; k <= 10; ++k) CHECK(std::abs(geo[k] - Complex(1.0)) < 1e-14);

    // b * recip(b) == 1 for a generic series
    const auto b = TruncatedSeries(std::vector<Complex>{
        Complex(2.0, -1.0), Complex(0.5, 0.25), Complex(-1.0, 0.75), Complex(0.0, 1.0),
        Complex(0.3, 0.0)});
    const auto prod = b * recip(b);
    CHECK(std::abs(prod[0] - Complex(1.0)) < 1e-13);
    for (int k = 1; k <= 4; ++k) CHECK(std::abs(prod[k]) < 1e-13);

    CHECK_THROWS_AS(recip(TruncatedSeries(4)), SingularSeriesError);
    CHECK_THROWS_AS(recip(TruncatedSeries::monomial(1, 4)), SingularSeriesError);
}

TEST_CASE("derivative keeps the order with a zero top coefficient") {
    // d/dz (z + 2z^2 + ... + 6z^6) = 1 + 4z + 9z^2 + 16z^3 + 25z^4 + 36z^5
    std::vector<Complex> c(7);
    for (int k = 1; k <= 6; ++k) c[static_cast<size_t>(k)] = static_cast<double>(k);
    const auto d = deriv(TruncatedSeries(std::move(c)));
    CHECK(d.order() == 6);
    const double expect[] = {1.0, 4.0, 9.0, 16.0, 25.0, 36.0, 0.0};
    for (int k = 0; k <= 6; ++k) CHECK(d[k] == Complex(expect[k]));
}

TEST_CASE("Horner evaluation against the geometric closed form") {
    const auto den = TruncatedSeries::constant(1.0, 30) - TruncatedSeries::monomial(1, 30);
    const Complex v = eval(recip(den), Complex(0.5, 0.0));
    // sum_{k=0..30} 2^-k = 2 - 2^-30
    const double exact = 2.0 - std::ldexp(1.0, -30);
    CHECK(std::abs(v - Complex(exact)) < 1e-15);
}

TEST_CASE("shifts") {
    const auto s = TruncatedSeries(std::vector<Complex>{1.0, 2.0, 3.0, 4.0});
    const auto up = shift_up(s);
    CHECK(up[0] == Complex(0.0));
    CHECK(up[1] == Complex(1.0));
    CHECK(up[3] == Complex(3.0));  // 4 z^3 truncated away

    const auto down = shift_down(s);
    CHECK(down[0] == Complex(2.0));
    CHECK(down[2] == Complex(4.0));
    CHECK(down[3] == Complex(0.0));

    const auto round_trip = shift_down(shift_up(s, 2), 2);
    CHECK(round_trip[0] == Complex(1.0));
    CHECK(round_trip[1] == Complex(2.0));
    CHECK(round_trip[2] == Complex(0.0));  // lost to truncation at the top

    CHECK(max_coeff_dist(s, s) == 0.0);
    CHECK(max_coeff_dist(s, shift_up(s, 0)) == 0.0);
}
