#pragma once

#include <string>
#include <vector>

#include "uzalc/classu.hpp"

namespace uzalc {

/// One of the three coefficient functionals together with its conjectured
/// sharp constant:
///   Zalcman n:          |a_n^2 - a_{2n-1}|        <= (n-1)^2
///   GenZalcman m, n:    |a_m a_n - a_{m+n-1}|     <= (m-1)(n-1)
///   Krushkal n, p:      |a_n^p - a_2^{p(n-1)}|    <= 2^{p(n-1)} - n^p
/// p is restricted to positive integers.
struct FunctionalSpec {
    enum class Kind { zalcman, gen_zalcman, krushkal };

    static FunctionalSpec Zalcman(int n);
    static FunctionalSpec GenZalcman(int m, int n);
    static FunctionalSpec Krushkal(int n, int p);

    /// Grammar: "Z:n" | "GZ:m,n" | "K:n,p", e.g. "GZ:2,4".
    static FunctionalSpec parse(const std::string& text);
    std::string str() const;

    /// Largest coefficient index the functional reads.
    int required_index() const;

    Kind kind;
    int m = 0;  // GenZalcman only
    int n = 0;
    int p = 0;  // Krushkal only
};

bool operator==(const FunctionalSpec& a, const FunctionalSpec& b);

/// The functional's value on f; requires f.order() >= required_index().
double evaluate(const FunctionalSpec& spec, const ClassUFunction& f);

/// The conjectured/proven sharp constant.
double bound(const FunctionalSpec& spec);

/// evaluate - bound; <= 0 for every class member when the case is proven.
double excess(const FunctionalSpec& spec, const ClassUFunction& f);

/// The six cases proven sharp over the class: Z:2, Z:3, GZ:2,3, GZ:2,4,
/// K:4,1, K:5,1. Other parameter choices are conjectural and only explored.
const std::vector<FunctionalSpec>& proven_specs();
bool is_proven_case(const FunctionalSpec& spec);

}  // namespace uzalc
