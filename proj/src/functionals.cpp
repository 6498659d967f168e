#include "uzalc/functionals.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace uzalc {

namespace {

// Integer power by repeated squaring; keeps small-int cases exact.
Complex cpow_int(Complex z, int k) {
    Complex acc(1.0, 0.0);
    Complex base = z;
    for (int e = k; e > 0; e >>= 1) {
        if (e & 1) acc *= base;
        base *= base;
    }
    return acc;
}

[[noreturn]] void bad_spec(const std::string& text) {
    throw std::invalid_argument("bad functional spec \"" + text +
                                "\" (expected Z:n | GZ:m,n | K:n,p)");
}

int parse_int(const std::string& text, const std::string& field, size_t begin, size_t end) {
    if (begin >= end) bad_spec(text);
    int value = 0;
    for (size_t i = begin; i < end; ++i) {
        if (text[i] < '0' || text[i] > '9') bad_spec(text);
        value = value * 10 + (text[i] - '0');
        if (value > 1000000) throw std::invalid_argument("functional parameter too large: " + field);
    }
    return value;
}

}  // namespace

FunctionalSpec FunctionalSpec::Zalcman(int n) {
    if (n < 2) throw std::invalid_argument("Zalcman functional needs n >= 2");
    return {Kind::zalcman, 0, n, 0};
}

FunctionalSpec FunctionalSpec::GenZalcman(int m, int n) {
    if (m < 2 || n < 2) throw std::invalid_argument("generalized Zalcman needs m, n >= 2");
    return {Kind::gen_zalcman, m, n, 0};
}

FunctionalSpec FunctionalSpec::Krushkal(int n, int p) {
    if (n < 2) throw std::invalid_argument("Krushkal functional needs n >= 2");
    if (p < 1) throw std::invalid_argument("Krushkal functional needs integer p >= 1");
    return {Kind::krushkal, 0, n, p};
}

FunctionalSpec FunctionalSpec::parse(const std::string& text) {
    const size_t colon = text.find(':');
    if (colon == std::string::npos) bad_spec(text);
    const std::string head = text.substr(0, colon);
    const size_t comma = text.find(',', colon + 1);
    if (head == "Z") {
        if (comma != std::string::npos) bad_spec(text);
        return Zalcman(parse_int(text, "n", colon + 1, text.size()));
    }
    if (head == "GZ") {
        if (comma == std::string::npos) bad_spec(text);
        return GenZalcman(parse_int(text, "m", colon + 1, comma),
                          parse_int(text, "n", comma + 1, text.size()));
    }
    if (head == "K") {
        if (comma == std::string::npos) bad_spec(text);
        return Krushkal(parse_int(text, "n", colon + 1, comma),
                        parse_int(text, "p", comma + 1, text.size()));
    }
    bad_spec(text);
}

std::string FunctionalSpec::str() const {
    char buf[48];
    switch (kind) {
        case Kind::zalcman: std::snprintf(buf, sizeof buf, "Z:%d", n); break;
        case Kind::gen_zalcman: std::snprintf(buf, sizeof buf, "GZ:%d,%d", m, n); break;
        case Kind::krushkal: std::snprintf(buf, sizeof buf, "K:%d,%d", n, p); break;
    }
    return buf;
}

int FunctionalSpec::required_index() const {
    switch (kind) {
        case Kind::zalcman: return 2 * n - 1;
        case Kind::gen_zalcman: return m + n - 1;
        case Kind::krushkal: return n;
    }
    return 0;
}

bool operator==(const FunctionalSpec& a, const FunctionalSpec& b) {
    return a.kind == b.kind && a.m == b.m && a.n == b.n && a.p == b.p;
}

double evaluate(const FunctionalSpec& spec, const ClassUFunction& f) {
    if (f.order() < spec.required_index())
        throw std::invalid_argument("function order " + std::to_string(f.order()) +
                                    " too small for functional " + spec.str());
    switch (spec.kind) {
        case FunctionalSpec::Kind::zalcman: {
            const Complex an = f.coefficient(spec.n);
            return std::abs(an * an - f.coefficient(2 * spec.n - 1));
        }
        case FunctionalSpec::Kind::gen_zalcman:
            return std::abs(f.coefficient(spec.m) * f.coefficient(spec.n) -
                            f.coefficient(spec.m + spec.n - 1));
        case FunctionalSpec::Kind::krushkal:
            return std::abs(cpow_int(f.coefficient(spec.n), spec.p) -
                            cpow_int(f.a2(), spec.p * (spec.n - 1)));
    }
    return 0.0;
}

double bound(const FunctionalSpec& spec) {
    switch (spec.kind) {
        case FunctionalSpec::Kind::zalcman:
            return static_cast<double>(spec.n - 1) * (spec.n - 1);
        case FunctionalSpec::Kind::gen_zalcman:
            return static_cast<double>(spec.m - 1) * (spec.n - 1);
        case FunctionalSpec::Kind::krushkal:
            return std::exp2(static_cast<double>(spec.p) * (spec.n - 1)) -
                   std::pow(static_cast<double>(spec.n), spec.p);
    }
    return 0.0;
}

double excess(const FunctionalSpec& spec, const ClassUFunction& f) {
    return evaluate(spec, f) - bound(spec);
}

const std::vector<FunctionalSpec>& proven_specs() {
    static const std::vector<FunctionalSpec> specs = {
        FunctionalSpec::Zalcman(2),       FunctionalSpec::Zalcman(3),
        FunctionalSpec::GenZalcman(2, 3), FunctionalSpec::GenZalcman(2, 4),
        FunctionalSpec::Krushkal(4, 1),   FunctionalSpec::Krushkal(5, 1),
    };
    return specs;
}

bool is_proven_case(const FunctionalSpec& spec) {
    for (const auto& s : proven_specs())
        if (s == spec) return true;
    return false;
}

}  // namespace uzalc
