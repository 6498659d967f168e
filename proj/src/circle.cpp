#include "uzalc/circle.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace uzalc::detail {

const std::vector<Complex>& unit_circle(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Complex>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::vector<Complex> t(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) {
            const double th = 2.0 * std::numbers::pi * j / n;
            t[static_cast<size_t>(j)] = Complex(std::cos(th), std::sin(th));
        }
        it = cache.emplace(n, std::move(t)).first;
    }
    return it->second;
}

}  // namespace uzalc::detail
