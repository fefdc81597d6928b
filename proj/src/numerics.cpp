#include "exptaylor/numerics.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>

#include "exptaylor/error.hpp"

namespace exptaylor {

std::complex<double> expm1(std::complex<double> z) {
    const double a = z.real();
    const double b = z.imag();
    const double half_sin = std::sin(0.5 * b);
    // e^a cos b - 1 = expm1(a) cos b - 2 sin^2(b/2)
    const double re = std::expm1(a) * std::cos(b) - 2.0 * half_sin * half_sin;
    const double im = std::exp(a) * std::sin(b);
    return {re, im};
}

std::complex<double> ipow(std::complex<double> z, int n) {
    std::complex<double> r(1.0, 0.0);
    while (n > 0) {
        if (n & 1) r *= z;
        n >>= 1;
        if (n > 0) z *= z;
    }
    return r;
}

namespace {

// Returns P_n(t) and P_n'(t).
std::pair<double, double> legendre(int n, double t) {
    double p0 = 1.0, p1 = t;
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    return {p1, n * (t * p1 - p0) / (t * t - 1.0)};
}

QuadratureRule compute_rule(int n) {
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            const auto [p, dp] = legendre(n, t);
            const double step = p / dp;
            t -= step;
            if (std::fabs(step) < 1e-16) break;
        }
        const double dp = legendre(n, t).second;
        const double w = 1.0 / ((1.0 - t * t) * dp * dp);  // half of the [-1,1] weight
        const auto lo = static_cast<std::size_t>(i);
        const auto hi = static_cast<std::size_t>(n - 1 - i);
        rule.nodes[lo] = 0.5 * (1.0 - t);
        rule.nodes[hi] = 0.5 * (1.0 + t);
        rule.weights[lo] = w;
        rule.weights[hi] = w;
    }
    return rule;
}

}  // namespace

const QuadratureRule& gauss_legendre(int n) {
    if (n < 1 || n > 1024) throw ValidationError("quadrature order must lie in [1, 1024]");
    static std::mutex mutex;
    static std::map<int, QuadratureRule> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
    return it->second;
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

void CompensatedSum::add(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
        comp_ += (sum_ - t) + v;
    } else {
        comp_ += (v - t) + sum_;
    }
    sum_ = t;
}

}  // namespace exptaylor
