#include "exptaylor/series1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "exptaylor/error.hpp"
#include "exptaylor/jet.hpp"
#include "exptaylor/numerics.hpp"
#include "exptaylor/operator.hpp"

namespace exptaylor {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_lambda(Complex lambda) {
    if (lambda == Complex{}) throw ValidationError("lambda must be nonzero");
}

void check_remainder_order(int N) {
    if (N < 1 || N > kMaxJetOrder) {
        throw ValidationError("remainder order must lie in [1, " + std::to_string(kMaxJetOrder) +
                              "], got " + std::to_string(N));
    }
}

}  // namespace

bool purely_imaginary(Complex lambda) { return lambda.real() == 0.0 && lambda.imag() != 0.0; }

Expansion1D expand_1d(const ExprAst& ast, Complex lambda, double x0, int N) {
    check_lambda(lambda);
    if (N < 1 || N > kMaxExpansionOrder) {
        throw ValidationError("expansion order must lie in [1, " +
                              std::to_string(kMaxExpansionOrder) + "], got " + std::to_string(N));
    }
    const auto jet = lift(ast, x0, N - 1);
    const auto v = d_lambda_recursive(jet, lambda, N - 1, x0);
    Expansion1D out{lambda, x0, {}};
    out.coeffs.reserve(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j) out.coeffs.push_back(v[j] / factorial(j));
    return out;
}

Complex eval_series(const Expansion1D& expansion, double x) {
    const Complex w = expm1(expansion.lambda * (x - expansion.x0));
    Complex acc{};
    for (auto it = expansion.coeffs.rbegin(); it != expansion.coeffs.rend(); ++it) {
        acc = acc * w + *it;
    }
    return acc;
}

Complex remainder_integral(const ExprAst& ast, Complex lambda, double x0, double x, int N,
                           int quad_nodes) {
    check_lambda(lambda);
    check_remainder_order(N);
    if (quad_nodes < 2) throw ValidationError("quadrature needs at least 2 nodes");
    const double h = x - x0;
    if (h == 0.0) return {};

    const auto& rule = gauss_legendre(quad_nodes);
    Complex total{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double t = rule.nodes[i];
        const Complex d = d_lambda_at(ast, lambda, x0 + t * h, N);
        const Complex w = expm1(lambda * ((1.0 - t) * h));
        total += rule.weights[i] * d * ipow(w, N - 1);
    }
    return lambda / factorial(N - 1) * total * h;
}

RemainderEstimate remainder_bound(const ExprAst& ast, Complex lambda, double x0, double x, int N,
                                  int grid, int quad_nodes) {
    check_lambda(lambda);
    check_remainder_order(N);
    if (grid < 3 || grid % 2 == 0) throw ValidationError("sup grid must be odd and at least 3");

    RemainderEstimate est;
    est.order = N;
    est.grid_points = grid;
    const double h = x - x0;
    if (h == 0.0) return est;

    double sup_product = 0.0;
    double sup_operator = 0.0;
    for (int i = 0; i < grid; ++i) {
        const double t = static_cast<double>(i) / (grid - 1);
        const double xi = i == grid - 1 ? x : x0 + t * h;
        const Complex d = d_lambda_at(ast, lambda, xi, N);
        const Complex w = expm1(lambda * (x - xi));
        sup_operator = std::max(sup_operator, std::abs(d));
        sup_product = std::max(sup_product, std::abs(d * ipow(w, N - 1)));
    }
    const double scale = std::abs(lambda) / factorial(N - 1) * std::fabs(h);
    est.bound_tight = scale * sup_product;
    est.bound_loose =
        scale * sup_operator * std::pow(epsilon_sup(lambda, std::fabs(h)), N - 1);
    est.integral_value = remainder_integral(ast, lambda, x0, x, N, quad_nodes);
    return est;
}

double epsilon_sup(Complex lambda, double r) {
    if (!(r >= 0.0)) throw ValidationError("epsilon_sup needs r >= 0");
    if (r == 0.0) return 0.0;
    const double mag = std::abs(lambda);
    if (lambda.imag() == 0.0) return std::expm1(mag * r);
    if (lambda.real() == 0.0) {
        return 2.0 * std::sin(std::min(0.5 * mag * r, 0.5 * std::numbers::pi));
    }

    auto f = [&](double z) { return std::abs(expm1(lambda * z)); };
    constexpr int kGrid = 1025;
    int best = 0;
    double best_val = -1.0;
    for (int i = 0; i < kGrid; ++i) {
        const double z = -r + 2.0 * r * i / (kGrid - 1);
        const double v = f(z);
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }
    // Golden-section refinement on the bracketing cells.
    const double step = 2.0 * r / (kGrid - 1);
    double lo = std::max(-r, -r + (best - 1) * step);
    double hi = std::min(r, -r + (best + 1) * step);
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = hi - g * (hi - lo);
    double b = lo + g * (hi - lo);
    double fa = f(a), fb = f(b);
    for (int it = 0; it < 80; ++it) {
        if (fa < fb) {
            lo = a;
            a = b;
            fa = fb;
            b = lo + g * (hi - lo);
            fb = f(b);
        } else {
            hi = b;
            b = a;
            fb = fa;
            a = hi - g * (hi - lo);
            fa = f(a);
        }
    }
    return std::max({best_val, fa, fb});
}

double epsilon_inverse(Complex lambda, double alpha) {
    if (!(alpha > 0.0)) throw ValidationError("epsilon_inverse needs alpha > 0");
    const double mag = std::abs(lambda);
    if (lambda.imag() == 0.0) return std::log1p(alpha) / mag;
    if (lambda.real() == 0.0) {
        if (alpha >= 2.0) return kInf;
        return 2.0 * std::asin(0.5 * alpha) / mag;
    }
    double lo = 0.0;
    double hi = 1.0 / mag;
    int doublings = 0;
    while (epsilon_sup(lambda, hi) <= alpha) {
        lo = hi;
        hi *= 2.0;
        if (++doublings > 60) return kInf;
    }
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        (epsilon_sup(lambda, mid) <= alpha ? lo : hi) = mid;
    }
    return lo;
}

ConvergenceReport radius_estimate(const ExprAst& ast, Complex lambda, double x0, int j_max,
                                  int window) {
    check_lambda(lambda);
    if (window < 4 || window > j_max || j_max > kMaxJetOrder) {
        throw ValidationError("radius estimate needs 4 <= window <= j_max <= " +
                              std::to_string(kMaxJetOrder));
    }
    const auto jet = lift(ast, x0, j_max);
    const auto v = d_lambda_recursive(jet, lambda, j_max, x0);

    double vmax = 0.0;
    for (const auto& value : v.values) vmax = std::max(vmax, std::abs(value));

    // Cancellation scale sum_m |s(j,m)| |lambda|^{-m} m! |c_m|: values far
    // below it are rounding noise of an exact zero.
    const auto& table = default_stirling_table();
    auto scale = [&](int j) {
        double b = 0.0;
        for (int m = 1; m <= j; ++m) {
            b += std::fabs(table.signed_double(j, m)) * std::pow(std::abs(lambda), -m) *
                 factorial(m) * std::abs(jet[m]);
        }
        return b;
    };

    ConvergenceReport report;
    for (int j = 1; j < j_max; ++j) {
        const double denom = std::abs(v[j + 1]);
        if (denom == 0.0 || denom < 1e-14 * vmax || denom < 1e-12 * scale(j + 1)) continue;
        report.ratios.push_back({j, j * std::abs(v[j]) / denom});
    }
    if (static_cast<int>(report.ratios.size()) < window) {
        throw DiagnosticError("only " + std::to_string(report.ratios.size()) +
                              " defined ratios, window needs " + std::to_string(window) +
                              " (terminating or degenerate series)");
    }

    const auto tail_begin = report.ratios.end() - window;
    double lo = kInf, hi = 0.0;
    for (auto it = tail_begin; it != report.ratios.end(); ++it) {
        lo = std::min(lo, it->value);
        hi = std::max(hi, it->value);
    }
    report.r_estimate = hi;
    report.window_spread = hi > 0.0 ? (hi - lo) / hi : 0.0;
    report.stable = report.window_spread <= 0.2;

    report.x_region_halfwidth = std::numeric_limits<double>::quiet_NaN();
    if (purely_imaginary(lambda)) {
        report.has_region = true;
        const double period = 2.0 * std::numbers::pi / std::fabs(lambda.imag());
        report.x_region_halfwidth =
            hi <= 2.0 ? period * std::asin(0.5 * hi) / std::numbers::pi : kInf;
    }
    return report;
}

GrowthReport growth_diagnostic(const ExprAst& ast, Complex lambda, double T, int N_max) {
    if (!(T > 0.0) || !std::isfinite(T)) throw ValidationError("period T must be positive");
    if (N_max < 1 || N_max > 32) throw ValidationError("growth diagnostic needs 1 <= N_max <= 32");
    const Complex expected(0.0, 2.0 * std::numbers::pi / T);
    if (std::abs(lambda - expected) > 1e-12 * std::abs(expected)) {
        throw ValidationError("growth diagnostic needs lambda = 2 pi i / T");
    }

    GrowthReport report;
    report.period = T;
    report.sup_values.assign(static_cast<std::size_t>(N_max) + 1, 0.0);
    constexpr int kGrid = 257;
    for (int i = 0; i < kGrid; ++i) {
        const double xi = T * i / (kGrid - 1);
        const auto v = d_lambda_recursive(lift(ast, xi, N_max), lambda, N_max, xi);
        for (int n = 0; n <= N_max; ++n) {
            auto& g = report.sup_values[static_cast<std::size_t>(n)];
            g = std::max(g, std::abs(v[n]));
        }
    }

    constexpr int kSamples = 9;
    for (int i = 0; i < kSamples; ++i) {
        const double t = T * i / kSamples;
        const Complex a = eval_complex(ast, Complex(t, 0.0));
        const Complex b = eval_complex(ast, Complex(t + T, 0.0));
        if (std::abs(a - b) > 1e-9 * (1.0 + std::abs(a))) report.periodic = false;
    }

    // Smallest shift k for which g_N / (N+k)! stops growing over the trailing
    // half of the sampled orders.
    constexpr int kMaxShift = 16;
    const int tail_start = std::max(1, N_max / 2);
    report.best_k = -1;
    for (int k = 0; k <= kMaxShift; ++k) {
        bool ok = true;
        for (int n = tail_start; n < N_max && ok; ++n) {
            const double q0 = report.sup_values[static_cast<std::size_t>(n)] / factorial(n + k);
            const double q1 =
                report.sup_values[static_cast<std::size_t>(n + 1)] / factorial(n + 1 + k);
            ok = q1 <= q0 * (1.0 + 1e-6) + 1e-300;
        }
        if (ok) {
            report.best_k = k;
            break;
        }
    }
    report.bounded = report.best_k >= 0;
    const int k = report.bounded ? report.best_k : kMaxShift;
    if (!report.bounded) report.best_k = kMaxShift;
    for (int n = 1; n <= N_max; ++n) {
        const double q = report.sup_values[static_cast<std::size_t>(n)] / factorial(n + k);
        report.c0_global = std::max(report.c0_global, q);
        if (n >= tail_start) report.c0 = std::max(report.c0, q);
    }
    report.note = "heuristic: sampled sup on a 257-point grid, finite range of orders";
    if (!report.periodic) report.note += "; warning: input does not look T-periodic";
    return report;
}

}  // namespace exptaylor
