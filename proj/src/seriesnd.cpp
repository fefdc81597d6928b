#include "exptaylor/seriesnd.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "exptaylor/error.hpp"
#include "exptaylor/jet.hpp"
#include "exptaylor/numerics.hpp"
#include "exptaylor/operator.hpp"
#include "exptaylor/series1d.hpp"

namespace exptaylor {

namespace {

void check_common(const ExprAst& ast, int n, Complex lambda, std::span<const double> center) {
    if (n < 1 || n > kMaxDims) {
        throw ValidationError("dimension must lie in [1, " + std::to_string(kMaxDims) + "]");
    }
    if (ast.dims() != n) {
        throw ValidationError("expression has " + std::to_string(ast.dims()) +
                              " variables, expected " + std::to_string(n));
    }
    if (center.size() != static_cast<std::size_t>(n)) {
        throw ValidationError("center must have " + std::to_string(n) + " coordinates");
    }
    if (lambda == Complex{}) throw ValidationError("lambda must be nonzero");
}

void check_order(int N) {
    if (N < 1 || N > kMaxNdOrder) {
        throw ValidationError("n-D order must lie in [1, " + std::to_string(kMaxNdOrder) +
                              "], got " + std::to_string(N));
    }
}

double sup_norm_distance(std::span<const double> a, std::span<const double> b) {
    double r = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) r = std::max(r, std::fabs(a[i] - b[i]));
    return r;
}

// Per-axis powers w_i^k, k = 0..max_power.
std::vector<std::vector<Complex>> axis_powers(Complex lambda, std::span<const double> center,
                                              std::span<const double> x, int max_power) {
    std::vector<std::vector<Complex>> pw(center.size());
    for (std::size_t i = 0; i < center.size(); ++i) {
        const Complex w = expm1(lambda * (x[i] - center[i]));
        auto& p = pw[i];
        p.resize(static_cast<std::size_t>(max_power) + 1);
        p[0] = 1.0;
        for (int k = 1; k <= max_power; ++k) p[static_cast<std::size_t>(k)] = p[static_cast<std::size_t>(k - 1)] * w;
    }
    return pw;
}

Complex monomial(const std::vector<std::vector<Complex>>& pw, const MultiIndex& gamma) {
    Complex m(1.0, 0.0);
    for (int i = 0; i < gamma.size(); ++i) m *= pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(gamma[i])];
    return m;
}

}  // namespace

Complex ExpansionND::operator[](const MultiIndex& gamma) const {
    const auto pos = layout->position(gamma);
    return pos == MonomialLayout::npos ? Complex{} : coeffs[pos];
}

BoxDomain BoxDomain::spanning(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw ValidationError("box corners differ in dimension");
    BoxDomain box;
    for (std::size_t i = 0; i < a.size(); ++i) {
        box.lo.push_back(std::min(a[i], b[i]));
        box.hi.push_back(std::max(a[i], b[i]));
    }
    return box;
}

BoxDomain BoxDomain::centered(std::span<const double> center, double halfwidth) {
    if (!(halfwidth >= 0.0)) throw ValidationError("box half-width must be nonnegative");
    BoxDomain box;
    for (double c : center) {
        box.lo.push_back(c - halfwidth);
        box.hi.push_back(c + halfwidth);
    }
    return box;
}

std::vector<std::vector<double>> BoxDomain::sample(int per_axis, std::uint64_t seed) const {
    if (per_axis < 3) throw ValidationError("box grid needs at least 3 points per axis");
    const auto n = lo.size();
    std::vector<std::vector<double>> points;
    if (n <= 3) {
        std::vector<std::vector<double>> axes(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (hi[i] == lo[i]) {
                axes[i] = {lo[i]};
                continue;
            }
            for (int k = 0; k < per_axis; ++k) {
                axes[i].push_back(k == per_axis - 1 ? hi[i]
                                                    : lo[i] + (hi[i] - lo[i]) * k / (per_axis - 1));
            }
        }
        std::vector<std::size_t> idx(n, 0);
        for (;;) {
            std::vector<double> p(n);
            for (std::size_t i = 0; i < n; ++i) p[i] = axes[i][idx[i]];
            points.push_back(std::move(p));
            bool advanced = false;
            for (std::size_t axis = n; axis-- > 0;) {
                if (++idx[axis] < axes[axis].size()) {
                    advanced = true;
                    break;
                }
                idx[axis] = 0;
            }
            if (!advanced) return points;
        }
    }
    points.push_back(lo);
    points.push_back(hi);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int s = 0; s < 10 * per_axis; ++s) {
        std::vector<double> p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = lo[i] + (hi[i] - lo[i]) * unit(rng);
        points.push_back(std::move(p));
    }
    return points;
}

ExpansionND expand_nd(const ExprAst& ast, int n, Complex lambda, std::span<const double> center,
                      int N) {
    check_common(ast, n, lambda, center);
    check_order(N);
    const auto jet = lift_nd(ast, center, N - 1);
    const auto field =
        d_lambda_nd(jet, default_stirling_table(), lambda, N - 1, {center.begin(), center.end()});
    ExpansionND out{lambda, {center.begin(), center.end()}, N, field.layout, field.values};
    for (std::size_t pos = 0; pos < out.coeffs.size(); ++pos) {
        out.coeffs[pos] /= out.layout->index(pos).factorial();
    }
    return out;
}

Complex eval_nd(const ExpansionND& expansion, std::span<const double> x) {
    if (x.size() != expansion.center.size()) {
        throw ValidationError("evaluation point has the wrong dimension");
    }
    const auto pw = axis_powers(expansion.lambda, expansion.center, x, expansion.order - 1);
    Complex total{};
    for (std::size_t pos = 0; pos < expansion.coeffs.size(); ++pos) {
        total += expansion.coeffs[pos] * monomial(pw, expansion.layout->index(pos));
    }
    return total;
}

double remainder_bound_nd(const ExprAst& ast, int n, Complex lambda,
                          std::span<const double> center, std::span<const double> x, int N,
                          int grid, std::uint64_t seed) {
    check_common(ast, n, lambda, center);
    check_order(N);
    if (x.size() != center.size()) throw ValidationError("x has the wrong dimension");
    const double r = sup_norm_distance(x, center);
    if (r == 0.0) return 0.0;

    const auto& table = default_stirling_table();
    const auto degree = multi_indices_of_degree(n, N);
    std::vector<double> sups(degree.size(), 0.0);
    for (const auto& y : BoxDomain::spanning(x, center).sample(grid, seed)) {
        const auto values = d_lambda_nd_degree_at(ast, table, lambda, y, N);
        for (std::size_t i = 0; i < sups.size(); ++i) sups[i] = std::max(sups[i], std::abs(values[i]));
    }
    double weighted = 0.0;
    for (std::size_t i = 0; i < sups.size(); ++i) weighted += N / degree[i].factorial() * sups[i];
    return std::abs(lambda) * weighted * std::pow(epsilon_sup(lambda, r), N - 1) * r;
}

NdConvergenceReport convergence_check_nd(const ExprAst& ast, int n, Complex lambda,
                                         std::span<const double> center, double A,
                                         double V_halfwidth, int N_max,
                                         const NdConvergenceOptions& options) {
    check_common(ast, n, lambda, center);
    check_order(N_max);
    if (!(A > 0.0)) throw ValidationError("envelope constant A must be positive");
    if (!(V_halfwidth > 0.0)) throw ValidationError("neighbourhood half-width must be positive");
    if (!(options.alpha > 0.0 && options.alpha < 1.0)) {
        throw ValidationError("alpha must lie in (0, 1)");
    }

    NdConvergenceReport report;
    report.alpha = options.alpha;

    const auto& table = default_stirling_table();
    const auto layout = MonomialLayout::get(n, N_max);
    std::vector<double> sups(layout->size(), 0.0);
    for (const auto& y : BoxDomain::centered(center, V_halfwidth).sample(options.grid, options.seed)) {
        const auto field = d_lambda_nd(lift_nd(ast, y, N_max), table, lambda, N_max, y);
        for (std::size_t pos = 0; pos < sups.size(); ++pos) {
            sups[pos] = std::max(sups[pos], std::abs(field.values[pos]));
        }
    }
    // gamma = 0 never enters the remainder bound, so the envelope starts at |gamma| = 1.
    for (std::size_t pos = layout->degree_begin(1); pos < layout->size(); ++pos) {
        NdConvergenceReport::EnvelopeEntry e{layout->index(pos), sups[pos],
                                             A * layout->index(pos).factorial(), true};
        e.holds = e.sup <= e.limit * (1.0 + 1e-9);
        report.envelope_holds = report.envelope_holds && e.holds;
        report.envelope.push_back(std::move(e));
    }

    report.delta = std::min(epsilon_inverse(lambda, options.alpha), V_halfwidth);
    for (int N = 1; N <= N_max; ++N) {
        report.predicted.push_back(A * report.delta * std::abs(lambda) * std::pow(N, n) /
                                   factorial(n - 1) * std::pow(options.alpha, N - 1));
    }

    if (options.point) {
        const auto& x = *options.point;
        if (x.size() != center.size()) throw ValidationError("point has the wrong dimension");
        const auto expansion = expand_nd(ast, n, lambda, center, N_max);
        const Complex truth = [&] {
            std::vector<Complex> z(x.begin(), x.end());
            return eval_complex(ast, z);
        }();
        const auto pw = axis_powers(lambda, center, x, N_max - 1);
        Complex partial{};
        for (int N = 1; N <= N_max; ++N) {
            const auto& L = *expansion.layout;
            for (std::size_t pos = L.degree_begin(N - 1); pos < L.degree_begin(N); ++pos) {
                partial += expansion.coeffs[pos] * monomial(pw, L.index(pos));
            }
            report.measured.push_back(std::abs(truth - partial));
        }
        if (N_max >= 3) {
            const double first = report.measured[1];
            const double last = report.measured.back();
            report.decay_ratio = first > 0.0 ? std::pow(last / first, 1.0 / (N_max - 2)) : 0.0;
            for (int N = 3; N <= N_max; ++N) {
                const double prev = report.measured[static_cast<std::size_t>(N - 2)];
                const double cur = report.measured[static_cast<std::size_t>(N - 1)];
                report.max_step_ratio = std::max(report.max_step_ratio, prev > 0.0 ? cur / prev : 0.0);
            }
        }
    }
    return report;
}

}  // namespace exptaylor
