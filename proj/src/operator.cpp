#include "exptaylor/operator.hpp"

#include <string>

#include "exptaylor/error.hpp"

namespace exptaylor {

namespace {

void check_lambda(Complex lambda) {
    if (lambda == Complex{}) throw ValidationError("lambda must be nonzero");
    if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag())) {
        throw ValidationError("lambda must be finite");
    }
}

void check_order(int N, int available, const char* what) {
    if (N < 0) throw ValidationError("operator order must be nonnegative");
    if (N > available) {
        throw ValidationError(std::string(what) + " order " + std::to_string(available) +
                              " is below the requested operator order " + std::to_string(N));
    }
}

std::vector<double> factorials(int n) {
    std::vector<double> f(static_cast<std::size_t>(n) + 1, 1.0);
    for (int i = 1; i <= n; ++i) f[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i - 1)] * i;
    return f;
}

std::vector<Complex> inverse_powers(Complex lambda, int n) {
    std::vector<Complex> p(static_cast<std::size_t>(n) + 1, Complex(1.0, 0.0));
    const Complex inv = 1.0 / lambda;
    for (int i = 1; i <= n; ++i) p[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i - 1)] * inv;
    return p;
}

}  // namespace

Complex OperatorField::operator[](const MultiIndex& gamma) const {
    const auto pos = layout->position(gamma);
    return pos == MonomialLayout::npos ? Complex{} : values[pos];
}

OperatorSequence d_lambda_recursive(const Jet1D& jet, Complex lambda, int N, double center) {
    check_lambda(lambda);
    check_order(N, jet.order(), "jet");

    // g holds the normalized Taylor coefficients of D^{lambda,(j)} a.
    std::vector<Complex> g(jet.coeffs().begin(), jet.coeffs().end());
    const Complex inv = 1.0 / lambda;
    OperatorSequence out{lambda, center, {}};
    out.values.reserve(static_cast<std::size_t>(N) + 1);
    for (int j = 0;; ++j) {
        out.values.push_back(g[0]);
        if (j == N) break;
        const double jd = j;
        for (std::size_t m = 0; m + 1 < g.size(); ++m) {
            g[m] = static_cast<double>(m + 1) * g[m + 1] * inv - jd * g[m];
        }
        g.pop_back();
    }
    return out;
}

OperatorSequence d_lambda_stirling(const Jet1D& jet, const StirlingTable& table, Complex lambda,
                                   int N, double center) {
    check_lambda(lambda);
    check_order(N, jet.order(), "jet");
    check_order(N, table.depth(), "stirling table");

    const auto fact = factorials(N);
    const auto inv = inverse_powers(lambda, N);
    OperatorSequence out{lambda, center, {jet[0]}};
    for (int j = 1; j <= N; ++j) {
        Complex v{};
        for (int m = 1; m <= j; ++m) {
            v += table.signed_double(j, m) * inv[static_cast<std::size_t>(m)] *
                 (fact[static_cast<std::size_t>(m)] * jet[m]);
        }
        out.values.push_back(v);
    }
    return out;
}

OperatorField d_lambda_nd(const JetND& jet, const StirlingTable& table, Complex lambda, int N,
                          std::vector<double> center) {
    check_lambda(lambda);
    check_order(N, jet.order(), "jet");
    check_order(N, table.depth(), "stirling table");

    const int n = jet.dims();
    const auto fact = factorials(N);
    const auto inv = inverse_powers(lambda, N);
    auto layout = MonomialLayout::get(n, N);

    std::vector<std::vector<double>> s(static_cast<std::size_t>(N) + 1);
    for (int a = 0; a <= N; ++a) {
        for (int b = 0; b <= a; ++b) s[static_cast<std::size_t>(a)].push_back(table.signed_double(a, b));
    }

    OperatorField out{lambda, std::move(center), layout, std::vector<Complex>(layout->size())};
    std::vector<int> m(static_cast<std::size_t>(n));
    for (std::size_t pos = 0; pos < layout->size(); ++pos) {
        const MultiIndex& gamma = layout->index(pos);
        // Axes with gamma_i = 0 take m_i = 0 (identity); others run 1..gamma_i.
        for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = gamma[i] == 0 ? 0 : 1;
        Complex total{};
        for (;;) {
            double weight = 1.0;
            int order = 0;
            for (int i = 0; i < n; ++i) {
                const int mi = m[static_cast<std::size_t>(i)];
                weight *= s[static_cast<std::size_t>(gamma[i])][static_cast<std::size_t>(mi)] *
                          fact[static_cast<std::size_t>(mi)];
                order += mi;
            }
            total += weight * inv[static_cast<std::size_t>(order)] * jet[MultiIndex(m)];

            int axis = n - 1;
            while (axis >= 0) {
                auto& mi = m[static_cast<std::size_t>(axis)];
                if (gamma[axis] > 0 && mi < gamma[axis]) {
                    ++mi;
                    break;
                }
                if (gamma[axis] > 0) mi = 1;
                --axis;
            }
            if (axis < 0) break;
        }
        out.values[pos] = total;
    }
    return out;
}

Complex d_lambda_at(const ExprAst& ast, Complex lambda, double x, int N) {
    const auto jet = lift(ast, x, N);
    return d_lambda_recursive(jet, lambda, N, x).values.back();
}

std::vector<Complex> d_lambda_nd_degree_at(const ExprAst& ast, const StirlingTable& table,
                                           Complex lambda, std::span<const double> y, int N) {
    const auto jet = lift_nd(ast, y, N);
    const auto field = d_lambda_nd(jet, table, lambda, N, {y.begin(), y.end()});
    const auto& layout = *field.layout;
    return {field.values.begin() + static_cast<std::ptrdiff_t>(layout.degree_begin(N)),
            field.values.end()};
}

const StirlingTable& default_stirling_table() {
    static const StirlingTable table(64);
    return table;
}

}  // namespace exptaylor
