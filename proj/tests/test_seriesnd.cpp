#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <vector>

#include "exptaylor/error.hpp"
#include "exptaylor/multi_index.hpp"
#include "exptaylor/series1d.hpp"
#include "exptaylor/seriesnd.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace exptaylor;
namespace et = exptaylor::testing;

namespace {
const double kPi = std::numbers::pi;
const Complex kTwoPiI(0.0, 2.0 * kPi);

long long binomial(int n, int k) {
    long long b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

// Brute force: every tuple in [0, N)^n with sum < N.
std::vector<MultiIndex> brute_force(int n, int N) {
    std::vector<MultiIndex> out;
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    while (true) {
        int s = 0;
        for (int v : c) s += v;
        if (s < N) out.emplace_back(c);
        int i = 0;
        while (i < n && ++c[static_cast<std::size_t>(i)] == N) c[static_cast<std::size_t>(i++)] = 0;
        if (i == n) break;
    }
    return out;
}
}  // namespace

TEST(MultiIndices, Examples) {
    const auto a = multi_indices(2, 2);
    ASSERT_EQ(a.size(), 3u);
    EXPECT_EQ(a[0], MultiIndex({0, 0}));
    EXPECT_EQ(a[1], MultiIndex({1, 0}));
    EXPECT_EQ(a[2], MultiIndex({0, 1}));
    EXPECT_EQ(multi_indices(2, 3).size(), 6u);
    EXPECT_THROW(multi_indices(2, 0), ValidationError);
    const auto b = multi_indices(1, 4);
    ASSERT_EQ(b.size(), 4u);
    for (int k = 0; k < 4; ++k) EXPECT_EQ(b[static_cast<std::size_t>(k)], MultiIndex({k}));
}

TEST(MultiIndices, BruteForceAndCount) {
    for (int n = 1; n <= 4; ++n) {
        for (int N = 1; N <= 7; ++N) {
            const auto got = multi_indices(n, N);
            EXPECT_EQ(static_cast<long long>(got.size()), binomial(N - 1 + n, n)) << n << " " << N;
            auto expect = brute_force(n, N);
            std::sort(expect.begin(), expect.end());
            EXPECT_EQ(got, expect);
            EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
            EXPECT_EQ(std::set<MultiIndex>(got.begin(), got.end()).size(), got.size());
        }
    }
}

TEST(MultiIndices, OrderingAndFactorial) {
    EXPECT_LT(MultiIndex({1, 0}), MultiIndex({0, 1}));
    EXPECT_LT(MultiIndex({0, 1}), MultiIndex({2, 0}));
    EXPECT_EQ(MultiIndex({3, 2}).factorial(), 12.0);
    EXPECT_EQ(MultiIndex({3, 2}).order(), 5);
    EXPECT_EQ(MultiIndex({1, 0, 2}).to_string(), "(1,0,2)");
}

TEST(Layout, PositionsAndSums) {
    const auto L = MonomialLayout::get(3, 5);
    for (std::size_t p = 0; p < L->size(); ++p) {
        EXPECT_EQ(L->position(L->index(p)), p);
        for (std::size_t q = 0; q < L->size(); ++q) {
            std::vector<int> s(3);
            for (int i = 0; i < 3; ++i) s[static_cast<std::size_t>(i)] = L->index(p)[i] + L->index(q)[i];
            const MultiIndex sum(s);
            EXPECT_EQ(L->sum_position(p, q), sum.order() > 5 ? MonomialLayout::npos : L->position(sum));
        }
    }
    EXPECT_EQ(L->position(MultiIndex({6, 0, 0})), MonomialLayout::npos);
    EXPECT_EQ(L->degree_begin(6), L->size());
}

TEST(ExpandND, Constant) {
    const std::vector<double> c{0.2, 0.3};
    const auto e = expand_nd(parse("3", 2), 2, kTwoPiI, c, 6);
    for (const auto& g : e.layout->indices()) EXPECT_EQ(e[g], g.order() == 0 ? Complex(3.0) : Complex(0.0));
}

TEST(ExpandND, ProductCosineSeparates) {
    const std::vector<double> c{0.0, 0.0};
    const auto e = expand_nd(parse("cos(2*pi*x1)*cos(2*pi*x2)", 2), 2, kTwoPiI, c, 10);
    const auto one = expand_1d(parse("cos(2*pi*x)", 1), kTwoPiI, 0, 10);
    for (const auto& g : multi_indices(2, 10)) {
        const Complex expect = one.coeffs[static_cast<std::size_t>(g[0])] * one.coeffs[static_cast<std::size_t>(g[1])];
        EXPECT_LE(std::abs(e[g] - expect), 1e-9 * std::max(std::abs(expect), 1e-300) + 1e-15) << g.to_string();
    }
}

TEST(ExpandND, ProductOfLinear) {
    const std::vector<double> c{0.0, 0.0};
    const auto e = expand_nd(parse("x1*x2", 2), 2, kTwoPiI, c, 4);
    EXPECT_LE(std::abs(e[MultiIndex({1, 1})] - Complex(-1.0 / (4 * kPi * kPi))), 1e-17);
}

TEST(ExpandND, Validation) {
    const std::vector<double> c{0.0, 0.0};
    const auto ast = parse("x1*x2", 2);
    EXPECT_THROW(expand_nd(ast, 3, kTwoPiI, c, 4), ValidationError);
    EXPECT_THROW(expand_nd(ast, 2, kTwoPiI, c, kMaxNdOrder + 1), ValidationError);
    EXPECT_THROW(expand_nd(ast, 2, 0.0, c, 4), ValidationError);
    const std::vector<double> c5(5, 0.0);
    EXPECT_THROW(expand_nd(parse("x1", 5), 5, kTwoPiI, c5, 2), ValidationError);
}

TEST(EvalND, AtCenterAndProductCosine) {
    const std::vector<double> c{0.0, 0.0};
    const auto ast = parse("cos(2*pi*x1)*cos(2*pi*x2)", 2);
    const auto e = expand_nd(ast, 2, kTwoPiI, c, 16);
    EXPECT_EQ(eval_nd(e, c), e.coeffs[0]);
    const std::vector<double> x{0.05, 0.05};
    const double truth = std::pow(std::cos(0.1 * kPi), 2);
    EXPECT_LE(std::abs(eval_nd(e, x) - truth), 1e-5);
}

TEST(EvalND, OneDimensionMatchesSeries1D) {
    et::ExprGenerator gen(51);
    for (int i = 0; i < 30; ++i) {
        const auto src = gen.next(2);
        const auto ast = parse(src, 1);
        const std::vector<double> c{0.1};
        const int N = 2 + i % 10;
        const auto nd = expand_nd(ast, 1, kTwoPiI, c, N);
        const auto one = expand_1d(ast, kTwoPiI, 0.1, N);
        for (int k = 0; k < N; ++k) {
            ASSERT_LE(std::abs(nd[MultiIndex({k})] - one.coeffs[static_cast<std::size_t>(k)]),
                      1e-12 * std::max(1.0, std::abs(one.coeffs[static_cast<std::size_t>(k)])))
                << src;
        }
        for (double x : {-0.05, 0.12, 0.25}) {
            const std::vector<double> xv{x};
            const Complex a = eval_nd(nd, xv), b = eval_series(one, x);
            ASSERT_LE(std::abs(a - b), 1e-12 * std::max(1.0, std::abs(b))) << src;
        }
    }
}

TEST(RemainderND, OneDimensionMatchesLooseBound) {
    // n = 1: the bound reduces to |lambda| N/N! sup|D^(N)a| eps^{N-1} r, the
    // loose 1-D bound with the same sup.
    const auto ast = parse("cos(2*pi*x)", 1);
    for (int N = 1; N <= 8; ++N) {
        const std::vector<double> c{0.0}, x{0.1};
        const double nd = remainder_bound_nd(ast, 1, kTwoPiI, c, x, N, 513);
        const double one = remainder_bound(ast, kTwoPiI, 0.0, 0.1, N, 513).bound_loose;
        EXPECT_LE(std::abs(nd - one), 1e-12 * one) << N;
    }
}

TEST(RemainderND, Trivial) {
    const std::vector<double> c{0.1, 0.2}, x{0.3, -0.1};
    EXPECT_EQ(remainder_bound_nd(parse("cos(x1)*x2", 2), 2, kTwoPiI, c, c, 4), 0.0);
    EXPECT_EQ(remainder_bound_nd(parse("4", 2), 2, kTwoPiI, c, x, 3), 0.0);
}

TEST(RemainderND, BoundHoldsForProductCosine) {
    const auto ast = parse("cos(2*pi*x1)*cos(2*pi*x2)", 2);
    const std::vector<double> c{0.0, 0.0};
    for (const std::vector<double>& x : {std::vector<double>{0.05, 0.05}, std::vector<double>{-0.04, 0.02},
                                          std::vector<double>{0.1, -0.08}}) {
        for (int N = 1; N <= 10; ++N) {
            const auto e = expand_nd(ast, 2, kTwoPiI, c, N);
            const double err = std::abs(eval_complex(ast, std::vector<Complex>{x[0], x[1]}) - eval_nd(e, x));
            EXPECT_LE(err, 1.02 * remainder_bound_nd(ast, 2, kTwoPiI, c, x, N)) << N;
        }
    }
}

TEST(RemainderND, BoundHoldsForRandomExpressions) {
    et::ExprGenerator gen(52, 2);
    for (int i = 0; i < 15; ++i) {
        const auto src = gen.next(2);
        const auto ast = parse(src, 2);
        const std::vector<double> c{0.1, -0.1}, x{0.15, -0.06};
        const int N = 2 + i % 5;
        const auto e = expand_nd(ast, 2, kTwoPiI, c, N);
        const double err = std::abs(eval_complex(ast, std::vector<Complex>{x[0], x[1]}) - eval_nd(e, x));
        EXPECT_LE(err, 1.02 * remainder_bound_nd(ast, 2, kTwoPiI, c, x, N, 17)) << src;
    }
}

TEST(RemainderND, FourDimensionalSamplingIsSeeded) {
    const auto ast = parse("cos(x1)*sin(x2)+x3*x4", 4);
    const std::vector<double> c{0, 0, 0, 0}, x{0.05, 0.05, -0.05, 0.02};
    const double a = remainder_bound_nd(ast, 4, kTwoPiI, c, x, 3, 5, 7);
    const double b = remainder_bound_nd(ast, 4, kTwoPiI, c, x, 3, 5, 7);
    EXPECT_EQ(a, b);
    const auto e = expand_nd(ast, 4, kTwoPiI, c, 3);
    std::vector<Complex> xc(x.begin(), x.end());
    EXPECT_LE(std::abs(eval_complex(ast, xc) - eval_nd(e, x)), 1.02 * a);
}

TEST(Box, Sampling) {
    const std::vector<double> a{0.0, 1.0}, b{1.0, 1.0};
    const auto box = BoxDomain::spanning(a, b);
    const auto pts = box.sample(5, 0);
    EXPECT_EQ(pts.size(), 5u);  // zero-width second axis
    const std::vector<double> c{0, 0, 0, 0};
    const auto q = BoxDomain::centered(c, 0.1).sample(4, 9);
    EXPECT_EQ(q, BoxDomain::centered(c, 0.1).sample(4, 9));
    for (const auto& p : q) for (double v : p) EXPECT_LE(std::abs(v), 0.1);
    EXPECT_THROW(box.sample(2, 0), ValidationError);
}

TEST(ConvergenceND, Constant) {
    const std::vector<double> c{0.0, 0.0};
    NdConvergenceOptions opt;
    opt.point = std::vector<double>{0.05, 0.05};
    const auto rep = convergence_check_nd(parse("2", 2), 2, kTwoPiI, c, 1e-3, 0.1, 6, opt);
    EXPECT_TRUE(rep.envelope_holds);
    for (double m : rep.measured) EXPECT_EQ(m, 0.0);
}

TEST(ConvergenceND, ProductCosine) {
    const std::vector<double> c{0.0, 0.0};
    NdConvergenceOptions opt;
    opt.alpha = epsilon_sup(kTwoPiI, 0.05);
    opt.point = std::vector<double>{0.05, 0.05};
    const auto rep = convergence_check_nd(parse("cos(2*pi*x1)*cos(2*pi*x2)", 2), 2, kTwoPiI, c, 1.0, 0.1,
                                          12, opt);
    EXPECT_TRUE(rep.envelope_holds);
    EXPECT_NEAR(rep.delta, 0.05, 1e-12);
    ASSERT_EQ(rep.measured.size(), 12u);
    EXPECT_LE(rep.decay_ratio, opt.alpha + 0.05);
    EXPECT_LE(rep.max_step_ratio, 0.95);
    // Envelope with A too small fails.
    const auto bad = convergence_check_nd(parse("cos(2*pi*x1)*cos(2*pi*x2)", 2), 2, kTwoPiI, c, 0.1, 0.1, 4);
    EXPECT_FALSE(bad.envelope_holds);
}
