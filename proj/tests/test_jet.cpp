#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "exptaylor/error.hpp"
#include "exptaylor/jet.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace exptaylor;
namespace et = exptaylor::testing;

namespace {
void expect_coeffs(const Jet1D& j, std::vector<Complex> expect, double tol) {
    ASSERT_EQ(j.order() + 1, static_cast<int>(expect.size()));
    for (int k = 0; k <= j.order(); ++k) {
        EXPECT_LE(std::abs(j[k] - expect[static_cast<std::size_t>(k)]), tol) << "k=" << k;
    }
}

double cos2pi(double x) { return std::cos(2 * std::numbers::pi * x); }
}  // namespace

TEST(Lift, Examples) {
    expect_coeffs(lift(parse("exp(x)", 1), 0, 3), {1, 1, 0.5, 1.0 / 6}, 1e-15);
    expect_coeffs(lift(parse("(1+x)*(1+x)", 1), 0, 2), {1, 2, 1}, 0);
    const double pi = std::numbers::pi;
    expect_coeffs(lift(parse("cos(2*pi*x)", 1), 0, 2), {1, 0, -2 * pi * pi}, 1e-12);
}

TEST(Lift, FiniteDifferenceOracleLowOrder) {
    const auto j = lift(parse("cos(2*pi*x)", 1), 0.1, 2);
    const double d1 = et::richardson_derivative(cos2pi, 0.1, 1);
    const double d2 = et::richardson_derivative(cos2pi, 0.1, 2);
    EXPECT_NEAR(j.derivative_value(1).real(), d1, 1e-6 * std::abs(d1));
    EXPECT_NEAR(j.derivative_value(2).real(), d2, 1e-6 * std::abs(d2));
}

TEST(Lift, ElementaryFunctionsAgainstCauchyOracle) {
    // Each supported function up to order 12, relative 1e-5 against a
    // contour-integral oracle built on eval_complex.
    const char* fns[] = {"sin(x)", "cos(x)", "tan(x)", "exp(x)", "log(x)", "sqrt(x)",
                         "sinh(x)", "cosh(x)", "x^3", "x^0.5", "1/x", "2^x", "x^x",
                         "cos(2*pi*x)", "sin(x)+x^3", "exp(2*x)"};
    const double x0 = 0.7, r = 0.3;
    for (const char* fn : fns) {
        const auto ast = parse(fn, 1);
        const auto jet = lift(ast, x0, 12);
        const auto ref = et::cauchy_coefficients(ast, x0, 12, r);
        const double scale = et::circle_max(ast, x0, r);
        for (int k = 0; k <= 12; ++k) {
            // Cauchy estimate: |c_k| <= M / r^k, the natural size at order k.
            const double size = scale / std::pow(r, k);
            EXPECT_LE(std::abs(jet[k] - ref[static_cast<std::size_t>(k)]), 1e-5 * size) << fn << " k=" << k;
        }
    }
}

TEST(Lift, DomainErrors) {
    EXPECT_THROW(lift(parse("log(x)", 1), 0, 3), DomainError);
    EXPECT_THROW(lift(parse("log(x)", 1), -1, 3), DomainError);
    EXPECT_THROW(lift(parse("sqrt(x)", 1), 0, 3), DomainError);
    EXPECT_THROW(lift(parse("1/x", 1), 0, 3), DomainError);
    EXPECT_THROW(lift(parse("x^-1", 1), 0, 3), DomainError);
    EXPECT_THROW(lift(parse("x", 1), 0, kMaxJetOrder + 1), ValidationError);
    EXPECT_NO_THROW(lift(parse("x^2", 1), 0, 3));
}

TEST(Derivative, Examples) {
    expect_coeffs(derivative(Jet1D({5, 3, 2})), {3, 4}, 0);
    expect_coeffs(derivative(lift(parse("exp(x)", 1), 0, 3)), {1, 1, 0.5}, 1e-15);
    EXPECT_THROW(derivative(Jet1D({7})), ValidationError);
}

TEST(JetProperty, ProductRule) {
    et::ExprGenerator gen(21);
    for (int i = 0; i < 100; ++i) {
        const auto f = gen.next(2), g = gen.next(2);
        const auto jf = lift(parse(f, 1), 0.2, 8);
        const auto jg = lift(parse(g, 1), 0.2, 8);
        const auto jfg = lift(parse("(" + f + ")*(" + g + ")", 1), 0.2, 8);
        const auto conv = series::mul(jf.coeffs(), jg.coeffs());
        for (int k = 0; k <= 8; ++k) {
            ASSERT_LE(std::abs(jfg[k] - conv[static_cast<std::size_t>(k)]),
                      1e-10 * std::max(1.0, std::abs(conv[static_cast<std::size_t>(k)])))
                << f << " * " << g << " k=" << k;
        }
    }
}

TEST(JetProperty, RandomExpressionsAgainstCauchyOracle) {
    et::ExprGenerator gen(22);
    for (int i = 0; i < 60; ++i) {
        const auto src = gen.next(3);
        const auto ast = parse(src, 1);
        const auto jet = lift(ast, 0.1, 10);
        const double r = 0.25;
        const auto ref = et::cauchy_coefficients(ast, 0.1, 10, r);
        const double scale = et::circle_max(ast, 0.1, r);
        for (int k = 0; k <= 10; ++k) {
            ASSERT_LE(std::abs(jet[k] - ref[static_cast<std::size_t>(k)]), 1e-6 * scale / std::pow(r, k))
                << src << " k=" << k;
        }
    }
}

TEST(JetProperty, KernelInverses) {
    const std::vector<Complex> a{1.5, 0.3, -0.2, 0.7, 0.1, -0.4};
    const auto l = series::log(a);
    const auto back = series::exp(l);
    const auto q = series::div(a, a);
    const auto s = series::sqrt(a);
    const auto ss = series::mul(s, s);
    for (std::size_t k = 0; k < a.size(); ++k) {
        EXPECT_NEAR(std::abs(back[k] - a[k]), 0.0, 1e-14);
        EXPECT_NEAR(std::abs(q[k] - (k == 0 ? 1.0 : 0.0)), 0.0, 1e-14);
        EXPECT_NEAR(std::abs(ss[k] - a[k]), 0.0, 1e-14);
    }
    std::vector<Complex> sn, cs;
    series::sin_cos(a, sn, cs);
    const auto one = series::mul(sn, sn);
    const auto two = series::mul(cs, cs);
    for (std::size_t k = 0; k < a.size(); ++k) {
        EXPECT_NEAR(std::abs(one[k] + two[k] - (k == 0 ? 1.0 : 0.0)), 0.0, 1e-14);
    }
}

TEST(JetND, VariableAndConstant) {
    const auto v = JetND::variable(1, 0.5, 2, 3);
    EXPECT_EQ(v[MultiIndex({0, 0})], Complex(0.5));
    EXPECT_EQ(v[MultiIndex({0, 1})], Complex(1.0));
    EXPECT_EQ(v[MultiIndex({1, 0})], Complex(0.0));
    EXPECT_EQ(v[MultiIndex({0, 5})], Complex(0.0));
    const auto c = JetND::constant(3.0, 3, 2);
    EXPECT_EQ(c[MultiIndex::zero(3)], Complex(3.0));
}

TEST(JetND, SeparableProductFactors) {
    const std::vector<double> p{0.1, -0.2};
    const auto nd = lift_nd(parse("cos(2*pi*x1)*exp(x2)", 2), p, 8);
    const auto a = lift(parse("cos(2*pi*x)", 1), 0.1, 8);
    const auto b = lift(parse("exp(x)", 1), -0.2, 8);
    for (const auto& g : multi_indices(2, 9)) {
        const Complex expect = a[g[0]] * b[g[1]];
        EXPECT_LE(std::abs(nd[g] - expect), 1e-12 * std::max(1.0, std::abs(expect))) << g.to_string();
    }
}

TEST(JetND, OneDimensionMatchesLift) {
    et::ExprGenerator gen(23);
    for (int i = 0; i < 40; ++i) {
        const auto src = gen.next(3);
        const std::vector<double> p{0.3};
        const auto nd = lift_nd(parse(src, 1), p, 10);
        const auto one = lift(parse(src, 1), 0.3, 10);
        for (int k = 0; k <= 10; ++k) {
            ASSERT_LE(std::abs(nd[MultiIndex({k})] - one[k]), 1e-11 * std::max(1.0, std::abs(one[k]))) << src;
        }
    }
}

TEST(JetND, MixedPartialAgainstOracle) {
    // d^2/dx1 dx2 of sin(x1 x2) at (a,b) = cos(ab) - ab sin(ab)
    const std::vector<double> p{0.4, 0.7};
    const auto nd = lift_nd(parse("sin(x1*x2)", 2), p, 4);
    const double ab = 0.28;
    EXPECT_NEAR(nd[MultiIndex({1, 1})].real(), std::cos(ab) - ab * std::sin(ab), 1e-14);
    EXPECT_NEAR(nd[MultiIndex({2, 0})].real(), -0.49 * std::sin(ab) / 2, 1e-14);
}
