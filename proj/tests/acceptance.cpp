// Acceptance checks: one PASS/FAIL line per criterion.
// Usage: acceptance <path-to-exptaylor-cli>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "exptaylor/expr.hpp"
#include "exptaylor/identities.hpp"
#include "exptaylor/jet.hpp"
#include "exptaylor/operator.hpp"
#include "exptaylor/series1d.hpp"
#include "exptaylor/seriesnd.hpp"
#include "exptaylor/stirling.hpp"
#include "oracles.hpp"

using namespace exptaylor;
namespace et = exptaylor::testing;

namespace {

const double kPi = std::numbers::pi;
const Complex kTwoPiI(0.0, 2.0 * kPi);

struct Check {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << v;
    return s.str();
}

Check criterion1() {
    Check c;
    const std::vector<std::pair<const char*, Complex>> cases{
        {"cos(2*pi*x)", kTwoPiI}, {"x", kTwoPiI},       {"x^2", kTwoPiI},
        {"x^2", std::log(2.0)},   {"exp(x)", 1.0},      {"exp(2*x)", 1.0},
        {"sin(x)+x^3", kTwoPiI},  {"sin(x)+x^3", 1.0},
    };
    double worst = 0.0;
    for (const auto& [fn, lambda] : cases) {
        for (int N = 1; N <= 12; ++N) {
            const auto jet = lift(parse(fn, 1), 0.0, N);
            const auto a = d_lambda_recursive(jet, lambda, N);
            const auto b = d_lambda_stirling(jet, default_stirling_table(), lambda, N);
            for (int j = 0; j <= N; ++j) {
                const double diff = std::abs(a[j] - b[j]);
                const double scale = std::max(std::abs(a[j]), std::abs(b[j]));
                const double tol = std::max(1e-9 * scale, 1e-12);
                worst = std::max(worst, diff / tol);
                c.require(diff <= tol, std::string(fn) + " N=" + std::to_string(N) + " j=" + std::to_string(j));
            }
        }
    }
    if (c.ok) c.detail = "worst diff/tolerance " + fmt(worst);
    return c;
}

Check criterion2() {
    Check c;
    const auto e = expand_1d(parse("cos(2*pi*x)", 1), kTwoPiI, 0, 8);
    double worst = 0.0;
    for (int j = 0; j < 8; ++j) {
        const double expect = j == 0 ? 1.0 : j == 1 ? 0.0 : (j % 2 ? -0.5 : 0.5);
        const double err = std::abs(e.coeffs[static_cast<std::size_t>(j)] - expect);
        worst = std::max(worst, err);
        c.require(err <= 1e-10, "c_" + std::to_string(j));
    }
    if (c.ok) c.detail = "max error " + fmt(worst);
    return c;
}

struct SweepCase {
    const char* fn;
    Complex lambda;
    bool periodic;
};

const std::vector<SweepCase>& sweep_cases() {
    static const std::vector<SweepCase> cases{
        {"cos(2*pi*x)", kTwoPiI, true}, {"x", kTwoPiI, false},       {"x^2", std::log(2.0), false},
        {"exp(x)", 1.0, false},         {"exp(2*x)", 1.0, false},    {"sin(x)+x^3", kTwoPiI, false},
    };
    return cases;
}

void for_each_sweep(const std::function<void(const SweepCase&, const ExprAst&, double, int)>& f) {
    for (const auto& sc : sweep_cases()) {
        const auto ast = parse(sc.fn, 1);
        std::vector<double> xs{-0.1, -0.05, 0.05, 0.1};
        if (!sc.periodic) xs.push_back(0.3);
        for (double x : xs) {
            for (int N = 1; N <= 10; ++N) f(sc, ast, x, N);
        }
    }
}

Check criterion3() {
    Check c;
    double worst = 0.0;
    for_each_sweep([&](const SweepCase& sc, const ExprAst& ast, double x, int N) {
        const auto e = expand_1d(ast, sc.lambda, 0, N);
        const Complex r = remainder_integral(ast, sc.lambda, 0, x, N, 64);
        const double err = std::abs(eval_series(e, x) + r - eval_complex(ast, x));
        worst = std::max(worst, err);
        c.require(err <= 1e-9, std::string(sc.fn) + " x=" + std::to_string(x) + " N=" + std::to_string(N));
    });
    if (c.ok) c.detail = "max reconstruction error " + fmt(worst);
    return c;
}

Check criterion4() {
    Check c;
    double worst = 0.0;
    for_each_sweep([&](const SweepCase& sc, const ExprAst& ast, double x, int N) {
        const auto est = remainder_bound(ast, sc.lambda, 0, x, N, 513, 64);
        const double r = std::abs(est.integral_value);
        if (est.bound_tight > 0) worst = std::max(worst, r / est.bound_tight);
        c.require(r <= 1.01 * est.bound_tight && est.bound_tight <= 1.02 * est.bound_loose,
                  std::string(sc.fn) + " x=" + std::to_string(x) + " N=" + std::to_string(N));
    });
    if (c.ok) c.detail = "max |R|/tight " + fmt(worst);
    return c;
}

Check criterion5() {
    Check c;
    const auto rep = radius_estimate(parse("cos(2*pi*x)", 1), kTwoPiI, 0, 64, 8);
    c.require(rep.r_estimate >= 0.95 && rep.r_estimate <= 1.05, "r_estimate " + fmt(rep.r_estimate));
    c.require(rep.has_region && std::abs(rep.x_region_halfwidth - 1.0 / 6) <= 0.01,
              "region " + fmt(rep.x_region_halfwidth));
    if (c.ok) c.detail = "r=" + fmt(rep.r_estimate) + " region=" + fmt(rep.x_region_halfwidth);
    return c;
}

Check criterion6() {
    Check c;
    const double l2 = std::log(2.0);
    const auto check = [&](const IdentityResult& r, double target, double tol, const std::string& name) {
        c.require(std::abs(r.computed - target) <= tol, name + " error " + fmt(std::abs(r.computed - target)));
    };
    check(log_series(2, 60), l2, 1e-12, "log_series(2,60)");
    check(log_series(5, 200), std::log(5.0), 1e-10, "log_series(5,200)");
    check(stirling_log2_series(2, true, 60), l2 * l2 / 2, 1e-10, "stirling weighted");
    check(stirling_log2_series(2, false, 100000), l2 * l2 / 2, 1e-4, "stirling unweighted");
    check(cosine_series(0.1, 60), std::cos(0.2 * kPi), 1e-10, "cosine_series");
    check(linear_series(0.1, 80), 0.1, 1e-8, "linear_series");
    if (c.ok) c.detail = "6 identities within tolerance";
    return c;
}

Check criterion7() {
    Check c;
    const auto ast = parse("exp(x)", 1);
    const auto e = expand_1d(ast, 1.0, 0, 12);
    for (int j = 2; j < 12; ++j) {
        c.require(std::abs(e.coeffs[static_cast<std::size_t>(j)]) <= 1e-13, "c_" + std::to_string(j));
    }
    const auto e2 = expand_1d(ast, 1.0, 0, 2);
    double worst = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double x = -1.0 + i / 100.0;
        const double err = std::abs(eval_series(e2, x) - std::exp(x));
        worst = std::max(worst, err);
        c.require(err <= 1e-12, "x=" + std::to_string(x));
    }
    if (c.ok) c.detail = "max error " + fmt(worst);
    return c;
}

Check criterion8() {
    Check c;
    const auto ast = parse("cos(2*pi*x1)*cos(2*pi*x2)", 2);
    const std::vector<double> center{0.0, 0.0}, x{0.05, 0.05};
    const auto e = expand_nd(ast, 2, kTwoPiI, center, 10);
    const auto one = expand_1d(parse("cos(2*pi*x)", 1), kTwoPiI, 0, 10);
    for (const auto& g : multi_indices(2, 10)) {
        const Complex expect = one.coeffs[static_cast<std::size_t>(g[0])] * one.coeffs[static_cast<std::size_t>(g[1])];
        const double err = std::abs(e[g] - expect);
        c.require(expect == 0.0 ? err <= 1e-12 : err <= 1e-9 * std::abs(expect), "factor " + g.to_string());
    }
    const auto e8 = expand_nd(ast, 2, kTwoPiI, center, 8);
    const double err8 = std::abs(eval_complex(ast, std::vector<Complex>{x[0], x[1]}) - eval_nd(e8, x));
    const double bound8 = remainder_bound_nd(ast, 2, kTwoPiI, center, x, 8);
    c.require(err8 <= 1.02 * bound8, "N=8 error " + fmt(err8) + " > bound " + fmt(bound8));

    NdConvergenceOptions opt;
    opt.alpha = epsilon_sup(kTwoPiI, 0.05);
    opt.point = x;
    const auto rep = convergence_check_nd(ast, 2, kTwoPiI, center, 1.0, 0.05, 12, opt);
    double max_ratio = 0.0;
    for (int N = 3; N <= 12; ++N) {
        max_ratio = std::max(max_ratio, rep.measured[static_cast<std::size_t>(N - 1)] /
                                            rep.measured[static_cast<std::size_t>(N - 2)]);
    }
    c.require(max_ratio <= 0.95, "decay ratio " + fmt(max_ratio));
    if (c.ok) {
        c.detail = "N=8 error " + fmt(err8) + " <= bound " + fmt(bound8) + ", max step ratio " + fmt(max_ratio);
    }
    return c;
}

Check criterion9() {
    Check c;
    StirlingTable t(64);
    BigInt fact = 1;
    for (int n = 1; n <= 64; ++n) {
        fact *= n;
        BigInt signed_sum = 0, abs_sum = 0;
        for (int k = 1; k <= n; ++k) {
            c.require(t.signed_value(n, k) == t.signed_value(n - 1, k - 1) - (n - 1) * t.signed_value(n - 1, k),
                      "recurrence n=" + std::to_string(n));
            signed_sum += t.signed_value(n, k);
            abs_sum += t.unsigned_value(n, k);
        }
        if (n >= 2) c.require(signed_sum == 0, "signed row sum n=" + std::to_string(n));
        c.require(abs_sum == fact, "absolute row sum n=" + std::to_string(n));
    }
    const auto rows = build_ratio_rows(8, 64);
    double worst = 0.0;
    for (const auto& row : rows) {
        double f = 1.0;
        for (int j = 1; j <= 64; ++j) {
            f *= j;
            const double exact = static_cast<double>(t.unsigned_value(j, row.k)) / f;
            if (exact == 0.0) {
                c.require(row[static_cast<std::size_t>(j)] == 0.0, "ratio zero");
                continue;
            }
            const double rel = std::abs(row[static_cast<std::size_t>(j)] / exact - 1.0);
            worst = std::max(worst, rel);
            c.require(rel <= 1e-12, "ratio k=" + std::to_string(row.k) + " j=" + std::to_string(j));
        }
    }
    if (c.ok) c.detail = "max ratio relative error " + fmt(worst);
    return c;
}

struct Run {
    int code = -1;
    std::string out;
};

std::string quote(const std::string& s) {
    std::string q = "'";
    for (char ch : s) q += ch == '\'' ? std::string("'\\''") : std::string(1, ch);
    return q + "'";
}

Run run_cli(const std::string& exe, const std::vector<std::string>& args) {
    std::string cmd = quote(exe);
    for (const auto& a : args) cmd += " " + quote(a);
    cmd += " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

Check criterion10(const std::string& exe) {
    Check c;
    const std::string lam = "0+6.283185307179586i";
    struct Invocation {
        std::vector<std::string> args;
        int expect;
    };
    const std::vector<Invocation> invocations{
        {{"expand", "--fn", "cos(2*pi*x)", "--lambda", lam, "--x0", "0", "--order", "5"}, 0},
        {{"expand", "--fn", "x", "--lambda", lam, "--x0", "0", "--order", "3"}, 0},
        {{"expand", "--order", "3"}, 1},
        {{"eval", "--fn", "exp(x)", "--lambda", "1+0i", "--x0", "0", "--x", "0.3", "--order", "5", "--check"}, 0},
        {{"eval", "--fn", "log(x)", "--lambda", "1", "--x0", "1", "--x", "-0.5", "--order", "3"}, 2},
        {{"sweep", "--fn", "cos(2*pi*x)", "--x", "0.1", "--n-range", "2:30"}, 0},
        {{"sweep", "--fn", "cos(2*pi*x)", "--order", "20", "--x-range", "-0.15:0.15:31"}, 0},
        {{"radius", "--fn", "cos(2*pi*x)", "--lambda", lam, "--x0", "0"}, 0},
        {{"growth", "--fn", "cos(2*pi*x)", "--period", "1"}, 0},
        {{"nd", "--fn", "x1*x2", "--dims", "2", "--order", "4", "--x0", "0,0", "--x", "0.05,0.05"}, 0},
        {{"identities", "--suite", "all"}, 0},
        {{"identities", "--tol", "log_series=1e-30"}, 3},
    };
    std::array<bool, 4> seen{};
    for (const auto& inv : invocations) {
        const Run a = run_cli(exe, inv.args), b = run_cli(exe, inv.args);
        const std::string name = inv.args.front();
        c.require(a.code == inv.expect, name + " exit " + std::to_string(a.code));
        c.require(a.code == b.code && a.out == b.out, name + " output differs between runs");
        c.require(inv.expect != 0 || !a.out.empty(), name + " empty output");
        if (a.code >= 0 && a.code <= 3) seen[static_cast<std::size_t>(a.code)] = true;
    }
    c.require(seen[0] && seen[1] && seen[2] && seen[3], "not every exit code exercised");
    if (c.ok) c.detail = std::to_string(invocations.size()) + " invocations deterministic, exit codes 0-3 seen";
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <exptaylor-cli>\n";
        return 2;
    }
    const std::string exe = argv[1];
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
        {"operator path equivalence", criterion1},
        {"cosine expansion coefficients", criterion2},
        {"reconstruction identity", criterion3},
        {"remainder bound validity", criterion4},
        {"ratio-test radius", criterion5},
        {"series identities", criterion6},
        {"exponential termination", criterion7},
        {"multivariate expansion", criterion8},
        {"stirling tables", criterion9},
        {"cli determinism and exit codes", [&] { return criterion10(exe); }},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            c = criteria[i].second();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("exception: ") + e.what();
        }
        failures += c.ok ? 0 : 1;
        std::cout << (c.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << c.detail
                  << "\n";
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
