#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "exptaylor/error.hpp"
#include "exptaylor/identities.hpp"
#include "exptaylor/series1d.hpp"
#include "exptaylor/seriesnd.hpp"
#include "exptaylor/stirling.hpp"

namespace exptaylor::cli {

namespace {

using json = nlohmann::ordered_json;

struct Config {
    std::string fn;
    int dims = 1;
    std::string lambda_text;
    std::string x0_text = "0";
    std::string x_text;
    int order = 8;
    int grid = kDefaultGrid;
    int box_grid = kDefaultBoxGrid;
    int quad_nodes = kDefaultQuadNodes;
    int j_max = 64;
    int window = 8;
    std::string format;
    std::string out_path;
    std::uint64_t seed = 0;
    bool check = false;
    double check_tol = 1e-9;
    std::string x_range;
    std::string n_range;
    double period = 1.0;
    int n_max = 16;
    std::string suite = "all";
    std::vector<std::string> tol_overrides;
    int stirling_row = 0;
};

double parse_double(std::string_view s, const char* what) {
    double v = 0.0;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    if (b != e && *b == '+') ++b;
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (b == e || ec != std::errc() || ptr != e) {
        throw ValidationError(std::string("invalid ") + what + ": '" + std::string(s) + "'");
    }
    return v;
}

std::string num(double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of negative zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double clean(double v) { return v == 0.0 ? 0.0 : v; }

json cplx(Complex z) { return json{{"re", clean(z.real())}, {"im", clean(z.imag())}}; }

std::string text(Complex z) {
    return num(z.real()) + (std::signbit(z.imag()) && z.imag() != 0.0 ? " - " : " + ") +
           num(std::fabs(z.imag())) + "i";
}

// JSON has no infinity; encode it as null.
json real_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

const std::string kTwoPiI = "0+6.283185307179586i";

Complex lambda_of(const Config& cfg) {
    return parse_complex(cfg.lambda_text.empty() ? kTwoPiI : cfg.lambda_text);
}

double scalar(const std::string& text, const char* what) {
    const auto v = parse_vector(text);
    if (v.size() != 1) throw ValidationError(std::string(what) + " must be a single number");
    return v[0];
}

std::vector<double> vector_of(const std::string& text, int dims, const char* what) {
    auto v = parse_vector(text);
    if (v.size() != static_cast<std::size_t>(dims)) {
        throw ValidationError(std::string(what) + " has " + std::to_string(v.size()) +
                              " coordinates, --dims is " + std::to_string(dims));
    }
    return v;
}

ExprAst function_of(const Config& cfg) {
    if (cfg.fn.empty()) throw ValidationError("--fn is required");
    return parse(cfg.fn, cfg.dims);
}

std::string format_of(const Config& cfg, const std::string& fallback) {
    const std::string f = cfg.format.empty() ? fallback : cfg.format;
    if (f != "json" && f != "csv" && f != "text") {
        throw ValidationError("--format must be json, csv or text");
    }
    return f;
}

void require_one_dim(const Config& cfg, const char* cmd) {
    if (cfg.dims != 1) {
        throw ValidationError(std::string(cmd) + " works on one variable; use `nd` for --dims > 1");
    }
}

int cmd_expand(const Config& cfg, std::ostream& out) {
    require_one_dim(cfg, "expand");
    const auto ast = function_of(cfg);
    const Complex lambda = lambda_of(cfg);
    const double x0 = scalar(cfg.x0_text, "--x0");
    const auto e = expand_1d(ast, lambda, x0, cfg.order);

    const auto fmt = format_of(cfg, "json");
    if (fmt == "json") {
        json doc{{"lambda", cplx(lambda)}, {"x0", x0}, {"order", cfg.order}};
        auto arr = json::array();
        for (int j = 0; j < e.order(); ++j) {
            arr.push_back({{"index", j}, {"re", clean(e.coeffs[j].real())}, {"im", clean(e.coeffs[j].imag())}});
        }
        doc["coeffs"] = std::move(arr);
        out << doc.dump(2) << '\n';
    } else if (fmt == "csv") {
        out << "index,re,im\n";
        for (int j = 0; j < e.order(); ++j) {
            out << j << ',' << num(e.coeffs[j].real()) << ',' << num(e.coeffs[j].imag()) << '\n';
        }
    } else {
        out << "lambda = " << text(lambda) << ", x0 = "
            << num(x0) << ", order = " << cfg.order << '\n';
        for (int j = 0; j < e.order(); ++j) {
            out << "c_" << j << " = " << text(e.coeffs[j]) << '\n';
        }
    }
    return kOk;
}

int cmd_eval(const Config& cfg, std::ostream& out) {
    require_one_dim(cfg, "eval");
    if (cfg.x_text.empty()) throw ValidationError("eval needs --x");
    const auto ast = function_of(cfg);
    const Complex lambda = lambda_of(cfg);
    const double x0 = scalar(cfg.x0_text, "--x0");
    const double x = scalar(cfg.x_text, "--x");

    const auto e = expand_1d(ast, lambda, x0, cfg.order);
    const auto est = remainder_bound(ast, lambda, x0, x, cfg.order, cfg.grid, cfg.quad_nodes);
    const Complex approx = eval_series(e, x);
    const Complex truth = eval_complex(ast, Complex(x, 0.0));
    const double abs_error = std::abs(truth - approx);
    const double reconstruction = std::abs(approx + est.integral_value - truth);
    const bool check_ok = reconstruction <= cfg.check_tol;

    const auto fmt = format_of(cfg, "json");
    if (fmt == "json") {
        json doc{{"lambda", cplx(lambda)},
                 {"x0", x0},
                 {"x", x},
                 {"order", cfg.order},
                 {"approx", cplx(approx)},
                 {"true", cplx(truth)},
                 {"abs_error", abs_error},
                 {"remainder_integral", cplx(est.integral_value)},
                 {"bound_tight", est.bound_tight},
                 {"bound_loose", est.bound_loose},
                 {"reconstruction_error", reconstruction}};
        if (cfg.check) doc["check_passed"] = check_ok;
        out << doc.dump(2) << '\n';
    } else if (fmt == "csv") {
        out << "x,order,approx_re,approx_im,true_re,true_im,abs_error,remainder_re,remainder_im,"
               "bound_tight,bound_loose,reconstruction_error\n";
        out << num(x) << ',' << cfg.order << ',' << num(approx.real()) << ','
            << num(approx.imag()) << ',' << num(truth.real()) << ',' << num(truth.imag()) << ','
            << num(abs_error) << ',' << num(est.integral_value.real()) << ','
            << num(est.integral_value.imag()) << ',' << num(est.bound_tight) << ','
            << num(est.bound_loose) << ',' << num(reconstruction) << '\n';
    } else {
        out << "approx               = " << text(approx) << '\n'
            << "true                 = " << text(truth) << '\n'
            << "abs_error            = " << num(abs_error) << '\n'
            << "remainder_integral   = " << text(est.integral_value) << '\n'
            << "bound_tight          = " << num(est.bound_tight) << '\n'
            << "bound_loose          = " << num(est.bound_loose) << '\n'
            << "reconstruction_error = " << num(reconstruction) << '\n';
        if (cfg.check) out << "check                = " << (check_ok ? "passed" : "FAILED") << '\n';
    }
    return cfg.check && !check_ok ? kCheckFailed : kOk;
}

struct SweepRow {
    double key;
    double abs_error;
    double bound_tight;
    double bound_loose;
};

int cmd_sweep(const Config& cfg, std::ostream& out) {
    require_one_dim(cfg, "sweep");
    const auto ast = function_of(cfg);
    const Complex lambda = lambda_of(cfg);
    const double x0 = scalar(cfg.x0_text, "--x0");
    if (cfg.x_range.empty() == cfg.n_range.empty()) {
        throw ValidationError("sweep needs exactly one of --x-range lo:hi:steps or --n-range lo:hi");
    }

    std::vector<SweepRow> rows;
    std::string key_name;
    if (!cfg.x_range.empty()) {
        key_name = "x";
        std::vector<std::string> parts;
        std::stringstream ss(cfg.x_range);
        for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
        if (parts.size() != 3) throw ValidationError("--x-range must be lo:hi:steps");
        const double lo = parse_double(parts[0], "range start");
        const double hi = parse_double(parts[1], "range end");
        const double steps_d = parse_double(parts[2], "step count");
        if (steps_d < 1 || steps_d != std::floor(steps_d) || steps_d > 100000) {
            throw ValidationError("step count must be an integer in [1, 100000]");
        }
        const int steps = static_cast<int>(steps_d);
        const auto e = expand_1d(ast, lambda, x0, cfg.order);
        for (int i = 0; i < steps; ++i) {
            const double x = steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
            const auto est = remainder_bound(ast, lambda, x0, x, cfg.order, cfg.grid, cfg.quad_nodes);
            const double err = std::abs(eval_complex(ast, Complex(x, 0.0)) - eval_series(e, x));
            rows.push_back({x, err, est.bound_tight, est.bound_loose});
        }
    } else {
        key_name = "N";
        if (cfg.x_text.empty()) throw ValidationError("--n-range sweep needs --x");
        const double x = scalar(cfg.x_text, "--x");
        const auto colon = cfg.n_range.find(':');
        if (colon == std::string::npos) throw ValidationError("--n-range must be lo:hi");
        const double lo_d = parse_double(cfg.n_range.substr(0, colon), "order range start");
        const double hi_d = parse_double(cfg.n_range.substr(colon + 1), "order range end");
        if (lo_d != std::floor(lo_d) || hi_d != std::floor(hi_d) || lo_d < 1 || hi_d < lo_d ||
            hi_d > kMaxExpansionOrder) {
            throw ValidationError("--n-range needs integers 1 <= lo <= hi <= 64");
        }
        const Complex truth = eval_complex(ast, Complex(x, 0.0));
        for (int N = static_cast<int>(lo_d); N <= static_cast<int>(hi_d); ++N) {
            const auto est = remainder_bound(ast, lambda, x0, x, N, cfg.grid, cfg.quad_nodes);
            const double err = std::abs(truth - eval_series(expand_1d(ast, lambda, x0, N), x));
            rows.push_back({static_cast<double>(N), err, est.bound_tight, est.bound_loose});
        }
    }

    const auto fmt = format_of(cfg, "csv");
    if (fmt == "json") {
        auto arr = json::array();
        for (const auto& r : rows) {
            json row;
            if (key_name == "N") {
                row["N"] = static_cast<int>(r.key);
            } else {
                row["x"] = r.key;
            }
            row["abs_error"] = r.abs_error;
            row["bound_tight"] = r.bound_tight;
            row["bound_loose"] = r.bound_loose;
            arr.push_back(std::move(row));
        }
        out << arr.dump(2) << '\n';
    } else {
        out << key_name << ",abs_error,bound_tight,bound_loose\n";
        for (const auto& r : rows) {
            out << (key_name == "N" ? std::to_string(static_cast<int>(r.key)) : num(r.key)) << ','
                << num(r.abs_error) << ',' << num(r.bound_tight) << ',' << num(r.bound_loose)
                << '\n';
        }
    }
    return kOk;
}

int cmd_radius(const Config& cfg, std::ostream& out) {
    require_one_dim(cfg, "radius");
    const auto ast = function_of(cfg);
    const Complex lambda = lambda_of(cfg);
    const double x0 = scalar(cfg.x0_text, "--x0");
    const auto rep = radius_estimate(ast, lambda, x0, cfg.j_max, cfg.window);

    const auto fmt = format_of(cfg, "json");
    if (fmt == "json") {
        json doc{{"lambda", cplx(lambda)},
                 {"x0", x0},
                 {"r_estimate", real_or_null(rep.r_estimate)},
                 {"x_region_halfwidth",
                  rep.has_region ? real_or_null(rep.x_region_halfwidth) : json(nullptr)},
                 {"stable", rep.stable},
                 {"window_spread", rep.window_spread}};
        auto arr = json::array();
        for (const auto& r : rep.ratios) arr.push_back({{"j", r.j}, {"ratio", r.value}});
        doc["ratios"] = std::move(arr);
        out << doc.dump(2) << '\n';
    } else if (fmt == "csv") {
        out << "j,ratio\n";
        for (const auto& r : rep.ratios) out << r.j << ',' << num(r.value) << '\n';
    } else {
        out << "r_estimate         = " << num(rep.r_estimate) << '\n'
            << "x_region_halfwidth = " << (rep.has_region ? num(rep.x_region_halfwidth) : "n/a")
            << '\n'
            << "stable             = " << (rep.stable ? "yes" : "no") << '\n'
            << "window_spread      = " << num(rep.window_spread) << '\n';
    }
    return kOk;
}

int cmd_growth(const Config& cfg, std::ostream& out) {
    require_one_dim(cfg, "growth");
    const auto ast = function_of(cfg);
    const Complex lambda = cfg.lambda_text.empty()
                               ? Complex(0.0, 2.0 * std::numbers::pi / cfg.period)
                               : parse_complex(cfg.lambda_text);
    const int n_max = std::min(cfg.n_max, 32);
    const auto rep = growth_diagnostic(ast, lambda, cfg.period, n_max);

    const auto fmt = format_of(cfg, "json");
    if (fmt == "json") {
        json doc{{"period", rep.period},   {"lambda", cplx(lambda)},
                 {"best_k", rep.best_k},   {"c0", rep.c0},
                 {"c0_global", rep.c0_global}, {"bounded", rep.bounded},
                 {"periodic", rep.periodic}, {"note", rep.note}};
        doc["sup_values"] = rep.sup_values;
        out << doc.dump(2) << '\n';
    } else if (fmt == "csv") {
        out << "N,sup\n";
        for (std::size_t n = 0; n < rep.sup_values.size(); ++n) out << n << ',' << num(rep.sup_values[n]) << '\n';
    } else {
        out << "best_k    = " << rep.best_k << '\n'
            << "c0        = " << num(rep.c0) << '\n'
            << "c0_global = " << num(rep.c0_global) << '\n'
            << "bounded   = " << (rep.bounded ? "yes" : "no") << '\n'
            << "periodic  = " << (rep.periodic ? "yes" : "no") << '\n'
            << "note      = " << rep.note << '\n';
    }
    return kOk;
}

int cmd_nd(const Config& cfg, std::ostream& out) {
    const auto ast = function_of(cfg);
    const Complex lambda = lambda_of(cfg);
    const auto center = vector_of(cfg.x0_text, cfg.dims, "--x0");
    const auto e = expand_nd(ast, cfg.dims, lambda, center, cfg.order);

    std::optional<std::vector<double>> x;
    Complex approx{}, truth{};
    double bound = 0.0;
    if (!cfg.x_text.empty()) {
        x = vector_of(cfg.x_text, cfg.dims, "--x");
        approx = eval_nd(e, *x);
        std::vector<Complex> z(x->begin(), x->end());
        truth = eval_complex(ast, z);
        bound = remainder_bound_nd(ast, cfg.dims, lambda, center, *x, cfg.order, cfg.box_grid, cfg.seed);
    }

    const auto fmt = format_of(cfg, "json");
    const auto& layout = *e.layout;
    if (fmt == "json") {
        json doc{{"lambda", cplx(lambda)}, {"x0", center}, {"order", cfg.order}};
        auto arr = json::array();
        for (std::size_t p = 0; p < layout.size(); ++p) {
            arr.push_back({{"index", layout.index(p).components()},
                           {"re", clean(e.coeffs[p].real())},
                           {"im", clean(e.coeffs[p].imag())}});
        }
        doc["coeffs"] = std::move(arr);
        if (x) {
            doc["x"] = *x;
            doc["approx"] = cplx(approx);
            doc["true"] = cplx(truth);
            doc["abs_error"] = std::abs(truth - approx);
            doc["remainder_bound"] = bound;
        }
        out << doc.dump(2) << '\n';
    } else if (fmt == "csv") {
        for (int i = 0; i < cfg.dims; ++i) out << 'g' << i + 1 << ',';
        out << "re,im\n";
        for (std::size_t p = 0; p < layout.size(); ++p) {
            for (int c : layout.index(p).components()) out << c << ',';
            out << num(e.coeffs[p].real()) << ',' << num(e.coeffs[p].imag()) << '\n';
        }
    } else {
        for (std::size_t p = 0; p < layout.size(); ++p) {
            out << "c" << layout.index(p).to_string() << " = " << text(e.coeffs[p]) << '\n';
        }
        if (x) {
            out << "abs_error       = " << num(std::abs(truth - approx)) << '\n'
                << "remainder_bound = " << num(bound) << '\n';
        }
    }
    return kOk;
}

int cmd_identities(const Config& cfg, std::ostream& out) {
    if (cfg.suite != "all") throw ValidationError("--suite must be 'all'");
    std::optional<ToleranceOverrides> overrides;
    if (!cfg.tol_overrides.empty()) {
        overrides.emplace();
        for (const auto& entry : cfg.tol_overrides) {
            const auto eq = entry.rfind('=');
            if (eq == std::string::npos || eq == 0) throw ValidationError("--tol must be name=value");
            (*overrides)[entry.substr(0, eq)] = parse_double(entry.substr(eq + 1), "tolerance");
        }
    }
    const auto results = run_suite(overrides);
    const auto fmt = format_of(cfg, "text");
    if (fmt == "json") {
        write_json(out, results);
    } else if (fmt == "csv") {
        out << "name,computed_re,computed_im,target_re,target_im,terms_used,abs_error,tolerance,passed,variant\n";
        for (const auto& r : results) {
            out << '"' << r.name << "\"," << num(r.computed.real()) << ',' << num(r.computed.imag())
                << ',' << num(r.target.real()) << ',' << num(r.target.imag()) << ',' << r.terms_used
                << ',' << num(r.abs_error) << ',' << num(r.tolerance) << ','
                << (r.passed ? "true" : "false") << ',' << r.variant << '\n';
        }
    } else {
        write_table(out, results);
    }
    return failure_count(results) == 0 ? kOk : kCheckFailed;
}

int cmd_stirling(const Config& cfg, std::ostream& out) {
    const auto table = build_table(std::max(cfg.stirling_row, 0));
    table.write_row_csv(out, cfg.stirling_row);
    return kOk;
}

}  // namespace

Complex parse_complex(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (c != ' ') s += c;
    }
    if (s.empty()) throw ValidationError("empty complex literal");
    if (s.back() != 'i') return {parse_double(s, "complex literal"), 0.0};

    // Split before the sign of the imaginary part, skipping exponent signs.
    const std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto imag_of = [](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return parse_double(t, "imaginary part");
    };
    if (split == std::string::npos) return {0.0, imag_of(body)};
    return {parse_double(body.substr(0, split), "real part"), imag_of(body.substr(split))};
}

std::vector<double> parse_vector(const std::string& text) {
    std::vector<double> v;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
        v.push_back(parse_double(item, "number"));
    }
    if (v.empty()) throw ValidationError("expected a comma-separated list of numbers");
    return v;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Exponential Taylor expansions: coefficients, remainders and diagnostics",
                 "exptaylor"};
    app.require_subcommand(1);

    auto add_function = [&](CLI::App* sub) {
        sub->add_option("--fn", cfg.fn, "Function of x (or x1..xn)")->required();
        sub->add_option("--lambda", cfg.lambda_text, "Complex lambda, a+bi (default 2*pi*i)");
        sub->add_option("--format", cfg.format, "json, csv or text");
        sub->add_option("--out", cfg.out_path, "Write output to this file");
    };

    auto* expand = app.add_subcommand("expand", "Expansion coefficients c_j");
    add_function(expand);
    expand->add_option("--dims", cfg.dims);
    expand->add_option("--x0", cfg.x0_text, "Center");
    expand->add_option("--order", cfg.order, "Number of terms N");

    auto* eval = app.add_subcommand("eval", "Partial sum, remainder and bounds at a point");
    add_function(eval);
    eval->add_option("--dims", cfg.dims);
    eval->add_option("--x0", cfg.x0_text);
    eval->add_option("--x", cfg.x_text)->required();
    eval->add_option("--order", cfg.order);
    eval->add_option("--grid", cfg.grid, "Sup grid size (odd)");
    eval->add_option("--quad-nodes", cfg.quad_nodes);
    eval->add_flag("--check", cfg.check, "Exit 3 unless sum + remainder reproduces the function");
    eval->add_option("--check-tol", cfg.check_tol);

    auto* sweep = app.add_subcommand("sweep", "Error and bounds over a range of x or N (CSV)");
    add_function(sweep);
    sweep->add_option("--dims", cfg.dims);
    sweep->add_option("--x0", cfg.x0_text);
    sweep->add_option("--x", cfg.x_text);
    sweep->add_option("--order", cfg.order);
    sweep->add_option("--grid", cfg.grid);
    sweep->add_option("--quad-nodes", cfg.quad_nodes);
    sweep->add_option("--x-range", cfg.x_range, "lo:hi:steps");
    sweep->add_option("--n-range", cfg.n_range, "lo:hi");

    auto* radius = app.add_subcommand("radius", "Ratio-test radius estimate");
    add_function(radius);
    radius->add_option("--dims", cfg.dims);
    radius->add_option("--x0", cfg.x0_text);
    radius->add_option("--j-max", cfg.j_max);
    radius->add_option("--window", cfg.window);

    auto* growth = app.add_subcommand("growth", "Factorial growth diagnostic for periodic input");
    add_function(growth);
    growth->add_option("--dims", cfg.dims);
    growth->add_option("--period", cfg.period, "Period T (lambda defaults to 2*pi*i/T)");
    growth->add_option("--n-max", cfg.n_max);

    auto* nd = app.add_subcommand("nd", "Multivariate expansion and remainder bound");
    add_function(nd);
    nd->add_option("--dims", cfg.dims);
    nd->add_option("--x0", cfg.x0_text, "Center, comma-separated");
    nd->add_option("--x", cfg.x_text, "Evaluation point, comma-separated");
    nd->add_option("--order", cfg.order);
    nd->add_option("--grid", cfg.box_grid, "Box sample points per axis");
    nd->add_option("--seed", cfg.seed, "Seed for box sampling when dims > 3");

    auto* identities = app.add_subcommand("identities", "Run the series identity suite");
    identities->add_option("--suite", cfg.suite);
    identities->add_option("--tol", cfg.tol_overrides, "Tolerance override name=value");
    identities->add_option("--format", cfg.format);
    identities->add_option("--out", cfg.out_path);

    auto* stirling = app.add_subcommand("stirling", "CSV row of Stirling numbers of the first kind");
    stirling->add_option("--row", cfg.stirling_row)->required();
    stirling->add_option("--out", cfg.out_path);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kValidation;
    }

    std::ostringstream buffer;
    int code = kOk;
    try {
        if (*expand) code = cmd_expand(cfg, buffer);
        else if (*eval) code = cmd_eval(cfg, buffer);
        else if (*sweep) code = cmd_sweep(cfg, buffer);
        else if (*radius) code = cmd_radius(cfg, buffer);
        else if (*growth) code = cmd_growth(cfg, buffer);
        else if (*nd) code = cmd_nd(cfg, buffer);
        else if (*identities) code = cmd_identities(cfg, buffer);
        else if (*stirling) code = cmd_stirling(cfg, buffer);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const RegionError& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const DiagnosticError& e) {
        err << "diagnostic error: " << e.what() << '\n';
        return kDomain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    }

    if (cfg.out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(cfg.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << cfg.out_path << '\n';
            return kValidation;
        }
        file << buffer.str();
    }
    return code;
}

}  // namespace exptaylor::cli
