#pragma once

#include <string>
#include <vector>

#include "exptaylor/expr.hpp"

namespace exptaylor {

/// a(x) ~ sum_{j<N} c_j (e^{lambda (x - x0)} - 1)^j with c_j = D^{lambda,(j)} a(x0) / j!.
struct Expansion1D {
    Complex lambda;
    double x0 = 0.0;
    std::vector<Complex> coeffs;

    int order() const noexcept { return static_cast<int>(coeffs.size()); }
};

struct RemainderEstimate {
    int order = 0;
    Complex integral_value;  // quadrature of the exact remainder integral
    double bound_tight = 0.0;
    double bound_loose = 0.0;
    int grid_points = 0;
};

struct ConvergenceReport {
    struct Ratio {
        int j;
        double value;  // j |v_j| / |v_{j+1}|
    };
    std::vector<Ratio> ratios;
    double r_estimate = 0.0;            // may be +inf
    double x_region_halfwidth = 0.0;    // NaN unless lambda is purely imaginary; may be +inf
    bool has_region = false;
    bool stable = false;
    double window_spread = 0.0;
};

/// Heuristic check of sup_{[0,T]} |D^{lambda,(N)} a| <= C0 (N + k)!.
struct GrowthReport {
    double period = 0.0;
    std::vector<double> sup_values;   // g_N, N = 0..N_max
    int best_k = 0;
    double c0 = 0.0;         // max of g_N/(N+k)! over the trailing half of the range
    double c0_global = 0.0;  // max of g_N/(N+k)! over N >= 1
    bool bounded = false;
    bool periodic = true;
    std::string note;
};

inline constexpr int kMaxExpansionOrder = 64;
inline constexpr int kDefaultQuadNodes = 64;
inline constexpr int kDefaultGrid = 513;

Expansion1D expand_1d(const ExprAst& ast, Complex lambda, double x0, int N);

/// Horner's scheme in w = e^{lambda (x - x0)} - 1.
Complex eval_series(const Expansion1D& expansion, double x);

/// R_N(x, x0) = lambda/(N-1)! int_0^1 D^{lambda,(N)} a((1-t) x0 + t x)
///              (e^{lambda (1-t)(x - x0)} - 1)^{N-1} (x - x0) dt
/// by fixed-order Gauss-Legendre quadrature.
Complex remainder_integral(const ExprAst& ast, Complex lambda, double x0, double x, int N,
                           int quad_nodes = kDefaultQuadNodes);

/// Both sup-based bounds on |R_N|, with sups sampled on a uniform grid over
/// the closed segment. Estimates, not certificates.
RemainderEstimate remainder_bound(const ExprAst& ast, Complex lambda, double x0, double x, int N,
                                  int grid = kDefaultGrid, int quad_nodes = kDefaultQuadNodes);

/// sup_{-r <= z <= r} |e^{lambda z} - 1|.
double epsilon_sup(Complex lambda, double r);

/// Largest r with epsilon_sup(lambda, r) <= alpha (alpha > 0); +inf when
/// the bound is never exceeded.
double epsilon_inverse(Complex lambda, double alpha);

/// Ratio-test radius surrogate: max of the trailing `window` defined ratios.
ConvergenceReport radius_estimate(const ExprAst& ast, Complex lambda, double x0, int j_max,
                                  int window);

/// Requires lambda = 2 pi i / T.
GrowthReport growth_diagnostic(const ExprAst& ast, Complex lambda, double T, int N_max);

/// True when lambda has zero real part.
bool purely_imaginary(Complex lambda);

}  // namespace exptaylor
