#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "exptaylor/expr.hpp"
#include "exptaylor/multi_index.hpp"

namespace exptaylor {

inline constexpr int kMaxDims = 4;
inline constexpr int kMaxNdOrder = 16;
inline constexpr int kDefaultBoxGrid = 33;

/// a(x) ~ sum_{|gamma| < N} c_gamma (e^{lambda (x - center)} - 1)^gamma,
/// c_gamma = D^{lambda,(gamma)} a(center) / gamma!.
struct ExpansionND {
    Complex lambda;
    std::vector<double> center;
    int order = 0;  // N
    std::shared_ptr<const MonomialLayout> layout;  // total degree N - 1
    std::vector<Complex> coeffs;

    int dims() const noexcept { return layout->dims(); }
    Complex operator[](const MultiIndex& gamma) const;
};

/// Axis-aligned closed box Q(x, center).
struct BoxDomain {
    std::vector<double> lo;
    std::vector<double> hi;

    static BoxDomain spanning(std::span<const double> a, std::span<const double> b);
    static BoxDomain centered(std::span<const double> center, double halfwidth);

    /// Tensor grid with `per_axis` points on each axis of positive width
    /// (dims <= 3), otherwise 10 * per_axis seeded uniform samples plus both
    /// corners.
    std::vector<std::vector<double>> sample(int per_axis, std::uint64_t seed) const;
};

ExpansionND expand_nd(const ExprAst& ast, int n, Complex lambda, std::span<const double> center,
                      int N);

Complex eval_nd(const ExpansionND& expansion, std::span<const double> x);

/// |lambda| [sum_{|gamma|=N} N/gamma! sup_Q |D^{lambda,(gamma)} a|] eps(lambda, r)^{N-1} r,
/// r = ||x - center||_inf, with the box sup sampled.
double remainder_bound_nd(const ExprAst& ast, int n, Complex lambda,
                          std::span<const double> center, std::span<const double> x, int N,
                          int grid = kDefaultBoxGrid, std::uint64_t seed = 0);

struct NdConvergenceReport {
    struct EnvelopeEntry {
        MultiIndex gamma;
        double sup = 0.0;     // sampled sup over the box of |D^{lambda,(gamma)} a|
        double limit = 0.0;   // A gamma!
        bool holds = true;
    };
    std::vector<EnvelopeEntry> envelope;  // 1 <= |gamma| <= N_max
    bool envelope_holds = true;
    double alpha = 0.9;
    double delta = 0.0;                   // min(eps^{-1}(alpha), V halfwidth)
    std::vector<double> predicted;        // index N-1: A delta |lambda| N^n/(n-1)! alpha^{N-1}

    // Filled when an evaluation point is supplied.
    std::vector<double> measured;         // index N-1: |a(x) - partial sum of order N|
    double decay_ratio = 0.0;             // geometric-mean ratio of measured over N = 2..N_max
    double max_step_ratio = 0.0;          // max of measured[N]/measured[N-1] over N = 3..N_max
};

struct NdConvergenceOptions {
    double alpha = 0.9;
    int grid = 9;
    std::uint64_t seed = 0;
    std::optional<std::vector<double>> point;
};

NdConvergenceReport convergence_check_nd(const ExprAst& ast, int n, Complex lambda,
                                         std::span<const double> center, double A,
                                         double V_halfwidth, int N_max,
                                         const NdConvergenceOptions& options = {});

}  // namespace exptaylor
