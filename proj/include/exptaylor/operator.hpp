#pragma once

#include <memory>
#include <vector>

#include "exptaylor/expr.hpp"
#include "exptaylor/jet.hpp"
#include "exptaylor/multi_index.hpp"
#include "exptaylor/stirling.hpp"

namespace exptaylor {

/// v_j = D^{lambda,(j)} a(x0) for j = 0..N, where
/// D^{lambda,(0)} = Id and D^{lambda,(j+1)} = (lambda^{-1} d/dx - j) D^{lambda,(j)}.
struct OperatorSequence {
    Complex lambda;
    double center = 0.0;
    std::vector<Complex> values;

    int order() const noexcept { return static_cast<int>(values.size()) - 1; }
    Complex operator[](int j) const { return values[static_cast<std::size_t>(j)]; }
};

/// D^{lambda,(gamma)} a(center) for every |gamma| <= order, laid out like a
/// JetND of that order.
struct OperatorField {
    Complex lambda;
    std::vector<double> center;
    std::shared_ptr<const MonomialLayout> layout;
    std::vector<Complex> values;

    int dims() const noexcept { return layout->dims(); }
    int order() const noexcept { return layout->order(); }
    Complex operator[](const MultiIndex& gamma) const;
};

/// Applies the defining recursion to the jet of a. Default path.
OperatorSequence d_lambda_recursive(const Jet1D& jet, Complex lambda, int N, double center = 0.0);

/// v_N = sum_{m=1..N} s(N,m) lambda^{-m} a^{(m)}(x0), via signed Stirling
/// numbers of the first kind. Loses accuracy to cancellation beyond N ~ 20.
OperatorSequence d_lambda_stirling(const Jet1D& jet, const StirlingTable& table, Complex lambda,
                                   int N, double center = 0.0);

/// Per-axis composition of the Stirling form over a multivariate jet.
OperatorField d_lambda_nd(const JetND& jet, const StirlingTable& table, Complex lambda, int N,
                          std::vector<double> center = {});

/// D^{lambda,(N)} a(x) for an expression, lifting a jet of order N at x.
Complex d_lambda_at(const ExprAst& ast, Complex lambda, double x, int N);

/// D^{lambda,(gamma)} a(y) for every |gamma| == N.
std::vector<Complex> d_lambda_nd_degree_at(const ExprAst& ast, const StirlingTable& table,
                                           Complex lambda, std::span<const double> y, int N);

/// The process-wide Stirling table used by the series modules (depth 64).
const StirlingTable& default_stirling_table();

}  // namespace exptaylor
