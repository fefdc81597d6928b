#pragma once

#include <complex>
#include <memory>
#include <span>
#include <vector>

#include "exptaylor/expr.hpp"
#include "exptaylor/multi_index.hpp"

namespace exptaylor {

inline constexpr int kMaxJetOrder = 64;

/// Truncated Taylor expansion of a function at a point, c_j = f^(j)(x0)/j!,
/// j = 0..K.
class Jet1D {
public:
    Jet1D() = default;
    explicit Jet1D(std::vector<Complex> coeffs);

    /// Jet of the identity function at x0: (x0, 1, 0, ..., 0).
    static Jet1D variable(Complex x0, int K);
    static Jet1D constant(Complex c, int K);

    int order() const noexcept { return static_cast<int>(c_.size()) - 1; }
    Complex operator[](int j) const { return c_[static_cast<std::size_t>(j)]; }
    std::span<const Complex> coeffs() const noexcept { return c_; }

    /// f^(j)(x0) = j! c_j.
    Complex derivative_value(int j) const;

    Jet1D truncated(int K) const;

private:
    std::vector<Complex> c_;
};

/// Normalized-derivative shift b_m = (m+1) c_{m+1}; order drops by one.
/// Throws ValidationError on an order-0 jet.
Jet1D derivative(const Jet1D& j);

/// Jets of f(x1..xn) at a point, truncated at total degree K;
/// coefficient of gamma is d^gamma f / gamma!.
class JetND {
public:
    JetND(std::shared_ptr<const MonomialLayout> layout, std::vector<Complex> coeffs);
    static JetND constant(Complex c, int n, int K);
    static JetND variable(int axis, Complex value, int n, int K);

    int dims() const noexcept { return layout_->dims(); }
    int order() const noexcept { return layout_->order(); }
    const MonomialLayout& layout() const noexcept { return *layout_; }
    std::span<const Complex> coeffs() const noexcept { return c_; }

    /// Zero for indices beyond the truncation order.
    Complex operator[](const MultiIndex& gamma) const;

private:
    std::shared_ptr<const MonomialLayout> layout_;
    std::vector<Complex> c_;
};

/// Coefficients of the expression at `x0` up to order K (K <= 64).
/// Throws DomainError when an intermediate value leaves its function's domain:
/// log, sqrt and non-integer powers of values on (-inf, 0]; division by zero;
/// tan at a pole.
Jet1D lift(const ExprAst& ast, double x0, int K);

/// Multivariate jet at `center` (size = ast.dims()) to total degree K.
JetND lift_nd(const ExprAst& ast, std::span<const double> center, int K);

/// Truncated series kernels on factorial-normalized coefficient vectors, all
/// of the same length.
namespace series {
std::vector<Complex> mul(std::span<const Complex> a, std::span<const Complex> b);
std::vector<Complex> div(std::span<const Complex> a, std::span<const Complex> b);
std::vector<Complex> exp(std::span<const Complex> a);
std::vector<Complex> log(std::span<const Complex> a);
std::vector<Complex> sqrt(std::span<const Complex> a);
void sin_cos(std::span<const Complex> a, std::vector<Complex>& s, std::vector<Complex>& c);
void sinh_cosh(std::span<const Complex> a, std::vector<Complex>& s, std::vector<Complex>& c);
}  // namespace series

}  // namespace exptaylor
