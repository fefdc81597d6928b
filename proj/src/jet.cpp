#include "exptaylor/jet.hpp"

#include <cmath>
#include <string>

#include "exptaylor/error.hpp"

namespace exptaylor {

Jet1D::Jet1D(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw ValidationError("jet needs at least one coefficient");
}

Jet1D Jet1D::variable(Complex x0, int K) {
    std::vector<Complex> c(static_cast<std::size_t>(K) + 1, Complex{});
    c[0] = x0;
    if (K >= 1) c[1] = 1.0;
    return Jet1D(std::move(c));
}

Jet1D Jet1D::constant(Complex v, int K) {
    std::vector<Complex> c(static_cast<std::size_t>(K) + 1, Complex{});
    c[0] = v;
    return Jet1D(std::move(c));
}

Complex Jet1D::derivative_value(int j) const {
    double f = 1.0;
    for (int i = 2; i <= j; ++i) f *= i;
    return c_[static_cast<std::size_t>(j)] * f;
}

Jet1D Jet1D::truncated(int K) const {
    if (K < 0 || K > order()) throw ValidationError("cannot truncate jet to order " + std::to_string(K));
    return Jet1D(std::vector<Complex>(c_.begin(), c_.begin() + K + 1));
}

Jet1D derivative(const Jet1D& j) {
    if (j.order() < 1) throw ValidationError("derivative of an order-0 jet is undefined");
    std::vector<Complex> b(static_cast<std::size_t>(j.order()));
    for (int m = 0; m < j.order(); ++m) b[static_cast<std::size_t>(m)] = static_cast<double>(m + 1) * j[m + 1];
    return Jet1D(std::move(b));
}

JetND::JetND(std::shared_ptr<const MonomialLayout> layout, std::vector<Complex> coeffs)
    : layout_(std::move(layout)), c_(std::move(coeffs)) {
    if (!layout_ || c_.size() != layout_->size()) {
        throw ValidationError("jet coefficients do not match their layout");
    }
}

JetND JetND::constant(Complex v, int n, int K) {
    auto layout = MonomialLayout::get(n, K);
    std::vector<Complex> c(layout->size(), Complex{});
    c[0] = v;
    return JetND(std::move(layout), std::move(c));
}

JetND JetND::variable(int axis, Complex value, int n, int K) {
    auto layout = MonomialLayout::get(n, K);
    std::vector<Complex> c(layout->size(), Complex{});
    c[0] = value;
    if (K >= 1) {
        std::vector<int> g(static_cast<std::size_t>(n), 0);
        g[static_cast<std::size_t>(axis)] = 1;
        c[layout->position(MultiIndex(std::move(g)))] = 1.0;
    }
    return JetND(std::move(layout), std::move(c));
}

Complex JetND::operator[](const MultiIndex& gamma) const {
    const auto pos = layout_->position(gamma);
    return pos == MonomialLayout::npos ? Complex{} : c_[pos];
}

namespace series {

std::vector<Complex> mul(std::span<const Complex> a, std::span<const Complex> b) {
    const auto L = a.size();
    std::vector<Complex> c(L, Complex{});
    for (std::size_t k = 0; k < L; ++k) {
        Complex s{};
        for (std::size_t i = 0; i <= k; ++i) s += a[i] * b[k - i];
        c[k] = s;
    }
    return c;
}

std::vector<Complex> div(std::span<const Complex> a, std::span<const Complex> b) {
    if (b[0] == Complex{}) throw DomainError("division by zero");
    const auto L = a.size();
    std::vector<Complex> q(L, Complex{});
    for (std::size_t k = 0; k < L; ++k) {
        Complex s = a[k];
        for (std::size_t i = 1; i <= k; ++i) s -= b[i] * q[k - i];
        q[k] = s / b[0];
    }
    return q;
}

std::vector<Complex> exp(std::span<const Complex> a) {
    const auto L = a.size();
    std::vector<Complex> e(L, Complex{});
    e[0] = std::exp(a[0]);
    for (std::size_t k = 1; k < L; ++k) {
        Complex s{};
        for (std::size_t j = 1; j <= k; ++j) s += static_cast<double>(j) * a[j] * e[k - j];
        e[k] = s / static_cast<double>(k);
    }
    return e;
}

std::vector<Complex> log(std::span<const Complex> a) {
    if (a[0] == Complex{}) throw DomainError("log of zero");
    const auto L = a.size();
    std::vector<Complex> l(L, Complex{});
    l[0] = std::log(a[0]);
    for (std::size_t k = 1; k < L; ++k) {
        Complex s{};
        for (std::size_t j = 1; j < k; ++j) s += static_cast<double>(j) * l[j] * a[k - j];
        l[k] = (a[k] - s / static_cast<double>(k)) / a[0];
    }
    return l;
}

std::vector<Complex> sqrt(std::span<const Complex> a) {
    if (a[0] == Complex{}) throw DomainError("sqrt of zero");
    const auto L = a.size();
    std::vector<Complex> r(L, Complex{});
    r[0] = std::sqrt(a[0]);
    for (std::size_t k = 1; k < L; ++k) {
        Complex s{};
        for (std::size_t j = 1; j < k; ++j) s += r[j] * r[k - j];
        r[k] = (a[k] - s) / (2.0 * r[0]);
    }
    return r;
}

namespace {

template <bool Hyperbolic>
void paired(std::span<const Complex> a, std::vector<Complex>& s, std::vector<Complex>& c,
            Complex s0, Complex c0) {
    const auto L = a.size();
    s.assign(L, Complex{});
    c.assign(L, Complex{});
    s[0] = s0;
    c[0] = c0;
    for (std::size_t k = 1; k < L; ++k) {
        Complex ss{}, cs{};
        for (std::size_t j = 1; j <= k; ++j) {
            const Complex ja = static_cast<double>(j) * a[j];
            ss += ja * c[k - j];
            cs += ja * s[k - j];
        }
        s[k] = ss / static_cast<double>(k);
        c[k] = (Hyperbolic ? 1.0 : -1.0) * cs / static_cast<double>(k);
    }
}

}  // namespace

void sin_cos(std::span<const Complex> a, std::vector<Complex>& s, std::vector<Complex>& c) {
    paired<false>(a, s, c, std::sin(a[0]), std::cos(a[0]));
}

void sinh_cosh(std::span<const Complex> a, std::vector<Complex>& s, std::vector<Complex>& c) {
    paired<true>(a, s, c, std::sinh(a[0]), std::cosh(a[0]));
}

}  // namespace series

namespace {

bool on_branch_cut(Complex z) { return z.imag() == 0.0 && z.real() <= 0.0; }

std::vector<Complex> to_vec(std::span<const Complex> s) { return {s.begin(), s.end()}; }

// f applied to a univariate coefficient vector, with domain checks on the
// constant term.
std::vector<Complex> apply_unary(Func f, std::span<const Complex> a) {
    switch (f) {
        case Func::Exp: return series::exp(a);
        case Func::Log:
            if (on_branch_cut(a[0])) throw DomainError("log argument is not positive");
            return series::log(a);
        case Func::Sqrt:
            if (on_branch_cut(a[0])) throw DomainError("sqrt argument is not positive");
            return series::sqrt(a);
        case Func::Sin:
        case Func::Cos:
        case Func::Tan: {
            std::vector<Complex> s, c;
            series::sin_cos(a, s, c);
            if (f == Func::Sin) return s;
            if (f == Func::Cos) return c;
            if (c[0] == Complex{}) throw DomainError("tan at a pole");
            return series::div(s, c);
        }
        case Func::Sinh:
        case Func::Cosh: {
            std::vector<Complex> s, c;
            series::sinh_cosh(a, s, c);
            return f == Func::Sinh ? s : c;
        }
    }
    throw ValidationError("unknown function");
}

// Evaluation of the AST over 1-D coefficient vectors.
struct Algebra1D {
    int K;
    double x0;

    using Value = std::vector<Complex>;

    Value constant(Complex v) const { return to_vec(Jet1D::constant(v, K).coeffs()); }
    Value variable(int) const { return to_vec(Jet1D::variable(x0, K).coeffs()); }
    static Complex head(const Value& v) { return v[0]; }
    static bool is_constant(const Value& v) {
        for (std::size_t i = 1; i < v.size(); ++i) {
            if (v[i] != Complex{}) return false;
        }
        return true;
    }
    static Value add(Value a, const Value& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        return a;
    }
    static Value sub(Value a, const Value& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
        return a;
    }
    static Value neg(Value a) {
        for (auto& v : a) v = -v;
        return a;
    }
    static Value scale(Value a, Complex s) {
        for (auto& v : a) v *= s;
        return a;
    }
    static Value mul(const Value& a, const Value& b) { return series::mul(a, b); }
    static Value div(const Value& a, const Value& b) { return series::div(a, b); }
    Value unary(Func f, const Value& a) const { return apply_unary(f, a); }};

// Evaluation over total-degree truncated multivariate coefficient arrays.
struct AlgebraND {
    int n;
    int K;
    std::span<const double> center;
    std::shared_ptr<const MonomialLayout> layout;

    using Value = std::vector<Complex>;

    Value constant(Complex v) const {
        Value c(layout->size(), Complex{});
        c[0] = v;
        return c;
    }
    Value variable(int axis) const {
        return to_vec(
            JetND::variable(axis, center[static_cast<std::size_t>(axis)], n, K).coeffs());
    }
    static Complex head(const Value& v) { return v[0]; }
    static bool is_constant(const Value& v) { return Algebra1D::is_constant(v); }
    static Value add(Value a, const Value& b) { return Algebra1D::add(std::move(a), b); }
    static Value sub(Value a, const Value& b) { return Algebra1D::sub(std::move(a), b); }
    static Value neg(Value a) { return Algebra1D::neg(std::move(a)); }

    Value mul(const Value& a, const Value& b) const {
        const auto& L = *layout;
        Value c(L.size(), Complex{});
        for (std::size_t i = 0; i < L.size(); ++i) {
            if (a[i] == Complex{}) continue;
            const auto end = L.degree_begin(K - L.degree(i) + 1);
            for (std::size_t j = 0; j < end; ++j) {
                c[L.sum_position(i, j)] += a[i] * b[j];
            }
        }
        return c;
    }

    // sum_k t_k h^k with h = a - a(center), by Horner's scheme.
    Value compose(const std::vector<Complex>& t, Value h) const {
        h[0] = Complex{};
        Value r = constant(t[static_cast<std::size_t>(K)]);
        for (int k = K - 1; k >= 0; --k) {
            r = mul(r, h);
            r[0] += t[static_cast<std::size_t>(k)];
        }
        return r;
    }

    Value div(const Value& a, const Value& b) const {
        const Complex b0 = b[0];
        if (b0 == Complex{}) throw DomainError("division by zero");
        std::vector<Complex> t(static_cast<std::size_t>(K) + 1);
        Complex p = 1.0 / b0;
        for (int k = 0; k <= K; ++k) {
            t[static_cast<std::size_t>(k)] = p;
            p *= -1.0 / b0;
        }
        return mul(a, compose(t, b));
    }

    // f(a) = sum_k f^(k)(a0)/k! (a - a0)^k
    Value unary(Func f, const Value& a) const {
        return compose(apply_unary(f, Jet1D::variable(a[0], K).coeffs()), a);
    }
};

template <class Alg>
typename Alg::Value eval_node(const Alg& alg, const Node& node) {
    using Value = typename Alg::Value;
    switch (node.kind) {
        case NodeKind::Constant: return alg.constant(node.value);
        case NodeKind::Variable: return alg.variable(node.variable);
        case NodeKind::Negate: return Alg::neg(eval_node(alg, *node.lhs));
        case NodeKind::Call: return alg.unary(node.func, eval_node(alg, *node.lhs));
        case NodeKind::Binary: {
            Value a = eval_node(alg, *node.lhs);
            long long k = 0;
            if (node.op == BinaryOp::Pow && integer_constant(*node.rhs, k)) {
                const bool invert = k < 0;
                if (invert) k = -k;
                Value result = alg.constant(1.0);
                Value base = a;
                while (k > 0) {
                    if (k & 1) result = alg.mul(result, base);
                    k >>= 1;
                    if (k > 0) base = alg.mul(base, base);
                }
                if (invert) {
                    if (Alg::head(result) == Complex{}) {
                        throw DomainError("zero raised to a negative power");
                    }
                    result = alg.div(alg.constant(1.0), result);
                }
                return result;
            }
            Value b = eval_node(alg, *node.rhs);
            switch (node.op) {
                case BinaryOp::Add: return Alg::add(std::move(a), b);
                case BinaryOp::Sub: return Alg::sub(std::move(a), b);
                case BinaryOp::Mul: return alg.mul(a, b);
                case BinaryOp::Div: return alg.div(a, b);
                case BinaryOp::Pow: {
                    if (on_branch_cut(Alg::head(a))) {
                        throw DomainError("non-integer power of a value that is not positive");
                    }
                    return alg.unary(Func::Exp, alg.mul(b, alg.unary(Func::Log, a)));
                }
            }
            break;
        }
    }
    throw ValidationError("corrupt expression node");
}

void check_order(int K) {
    if (K < 0 || K > kMaxJetOrder) {
        throw ValidationError("jet order must lie in [0, " + std::to_string(kMaxJetOrder) +
                              "], got " + std::to_string(K));
    }
}

}  // namespace

Jet1D lift(const ExprAst& ast, double x0, int K) {
    check_order(K);
    if (ast.dims() != 1) throw ValidationError("lift needs a one-variable expression");
    if (!std::isfinite(x0)) throw ValidationError("jet center must be finite");
    Algebra1D alg{K, x0};
    return Jet1D(eval_node(alg, ast.root()));
}

JetND lift_nd(const ExprAst& ast, std::span<const double> center, int K) {
    check_order(K);
    if (center.size() != static_cast<std::size_t>(ast.dims())) {
        throw ValidationError("center has " + std::to_string(center.size()) +
                              " coordinates, expression has " + std::to_string(ast.dims()));
    }
    for (double c : center) {
        if (!std::isfinite(c)) throw ValidationError("jet center must be finite");
    }
    AlgebraND alg{ast.dims(), K, center, MonomialLayout::get(ast.dims(), K)};
    auto coeffs = eval_node(alg, ast.root());
    return JetND(alg.layout, std::move(coeffs));
}

}  // namespace exptaylor
