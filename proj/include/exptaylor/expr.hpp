#pragma once

#include <complex>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace exptaylor {

using Complex = std::complex<double>;

enum class NodeKind { Constant, Variable, Negate, Binary, Call };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };
enum class Func { Sin, Cos, Tan, Exp, Log, Sqrt, Sinh, Cosh };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    NodeKind kind = NodeKind::Constant;
    Complex value{};       // Constant
    std::string name;      // Constant: "pi"/"e" for named constants, else empty
    int variable = 0;      // Variable: zero-based axis
    BinaryOp op = BinaryOp::Add;
    Func func = Func::Sin;
    NodePtr lhs;           // Negate/Call operand, Binary left
    NodePtr rhs;           // Binary right

    static NodePtr constant(Complex v, std::string name = {});
    static NodePtr var(int index);
    static NodePtr negate(NodePtr operand);
    static NodePtr binary(BinaryOp op, NodePtr lhs, NodePtr rhs);
    static NodePtr call(Func f, NodePtr arg);
};

std::string_view func_name(Func f);

/// Parsed expression in `dims` real variables. Variables are `x` for a
/// single variable, `x1..xn` otherwise (`x1` is also accepted when dims = 1).
class ExprAst {
public:
    ExprAst(NodePtr root, int dims);

    const Node& root() const { return *root_; }
    const NodePtr& root_ptr() const { return root_; }
    int dims() const noexcept { return dims_; }

    /// Fully parenthesized text that parses back to an identical tree.
    std::string to_string() const;

private:
    NodePtr root_;
    int dims_;
};

/// Throws ParseError (with the byte offset of the problem) on bad input and
/// ValidationError when dims < 1.
ExprAst parse(std::string_view src, int dims);

/// Principal-branch complex evaluation. Throws DomainError on division by
/// zero and on log/sqrt of zero.
Complex eval_complex(const ExprAst& ast, std::span<const Complex> point);
Complex eval_complex(const ExprAst& ast, Complex x);

bool structurally_equal(const Node& a, const Node& b);
inline bool structurally_equal(const ExprAst& a, const ExprAst& b) {
    return a.dims() == b.dims() && structurally_equal(a.root(), b.root());
}

/// Returns true and the value when `node` is a real integer constant.
bool integer_constant(const Node& node, long long& out);

std::string variable_name(int index, int dims);

}  // namespace exptaylor
