#include "exptaylor/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "exptaylor/error.hpp"

namespace exptaylor {

NodePtr Node::constant(Complex v, std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Constant;
    n->value = v;
    n->name = std::move(name);
    return n;
}

NodePtr Node::var(int index) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Variable;
    n->variable = index;
    return n;
}

NodePtr Node::negate(NodePtr operand) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Negate;
    n->lhs = std::move(operand);
    return n;
}

NodePtr Node::binary(BinaryOp op, NodePtr lhs, NodePtr rhs) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Binary;
    n->op = op;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

NodePtr Node::call(Func f, NodePtr arg) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Call;
    n->func = f;
    n->lhs = std::move(arg);
    return n;
}

std::string_view func_name(Func f) {
    switch (f) {
        case Func::Sin: return "sin";
        case Func::Cos: return "cos";
        case Func::Tan: return "tan";
        case Func::Exp: return "exp";
        case Func::Log: return "log";
        case Func::Sqrt: return "sqrt";
        case Func::Sinh: return "sinh";
        case Func::Cosh: return "cosh";
    }
    return "?";
}

std::string variable_name(int index, int dims) {
    if (dims == 1) return "x";
    return "x" + std::to_string(index + 1);
}

ExprAst::ExprAst(NodePtr root, int dims) : root_(std::move(root)), dims_(dims) {
    if (!root_) throw ValidationError("expression has no root");
    if (dims_ < 1) throw ValidationError("expression needs at least one variable");
}

namespace {

std::string format_double(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

void serialize(const Node& n, int dims, std::string& out) {
    switch (n.kind) {
        case NodeKind::Constant:
            if (!n.name.empty()) {
                out += n.name;
            } else if (n.value.imag() == 0.0) {
                out += format_double(n.value.real());
            } else {
                // Not producible by the parser; kept readable for diagnostics.
                out += "(" + format_double(n.value.real()) + "+" +
                       format_double(n.value.imag()) + "i)";
            }
            return;
        case NodeKind::Variable:
            out += variable_name(n.variable, dims);
            return;
        case NodeKind::Negate:
            out += "(-";
            serialize(*n.lhs, dims, out);
            out += ")";
            return;
        case NodeKind::Binary: {
            static constexpr char ops[] = {'+', '-', '*', '/', '^'};
            out += "(";
            serialize(*n.lhs, dims, out);
            out += ops[static_cast<int>(n.op)];
            serialize(*n.rhs, dims, out);
            out += ")";
            return;
        }
        case NodeKind::Call:
            out += func_name(n.func);
            out += "(";
            serialize(*n.lhs, dims, out);
            out += ")";
            return;
    }
}

class Parser {
public:
    Parser(std::string_view src, int dims) : src_(src), dims_(dims) {}

    NodePtr parse_all() {
        skip_ws();
        if (pos_ == src_.size()) throw ParseError(pos_, "empty expression", "expression");
        NodePtr e = parse_sum();
        skip_ws();
        if (pos_ != src_.size()) {
            throw ParseError(pos_, std::string("unexpected '") + src_[pos_] + "'",
                             "operator or end of input");
        }
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() &&
               (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
                src_[pos_] == '\r')) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    NodePtr parse_sum() {
        NodePtr lhs = parse_product();
        for (;;) {
            if (accept('+')) {
                lhs = Node::binary(BinaryOp::Add, lhs, parse_product());
            } else if (accept('-')) {
                lhs = Node::binary(BinaryOp::Sub, lhs, parse_product());
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_product() {
        NodePtr lhs = parse_unary();
        for (;;) {
            if (accept('*')) {
                lhs = Node::binary(BinaryOp::Mul, lhs, parse_unary());
            } else if (accept('/')) {
                lhs = Node::binary(BinaryOp::Div, lhs, parse_unary());
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_unary() {
        if (accept('-')) return Node::negate(parse_unary());
        if (accept('+')) return parse_unary();
        return parse_power();
    }

    // ^ binds tighter than unary minus on its left and is right-associative;
    // the exponent may carry its own sign (x^-2).
    NodePtr parse_power() {
        NodePtr base = parse_primary();
        if (accept('^')) return Node::binary(BinaryOp::Pow, base, parse_unary());
        return base;
    }

    NodePtr parse_primary() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError(pos_, "unexpected end of input", "expression");
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr inner = parse_sum();
            if (!accept(')')) throw ParseError(pos_, "unclosed parenthesis", "')'");
            return inner;
        }
        if ((c >= '0' && c <= '9') || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_identifier();
        throw ParseError(pos_, std::string("unexpected '") + c + "'", "expression");
    }

    NodePtr parse_number() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) ||
                                      src_[pos_] == '.')) {
            ++pos_;
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
            if (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) {
                while (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) ++p;
                pos_ = p;
            }
        }
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, v);
        if (ec != std::errc() || ptr != src_.data() + pos_) {
            throw ParseError(start, "malformed number", "number");
        }
        return Node::constant(Complex(v, 0.0));
    }

    NodePtr parse_identifier() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                      src_[pos_] == '_')) {
            ++pos_;
        }
        const std::string_view id = src_.substr(start, pos_ - start);

        static constexpr Func funcs[] = {Func::Sin, Func::Cos,  Func::Tan,  Func::Exp,
                                         Func::Log, Func::Sqrt, Func::Sinh, Func::Cosh};
        for (Func f : funcs) {
            if (id != func_name(f)) continue;
            if (!accept('(')) throw ParseError(pos_, "function call needs '('", "'('");
            NodePtr arg = parse_sum();
            skip_ws();
            if (pos_ < src_.size() && src_[pos_] == ',') {
                throw ParseError(pos_, std::string(id) + " takes exactly one argument", "')'");
            }
            if (!accept(')')) throw ParseError(pos_, "unclosed call", "')'");
            return Node::call(f, std::move(arg));
        }

        if (id == "pi") return Node::constant(Complex(std::numbers::pi, 0.0), "pi");
        if (id == "e") return Node::constant(Complex(std::numbers::e, 0.0), "e");

        if (id == "x" && dims_ == 1) return Node::var(0);
        if (id.size() >= 2 && id[0] == 'x' && id[1] != '0') {
            int index = 0;
            auto [ptr, ec] = std::from_chars(id.data() + 1, id.data() + id.size(), index);
            if (ec == std::errc() && ptr == id.data() + id.size() && index >= 1 &&
                index <= dims_) {
                return Node::var(index - 1);
            }
        }
        throw ParseError(start, "unknown identifier '" + std::string(id) + "'",
                         dims_ == 1 ? "x, pi, e or a function" : "x1..x" + std::to_string(dims_) +
                                                                     ", pi, e or a function");
    }

    std::string_view src_;
    int dims_;
    std::size_t pos_ = 0;
};

Complex ipow(Complex base, long long n) {
    if (n < 0) {
        if (base == Complex(0.0, 0.0)) throw DomainError("zero raised to a negative power");
        return Complex(1.0, 0.0) / ipow(base, -n);
    }
    Complex result(1.0, 0.0);
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

Complex eval_node(const Node& n, std::span<const Complex> point) {
    switch (n.kind) {
        case NodeKind::Constant: return n.value;
        case NodeKind::Variable: return point[static_cast<std::size_t>(n.variable)];
        case NodeKind::Negate: return -eval_node(*n.lhs, point);
        case NodeKind::Binary: {
            const Complex a = eval_node(*n.lhs, point);
            long long k = 0;
            if (n.op == BinaryOp::Pow && integer_constant(*n.rhs, k)) return ipow(a, k);
            const Complex b = eval_node(*n.rhs, point);
            switch (n.op) {
                case BinaryOp::Add: return a + b;
                case BinaryOp::Sub: return a - b;
                case BinaryOp::Mul: return a * b;
                case BinaryOp::Div:
                    if (b == Complex(0.0, 0.0)) throw DomainError("division by zero");
                    return a / b;
                case BinaryOp::Pow:
                    if (a == Complex(0.0, 0.0)) throw DomainError("non-integer power of zero");
                    return std::exp(b * std::log(a));
            }
            break;
        }
        case NodeKind::Call: {
            const Complex a = eval_node(*n.lhs, point);
            switch (n.func) {
                case Func::Sin: return std::sin(a);
                case Func::Cos: return std::cos(a);
                case Func::Tan: {
                    const Complex c = std::cos(a);
                    if (c == Complex(0.0, 0.0)) throw DomainError("tan at a pole");
                    return std::sin(a) / c;
                }
                case Func::Exp: return std::exp(a);
                case Func::Log:
                    if (a == Complex(0.0, 0.0)) throw DomainError("log of zero");
                    return std::log(a);
                case Func::Sqrt:
                    if (a == Complex(0.0, 0.0)) throw DomainError("sqrt of zero");
                    return std::sqrt(a);
                case Func::Sinh: return std::sinh(a);
                case Func::Cosh: return std::cosh(a);
            }
            break;
        }
    }
    throw ValidationError("corrupt expression node");
}

}  // namespace

std::string ExprAst::to_string() const {
    std::string out;
    serialize(*root_, dims_, out);
    return out;
}

ExprAst parse(std::string_view src, int dims) {
    if (dims < 1) throw ValidationError("dims must be at least 1");
    Parser p(src, dims);
    return ExprAst(p.parse_all(), dims);
}

Complex eval_complex(const ExprAst& ast, std::span<const Complex> point) {
    if (point.size() != static_cast<std::size_t>(ast.dims())) {
        throw ValidationError("point has " + std::to_string(point.size()) +
                              " coordinates, expression has " + std::to_string(ast.dims()));
    }
    return eval_node(ast.root(), point);
}

Complex eval_complex(const ExprAst& ast, Complex x) {
    return eval_complex(ast, std::span<const Complex>(&x, 1));
}

bool structurally_equal(const Node& a, const Node& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case NodeKind::Constant: return a.value == b.value && a.name == b.name;
        case NodeKind::Variable: return a.variable == b.variable;
        case NodeKind::Negate: return structurally_equal(*a.lhs, *b.lhs);
        case NodeKind::Binary:
            return a.op == b.op && structurally_equal(*a.lhs, *b.lhs) &&
                   structurally_equal(*a.rhs, *b.rhs);
        case NodeKind::Call: return a.func == b.func && structurally_equal(*a.lhs, *b.lhs);
    }
    return false;
}

bool integer_constant(const Node& node, long long& out) {
    if (node.kind == NodeKind::Negate) {
        if (!integer_constant(*node.lhs, out)) return false;
        out = -out;
        return true;
    }
    if (node.kind != NodeKind::Constant || !node.name.empty()) return false;
    const double re = node.value.real();
    if (node.value.imag() != 0.0 || std::trunc(re) != re || std::fabs(re) > 1e9) return false;
    out = static_cast<long long>(re);
    return true;
}

}  // namespace exptaylor
