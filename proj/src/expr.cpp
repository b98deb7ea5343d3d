#include "ifd/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <utility>
#include <vector>

namespace ifd {

ExprPtr make_constant(double value) {
    return std::make_shared<const ExprNode>(ExprNode{ExprNode::Constant{value}});
}

ExprPtr make_variable() {
    return std::make_shared<const ExprNode>(ExprNode{ExprNode::Variable{}});
}

ExprPtr make_unary(UnaryOp op, ExprPtr child) {
    return std::make_shared<const ExprNode>(ExprNode{ExprNode::Unary{op, std::move(child)}});
}

ExprPtr make_binary(BinaryOp op, ExprPtr left, ExprPtr right) {
    return std::make_shared<const ExprNode>(
        ExprNode{ExprNode::Binary{op, std::move(left), std::move(right)}});
}

const double* constant_value(const ExprNode& e) {
    const auto* c = std::get_if<ExprNode::Constant>(&e.node);
    return c ? &c->value : nullptr;
}

bool is_integer_constant(const ExprNode& e) {
    const double* v = constant_value(e);
    return v && std::isfinite(*v) && std::nearbyint(*v) == *v && std::fabs(*v) <= 0x1.0p53;
}

// ---------------------------------------------------------------------------
// Lexer / parser
// ---------------------------------------------------------------------------

namespace {

enum class TokKind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Token(TokKind k, std::size_t p) : kind(k), pos(p) {}

    TokKind kind;
    std::size_t pos;
    double number = 0.0;
    std::string ident;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_])))
            ++i_;
        const std::size_t start = i_;
        if (i_ >= src_.size())
            return {TokKind::End, start};
        const char c = src_[i_];
        switch (c) {
        case '+': ++i_; return {TokKind::Plus, start};
        case '-': ++i_; return {TokKind::Minus, start};
        case '*': ++i_; return {TokKind::Star, start};
        case '/': ++i_; return {TokKind::Slash, start};
        case '^': ++i_; return {TokKind::Caret, start};
        case '(': ++i_; return {TokKind::LParen, start};
        case ')': ++i_; return {TokKind::RParen, start};
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && has_digit_at(i_ + 1)))
            return lex_number(start);
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < src_.size() && std::isalpha(static_cast<unsigned char>(src_[j])))
                ++j;
            Token t{TokKind::Ident, start};
            t.ident.assign(src_.substr(i_, j - i_));
            i_ = j;
            return t;
        }
        throw ParseError(start, std::string("unknown token '") + c + "'");
    }

private:
    bool has_digit_at(std::size_t k) const {
        return k < src_.size() && std::isdigit(static_cast<unsigned char>(src_[k]));
    }

    Token lex_number(std::size_t start) {
        std::size_t j = i_;
        while (has_digit_at(j))
            ++j;
        if (j < src_.size() && src_[j] == '.' && has_digit_at(j + 1)) {
            ++j;
            while (has_digit_at(j))
                ++j;
        }
        // exponent suffix only when it is unambiguously part of the number
        if (j < src_.size() && (src_[j] == 'e' || src_[j] == 'E')) {
            std::size_t k = j + 1;
            if (k < src_.size() && (src_[k] == '+' || src_[k] == '-'))
                ++k;
            if (has_digit_at(k)) {
                j = k;
                while (has_digit_at(j))
                    ++j;
            }
        }
        double value = 0.0;
        const char* first = src_.data() + i_;
        const char* last = src_.data() + j;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last)
            throw ParseError(start, "number out of range or malformed");
        i_ = j;
        Token t{TokKind::Number, start};
        t.number = value;
        return t;
    }

    std::string_view src_;
    std::size_t i_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { advance(); }

    ExprPtr run() {
        ExprPtr e = parse_expr();
        if (tok_.kind != TokKind::End)
            throw ParseError(tok_.pos, "trailing input after expression");
        return e;
    }

private:
    void advance() { tok_ = lexer_.next(); }

    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        while (tok_.kind == TokKind::Plus || tok_.kind == TokKind::Minus) {
            const BinaryOp op = tok_.kind == TokKind::Plus ? BinaryOp::Add : BinaryOp::Sub;
            advance();
            e = make_binary(op, std::move(e), parse_term());
        }
        return e;
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_factor();
        while (tok_.kind == TokKind::Star || tok_.kind == TokKind::Slash) {
            const BinaryOp op = tok_.kind == TokKind::Star ? BinaryOp::Mul : BinaryOp::Div;
            advance();
            e = make_binary(op, std::move(e), parse_factor());
        }
        return e;
    }

    // factor := [-] power, so "-t^2" is -(t^2)
    ExprPtr parse_factor() {
        if (tok_.kind == TokKind::Minus) {
            advance();
            return make_unary(UnaryOp::Neg, parse_factor());
        }
        return parse_power();
    }

    ExprPtr parse_power() {
        ExprPtr base = parse_atom();
        if (tok_.kind == TokKind::Caret) {
            advance();
            return make_binary(BinaryOp::Pow, std::move(base), parse_factor());
        }
        return base;
    }

    ExprPtr parse_atom() {
        switch (tok_.kind) {
        case TokKind::Number: {
            const double v = tok_.number;
            advance();
            return make_constant(v);
        }
        case TokKind::LParen: {
            advance();
            ExprPtr e = parse_expr();
            expect(TokKind::RParen, "expected ')'");
            return e;
        }
        case TokKind::Ident:
            return parse_ident();
        default:
            throw ParseError(tok_.pos, "expected a number, variable, function or '('");
        }
    }

    ExprPtr parse_ident() {
        const std::string name = tok_.ident;
        const std::size_t pos = tok_.pos;
        advance();
        if (name == "t" || name == "x")
            return make_variable();
        if (name == "pi")
            return make_constant(M_PI);
        if (name == "e")
            return make_constant(M_E);
        UnaryOp op;
        if (name == "sin") op = UnaryOp::Sin;
        else if (name == "cos") op = UnaryOp::Cos;
        else if (name == "tan") op = UnaryOp::Tan;
        else if (name == "exp") op = UnaryOp::Exp;
        else if (name == "ln") op = UnaryOp::Ln;
        else if (name == "sqrt") op = UnaryOp::Sqrt;
        else if (name == "atan") op = UnaryOp::Atan;
        else throw ParseError(pos, "unknown function or constant '" + name + "'");
        expect(TokKind::LParen, "expected '(' after function name");
        ExprPtr arg = parse_expr();
        expect(TokKind::RParen, "expected ')'");
        return make_unary(op, std::move(arg));
    }

    void expect(TokKind kind, const char* message) {
        if (tok_.kind != kind)
            throw ParseError(tok_.pos, message);
        advance();
    }

    Lexer lexer_;
    Token tok_{TokKind::End, 0};
};

} // namespace

ExprPtr parse(std::string_view source) {
    if (source.empty())
        throw ParseError(0, "empty input");
    return Parser(source).run();
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

double evaluate(const ExprNode& e, double t) {
    struct Visitor {
        double t;
        double operator()(const ExprNode::Constant& c) const { return c.value; }
        double operator()(const ExprNode::Variable&) const { return t; }
        double operator()(const ExprNode::Unary& u) const {
            const double v = evaluate(*u.child, t);
            switch (u.op) {
            case UnaryOp::Neg: return -v;
            case UnaryOp::Sin: return std::sin(v);
            case UnaryOp::Cos: return std::cos(v);
            case UnaryOp::Tan: return std::tan(v);
            case UnaryOp::Exp: return std::exp(v);
            case UnaryOp::Ln: return std::log(v);
            case UnaryOp::Sqrt: return std::sqrt(v);
            case UnaryOp::Atan: return std::atan(v);
            }
            return std::numeric_limits<double>::quiet_NaN();
        }
        double operator()(const ExprNode::Binary& b) const {
            const double l = evaluate(*b.left, t);
            const double r = evaluate(*b.right, t);
            switch (b.op) {
            case BinaryOp::Add: return l + r;
            case BinaryOp::Sub: return l - r;
            case BinaryOp::Mul: return l * r;
            case BinaryOp::Div: return l / r;
            case BinaryOp::Pow: return std::pow(l, r);
            }
            return std::numeric_limits<double>::quiet_NaN();
        }
    };
    return std::visit(Visitor{t}, e.node);
}

// ---------------------------------------------------------------------------
// Simplification
// ---------------------------------------------------------------------------

namespace {

bool is_constant_equal(const ExprNode& e, double v) {
    const double* c = constant_value(e);
    return c && *c == v;
}

ExprPtr simplify_unary(UnaryOp op, ExprPtr child) {
    if (constant_value(*child)) {
        const double folded = evaluate(*make_unary(op, child), 0.0);
        if (std::isfinite(folded))
            return make_constant(folded);
    }
    return make_unary(op, std::move(child));
}

ExprPtr simplify_binary(BinaryOp op, ExprPtr left, ExprPtr right) {
    const bool zero_zero_pow =
        op == BinaryOp::Pow && is_constant_equal(*left, 0.0) && is_constant_equal(*right, 0.0);
    if (constant_value(*left) && constant_value(*right) && !zero_zero_pow) {
        const double folded = evaluate(*make_binary(op, left, right), 0.0);
        if (std::isfinite(folded))
            return make_constant(folded);
    }
    switch (op) {
    case BinaryOp::Add:
        if (is_constant_equal(*left, 0.0)) return right;
        if (is_constant_equal(*right, 0.0)) return left;
        break;
    case BinaryOp::Sub:
        if (is_constant_equal(*right, 0.0)) return left;
        break;
    case BinaryOp::Mul:
        if (is_constant_equal(*left, 0.0) || is_constant_equal(*right, 0.0))
            return make_constant(0.0);
        if (is_constant_equal(*left, 1.0)) return right;
        if (is_constant_equal(*right, 1.0)) return left;
        break;
    case BinaryOp::Div:
        if (is_constant_equal(*right, 1.0)) return left;
        break;
    case BinaryOp::Pow:
        if (is_constant_equal(*right, 1.0)) return left;
        if (is_constant_equal(*right, 0.0) && !is_constant_equal(*left, 0.0))
            return make_constant(1.0);
        break;
    }
    return make_binary(op, std::move(left), std::move(right));
}

} // namespace

ExprPtr simplify(const ExprPtr& e) {
    struct Visitor {
        const ExprPtr& self;
        ExprPtr operator()(const ExprNode::Constant&) const { return self; }
        ExprPtr operator()(const ExprNode::Variable&) const { return self; }
        ExprPtr operator()(const ExprNode::Unary& u) const {
            return simplify_unary(u.op, simplify(u.child));
        }
        ExprPtr operator()(const ExprNode::Binary& b) const {
            return simplify_binary(b.op, simplify(b.left), simplify(b.right));
        }
    };
    return std::visit(Visitor{e}, e->node);
}

// ---------------------------------------------------------------------------
// Differentiation
// ---------------------------------------------------------------------------

namespace {

ExprPtr derive(const ExprPtr& e);

ExprPtr derive_unary(const ExprNode::Unary& u) {
    const ExprPtr& c = u.child;
    ExprPtr dc = derive(c);
    switch (u.op) {
    case UnaryOp::Neg:
        return make_unary(UnaryOp::Neg, std::move(dc));
    case UnaryOp::Sin:
        return make_binary(BinaryOp::Mul, make_unary(UnaryOp::Cos, c), std::move(dc));
    case UnaryOp::Cos:
        return make_binary(BinaryOp::Mul,
                           make_unary(UnaryOp::Neg, make_unary(UnaryOp::Sin, c)),
                           std::move(dc));
    case UnaryOp::Tan:
        // dc / cos(c)^2
        return make_binary(BinaryOp::Div, std::move(dc),
                           make_binary(BinaryOp::Pow, make_unary(UnaryOp::Cos, c),
                                       make_constant(2.0)));
    case UnaryOp::Exp:
        return make_binary(BinaryOp::Mul, make_unary(UnaryOp::Exp, c), std::move(dc));
    case UnaryOp::Ln:
        return make_binary(BinaryOp::Div, std::move(dc), c);
    case UnaryOp::Sqrt:
        // dc / (2*sqrt(c))
        return make_binary(BinaryOp::Div, std::move(dc),
                           make_binary(BinaryOp::Mul, make_constant(2.0),
                                       make_unary(UnaryOp::Sqrt, c)));
    case UnaryOp::Atan:
        // dc / (1 + c^2)
        return make_binary(BinaryOp::Div, std::move(dc),
                           make_binary(BinaryOp::Add, make_constant(1.0),
                                       make_binary(BinaryOp::Pow, c, make_constant(2.0))));
    }
    return make_constant(std::numeric_limits<double>::quiet_NaN());
}

ExprPtr derive_binary(const ExprNode::Binary& b) {
    const ExprPtr& u = b.left;
    const ExprPtr& v = b.right;
    switch (b.op) {
    case BinaryOp::Add:
        return make_binary(BinaryOp::Add, derive(u), derive(v));
    case BinaryOp::Sub:
        return make_binary(BinaryOp::Sub, derive(u), derive(v));
    case BinaryOp::Mul:
        return make_binary(BinaryOp::Add,
                           make_binary(BinaryOp::Mul, derive(u), v),
                           make_binary(BinaryOp::Mul, u, derive(v)));
    case BinaryOp::Div:
        // (du*v - u*dv) / v^2
        return make_binary(
            BinaryOp::Div,
            make_binary(BinaryOp::Sub, make_binary(BinaryOp::Mul, derive(u), v),
                        make_binary(BinaryOp::Mul, u, derive(v))),
            make_binary(BinaryOp::Pow, v, make_constant(2.0)));
    case BinaryOp::Pow:
        if (is_integer_constant(*v)) {
            // power rule: n * u^(n-1) * du
            const double n = *constant_value(*v);
            return make_binary(
                BinaryOp::Mul,
                make_binary(BinaryOp::Mul, make_constant(n),
                            make_binary(BinaryOp::Pow, u, make_constant(n - 1.0))),
                derive(u));
        }
        // general rule: u^v * (dv*ln(u) + v*du/u)
        return make_binary(
            BinaryOp::Mul, make_binary(BinaryOp::Pow, u, v),
            make_binary(BinaryOp::Add,
                        make_binary(BinaryOp::Mul, derive(v), make_unary(UnaryOp::Ln, u)),
                        make_binary(BinaryOp::Div, make_binary(BinaryOp::Mul, v, derive(u)),
                                    u)));
    }
    return make_constant(std::numeric_limits<double>::quiet_NaN());
}

ExprPtr derive(const ExprPtr& e) {
    struct Visitor {
        ExprPtr operator()(const ExprNode::Constant&) const { return make_constant(0.0); }
        ExprPtr operator()(const ExprNode::Variable&) const { return make_constant(1.0); }
        ExprPtr operator()(const ExprNode::Unary& u) const { return derive_unary(u); }
        ExprPtr operator()(const ExprNode::Binary& b) const { return derive_binary(b); }
    };
    return std::visit(Visitor{}, e->node);
}

} // namespace

ExprPtr differentiate(const ExprPtr& e) {
    return simplify(derive(e));
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

// Precedence levels used by the printer: add/sub 1, mul/div 2, unary
// minus 3, pow 4, atoms 5. Negative constants print like a unary minus.
int print_precedence(const ExprNode& e) {
    struct Visitor {
        int operator()(const ExprNode::Constant& c) const { return c.value < 0.0 ? 3 : 5; }
        int operator()(const ExprNode::Variable&) const { return 5; }
        int operator()(const ExprNode::Unary& u) const {
            return u.op == UnaryOp::Neg ? 3 : 5;
        }
        int operator()(const ExprNode::Binary& b) const {
            switch (b.op) {
            case BinaryOp::Add:
            case BinaryOp::Sub: return 1;
            case BinaryOp::Mul:
            case BinaryOp::Div: return 2;
            case BinaryOp::Pow: return 4;
            }
            return 5;
        }
    };
    return std::visit(Visitor{}, e.node);
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

const char* function_name(UnaryOp op) {
    switch (op) {
    case UnaryOp::Sin: return "sin";
    case UnaryOp::Cos: return "cos";
    case UnaryOp::Tan: return "tan";
    case UnaryOp::Exp: return "exp";
    case UnaryOp::Ln: return "ln";
    case UnaryOp::Sqrt: return "sqrt";
    case UnaryOp::Atan: return "atan";
    case UnaryOp::Neg: break;
    }
    return "?";
}

void print_node(const ExprNode& e, int context, std::string& out) {
    const int prec = print_precedence(e);
    const bool parens = prec < context;
    if (parens)
        out += '(';
    struct Visitor {
        std::string& out;
        void operator()(const ExprNode::Constant& c) const { out += format_number(c.value); }
        void operator()(const ExprNode::Variable&) const { out += 't'; }
        void operator()(const ExprNode::Unary& u) const {
            if (u.op == UnaryOp::Neg) {
                out += '-';
                print_node(*u.child, 3, out);
            } else {
                out += function_name(u.op);
                out += '(';
                print_node(*u.child, 0, out);
                out += ')';
            }
        }
        void operator()(const ExprNode::Binary& b) const {
            switch (b.op) {
            case BinaryOp::Add:
                print_node(*b.left, 1, out);
                out += " + ";
                print_node(*b.right, 2, out);
                break;
            case BinaryOp::Sub:
                print_node(*b.left, 1, out);
                out += " - ";
                print_node(*b.right, 2, out);
                break;
            case BinaryOp::Mul:
                print_node(*b.left, 2, out);
                out += "*";
                print_node(*b.right, 3, out);
                break;
            case BinaryOp::Div:
                print_node(*b.left, 2, out);
                out += "/";
                print_node(*b.right, 3, out);
                break;
            case BinaryOp::Pow:
                print_node(*b.left, 5, out);
                out += "^";
                print_node(*b.right, 3, out);
                break;
            }
        }
    };
    std::visit(Visitor{out}, e.node);
    if (parens)
        out += ')';
}

} // namespace

std::string to_text(const ExprPtr& e) {
    std::string out;
    print_node(*e, 0, out);
    return out;
}

} // namespace ifd
