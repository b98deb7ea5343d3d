#ifndef IFD_EXPR_HPP
#define IFD_EXPR_HPP

#include <memory>
#include <string>
#include <string_view>
#include <variant>

#include "ifd/errors.hpp"

namespace ifd {

enum class UnaryOp { Neg, Sin, Cos, Tan, Exp, Ln, Sqrt, Atan };
enum class BinaryOp { Add, Sub, Mul, Div, Pow };

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

// Immutable AST node of a univariate real function of t. Nodes are
// shared freely between expressions; all operations on them are pure.
struct ExprNode {
    struct Constant {
        double value;
    };
    struct Variable {};
    struct Unary {
        UnaryOp op;
        ExprPtr child;
    };
    struct Binary {
        BinaryOp op;
        ExprPtr left;
        ExprPtr right;
    };

    std::variant<Constant, Variable, Unary, Binary> node;
};

ExprPtr make_constant(double value);
ExprPtr make_variable();
ExprPtr make_unary(UnaryOp op, ExprPtr child);
ExprPtr make_binary(BinaryOp op, ExprPtr left, ExprPtr right);

// If e is a constant, returns a pointer to its value, else nullptr.
const double* constant_value(const ExprNode& e);

// True for a constant whose value is an exact integer (within the range
// where doubles represent integers exactly).
bool is_integer_constant(const ExprNode& e);

// Parses the expression grammar:
//   expr   := term { ("+"|"-") term }
//   term   := factor { ("*"|"/") factor }
//   factor := "-" factor | power           (unary minus binds looser than ^)
//   power  := atom [ "^" factor ]          (right-associative)
//   atom   := NUMBER | "t" | "x" | "pi" | "e" | FUNC "(" expr ")" | "(" expr ")"
//   FUNC   := sin | cos | tan | exp | ln | sqrt | atan
// Whitespace-insensitive. "x" is an alias for the variable t. Numbers may
// use a leading dot (".9") and an exponent suffix ("1e-3").
// Throws ParseError on unknown tokens, unbalanced parentheses, unknown
// function names and trailing garbage.
ExprPtr parse(std::string_view source);

// Standard real evaluation at t; out-of-domain inputs propagate NaN/inf
// instead of raising.
double evaluate(const ExprNode& e, double t);

inline double evaluate(const ExprPtr& e, double t) { return evaluate(*e, t); }

// Exact symbolic derivative with respect to t, simplified before return.
ExprPtr differentiate(const ExprPtr& e);

// Value-preserving rewrites only: constant folding (finite results),
// x+0, x*1, x*0, x^1 and x^0 -> 1 (0^0 is left unfolded).
ExprPtr simplify(const ExprPtr& e);

// Emits a string that parse() maps back to an evaluation-equivalent AST.
std::string to_text(const ExprPtr& e);

} // namespace ifd

#endif
