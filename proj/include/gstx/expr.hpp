#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gstx/error.hpp"

/// Integrand mini-language.
///
///     expr   := term (('+' | '-') term)*
///     term   := factor (('*' | '/') factor)*
///     factor := unary ('^' factor)?
///     unary  := '-'? atom
///     atom   := number | 't' | ident '(' args ')' | '(' expr ')'
///
/// `^` is right-associative and binds tighter than `*`; because negation sits
/// below `^`, `-t^2` reads as `(-t)^2`. Identifiers `pi` and `e` are constants.
/// Functions: exp, sin, cos, ln, sqrt (one argument), pow(x, y), bessel_j(nu, x).
namespace gstx::expr {

enum class Kind { Number, Constant, Var, Neg, Add, Sub, Mul, Div, Pow, Call };

enum class Func { Exp, Sin, Cos, Ln, Sqrt, Pow, BesselJ };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    Kind kind = Kind::Number;
    double number = 0.0;      // Number and Constant
    std::string name;         // Constant and Call
    Func func = Func::Exp;    // Call
    std::vector<NodePtr> args;
    std::size_t offset = 0;   // byte offset of the node in its source
};

/// Structural equality; source offsets are ignored.
bool equal(const Node& a, const Node& b);

/// Immutable, cheaply copyable parsed expression in the variable t.
class FunctionExpr {
public:
    FunctionExpr();  // the constant 1
    explicit FunctionExpr(NodePtr root, std::string source = {});

    const Node& root() const { return *root_; }
    const std::string& source() const { return source_; }

    double operator()(double t) const;

    friend bool operator==(const FunctionExpr& a, const FunctionExpr& b) {
        return equal(*a.root_, *b.root_);
    }

private:
    NodePtr root_;
    std::string source_;
};

/// Throws SyntaxError, UnknownFunction or ArityError with the byte offset.
FunctionExpr parse(std::string_view text);

/// Throws EvalError on a domain violation (ln of a non-positive number,
/// division by zero, a negative base to a non-integer power, ...).
double evaluate(const FunctionExpr& f, double t);

/// Re-parseable text; every binary operation is parenthesized.
std::string format(const FunctionExpr& f);

}  // namespace gstx::expr
