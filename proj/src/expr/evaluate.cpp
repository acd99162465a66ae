#include <cmath>
#include <string>

#include "gstx/expr.hpp"
#include "gstx/specfun.hpp"

namespace gstx::expr {

namespace {

double power(double x, double y) {
    if (y == 0.0) return 1.0;  // includes 0^0
    if (x < 0.0 && y != std::floor(y))
        throw EvalError("negative base " + std::to_string(x) + " raised to non-integer power");
    if (x == 0.0 && y < 0.0) throw EvalError("zero raised to a negative power");
    return std::pow(x, y);
}

double eval(const Node& n, double t) {
    switch (n.kind) {
        case Kind::Number:
        case Kind::Constant:
            return n.number;
        case Kind::Var:
            return t;
        case Kind::Neg:
            return -eval(*n.args[0], t);
        case Kind::Add:
            return eval(*n.args[0], t) + eval(*n.args[1], t);
        case Kind::Sub:
            return eval(*n.args[0], t) - eval(*n.args[1], t);
        case Kind::Mul:
            return eval(*n.args[0], t) * eval(*n.args[1], t);
        case Kind::Div: {
            const double den = eval(*n.args[1], t);
            if (den == 0.0) throw EvalError("division by zero");
            return eval(*n.args[0], t) / den;
        }
        case Kind::Pow:
            return power(eval(*n.args[0], t), eval(*n.args[1], t));
        case Kind::Call:
            break;
    }
    const double x = eval(*n.args[0], t);
    switch (n.func) {
        case Func::Exp:
            return std::exp(x);
        case Func::Sin:
            return std::sin(x);
        case Func::Cos:
            return std::cos(x);
        case Func::Ln:
            if (!(x > 0.0)) throw EvalError("ln of non-positive argument " + std::to_string(x));
            return std::log(x);
        case Func::Sqrt:
            if (x < 0.0) throw EvalError("sqrt of negative argument " + std::to_string(x));
            return std::sqrt(x);
        case Func::Pow:
            return power(x, eval(*n.args[1], t));
        case Func::BesselJ: {
            const double arg = eval(*n.args[1], t);
            try {
                return specfun::bessel_j(x, arg);
            } catch (const DomainError& e) {
                throw EvalError(e.what());
            }
        }
    }
    throw EvalError("unhandled node");
}

}  // namespace

double evaluate(const FunctionExpr& f, double t) { return eval(f.root(), t); }

double FunctionExpr::operator()(double t) const { return eval(*root_, t); }

}  // namespace gstx::expr
