#include <array>
#include <charconv>

#include "gstx/expr.hpp"

namespace gstx::expr {

namespace {

// Shortest decimal text that reads back to the same double.
std::string number_text(double x) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), res.ptr);
}

void emit(const Node& n, std::string& out) {
    const auto binary = [&](const char* op) {
        out += '(';
        emit(*n.args[0], out);
        out += op;
        emit(*n.args[1], out);
        out += ')';
    };
    switch (n.kind) {
        case Kind::Number:
            out += number_text(n.number);
            return;
        case Kind::Constant:
            out += n.name;
            return;
        case Kind::Var:
            out += 't';
            return;
        case Kind::Neg:
            // The grammar only allows an atom after unary minus.
            out += '-';
            // Binary nodes already print their own parentheses.
            if (n.args[0]->kind == Kind::Neg) {
                out += '(';
                emit(*n.args[0], out);
                out += ')';
            } else {
                emit(*n.args[0], out);
            }
            return;
        case Kind::Add:
            return binary(" + ");
        case Kind::Sub:
            return binary(" - ");
        case Kind::Mul:
            return binary(" * ");
        case Kind::Div:
            return binary(" / ");
        case Kind::Pow:
            return binary(" ^ ");
        case Kind::Call:
            out += n.name;
            out += '(';
            for (std::size_t i = 0; i < n.args.size(); ++i) {
                if (i > 0) out += ", ";
                emit(*n.args[i], out);
            }
            out += ')';
            return;
    }
}

}  // namespace

std::string format(const FunctionExpr& f) {
    std::string out;
    emit(f.root(), out);
    return out;
}

}  // namespace gstx::expr
