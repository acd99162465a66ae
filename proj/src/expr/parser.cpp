#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "gstx/expr.hpp"

namespace gstx::expr {

namespace {

struct FuncInfo {
    std::string_view name;
    Func func;
    std::size_t arity;
};

constexpr FuncInfo kFunctions[] = {
    {"exp", Func::Exp, 1},  {"sin", Func::Sin, 1},       {"cos", Func::Cos, 1},
    {"ln", Func::Ln, 1},    {"sqrt", Func::Sqrt, 1},     {"pow", Func::Pow, 2},
    {"bessel_j", Func::BesselJ, 2},
};

std::optional<FuncInfo> lookup(std::string_view name) {
    for (const FuncInfo& f : kFunctions)
        if (f.name == name) return f;
    return std::nullopt;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return c >= '0' && c <= '9'; }

NodePtr make(Kind kind, std::size_t offset, std::vector<NodePtr> args = {}) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->offset = offset;
    n->args = std::move(args);
    return n;
}

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    NodePtr parse() {
        skip_ws();
        if (at_end()) throw SyntaxError("empty expression", pos_);
        NodePtr e = expr();
        skip_ws();
        if (!at_end()) throw SyntaxError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        return e;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c, const char* context) {
        skip_ws();
        if (peek() == c) {
            ++pos_;
            return;
        }
        if (at_end()) throw SyntaxError(std::string("expected '") + c + "' " + context + ", found end of input", pos_);
        throw SyntaxError(std::string("expected '") + c + "' " + context, pos_);
    }

    NodePtr expr() {
        NodePtr lhs = term();
        for (;;) {
            skip_ws();
            const std::size_t at = pos_;
            if (accept('+')) lhs = make(Kind::Add, at, {lhs, term()});
            else if (accept('-')) lhs = make(Kind::Sub, at, {lhs, term()});
            else return lhs;
        }
    }

    NodePtr term() {
        NodePtr lhs = factor();
        for (;;) {
            skip_ws();
            const std::size_t at = pos_;
            if (accept('*')) lhs = make(Kind::Mul, at, {lhs, factor()});
            else if (accept('/')) lhs = make(Kind::Div, at, {lhs, factor()});
            else return lhs;
        }
    }

    NodePtr factor() {
        NodePtr base = unary();
        skip_ws();
        const std::size_t at = pos_;
        if (accept('^')) return make(Kind::Pow, at, {base, factor()});
        return base;
    }

    NodePtr unary() {
        skip_ws();
        const std::size_t at = pos_;
        if (accept('-')) return make(Kind::Neg, at, {atom()});
        return atom();
    }

    NodePtr atom() {
        skip_ws();
        const std::size_t at = pos_;
        if (at_end()) throw SyntaxError("expected an operand, found end of input", pos_);
        const char c = peek();
        if (digit(c) || c == '.') return number();
        if (ident_start(c)) return identifier();
        if (c == '(') {
            ++pos_;
            NodePtr inner = expr();
            expect(')', "to close '('");
            return inner;
        }
        throw SyntaxError(std::string("unexpected '") + c + "'", at);
    }

    NodePtr number() {
        const std::size_t start = pos_;
        std::size_t i = pos_;
        bool mantissa_digits = false;
        while (i < s_.size() && digit(s_[i])) ++i, mantissa_digits = true;
        if (i < s_.size() && s_[i] == '.') {
            ++i;
            while (i < s_.size() && digit(s_[i])) ++i, mantissa_digits = true;
        }
        if (!mantissa_digits) throw SyntaxError("malformed number", start);
        if (i < s_.size() && (s_[i] == 'e' || s_[i] == 'E')) {
            std::size_t j = i + 1;
            if (j < s_.size() && (s_[j] == '+' || s_[j] == '-')) ++j;
            if (j >= s_.size() || !digit(s_[j])) throw SyntaxError("malformed exponent", j);
            while (j < s_.size() && digit(s_[j])) ++j;
            i = j;
        }
        double value = 0.0;
        const auto res = std::from_chars(s_.data() + start, s_.data() + i, value);
        if (res.ec != std::errc() || !std::isfinite(value))
            throw SyntaxError("number out of range", start);
        pos_ = i;
        auto n = std::make_shared<Node>();
        n->kind = Kind::Number;
        n->number = value;
        n->offset = start;
        return n;
    }

    NodePtr identifier() {
        const std::size_t start = pos_;
        while (!at_end() && ident_char(s_[pos_])) ++pos_;
        const std::string_view name = s_.substr(start, pos_ - start);
        skip_ws();
        if (peek() == '(') return call(name, start);

        if (name == "t") return make(Kind::Var, start);
        if (name == "pi" || name == "e") {
            auto n = std::make_shared<Node>();
            n->kind = Kind::Constant;
            n->name = std::string(name);
            n->number = name == "pi" ? std::numbers::pi : std::numbers::e;
            n->offset = start;
            return n;
        }
        if (lookup(name)) throw SyntaxError("expected '(' after function '" + std::string(name) + "'", pos_);
        throw SyntaxError("unknown identifier '" + std::string(name) + "'", start);
    }

    NodePtr call(std::string_view name, std::size_t start) {
        const auto info = lookup(name);
        if (!info) throw UnknownFunction("unknown function '" + std::string(name) + "'", start);
        expect('(', "after function name");
        std::vector<NodePtr> args;
        skip_ws();
        if (peek() != ')') {
            args.push_back(expr());
            while (accept(',')) args.push_back(expr());
        }
        expect(')', "to close the argument list");
        if (args.size() != info->arity)
            throw ArityError(std::string(name) + " takes " + std::to_string(info->arity) +
                                 " argument(s), got " + std::to_string(args.size()),
                             start);
        auto n = std::make_shared<Node>();
        n->kind = Kind::Call;
        n->name = std::string(name);
        n->func = info->func;
        n->args = std::move(args);
        n->offset = start;
        return n;
    }
};

}  // namespace

bool equal(const Node& a, const Node& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Kind::Number:
            if (a.number != b.number) return false;
            break;
        case Kind::Constant:
            if (a.name != b.name) return false;
            break;
        case Kind::Call:
            if (a.func != b.func) return false;
            break;
        default:
            break;
    }
    if (a.args.size() != b.args.size()) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!equal(*a.args[i], *b.args[i])) return false;
    return true;
}

FunctionExpr::FunctionExpr() : FunctionExpr(parse("1").root_, "1") {}

FunctionExpr::FunctionExpr(NodePtr root, std::string source)
    : root_(std::move(root)), source_(std::move(source)) {}

FunctionExpr parse(std::string_view text) {
    return FunctionExpr(Parser(text).parse(), std::string(text));
}

}  // namespace gstx::expr
