#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "common/parser_corpus.hpp"
#include "gstx/expr.hpp"

using namespace gstx::expr;

TEST_CASE("corpus round-trips through format") {
    REQUIRE(corpus::valid().size() == 30);
    for (const std::string& s : corpus::valid()) {
        INFO(s);
        const FunctionExpr f = parse(s);
        const std::string text = format(f);
        const FunctionExpr g = parse(text);
        CHECK(f == g);
        CHECK(format(g) == text);
    }
}

TEST_CASE("malformed inputs report their byte offset") {
    for (const corpus::Malformed& m : corpus::malformed()) {
        INFO("'" << m.text << "'");
        try {
            parse(m.text);
            FAIL("no exception");
        } catch (const gstx::UnknownFunction& e) {
            CHECK(m.kind == corpus::Err::UnknownFunction);
            CHECK(e.offset() == m.offset);
        } catch (const gstx::ArityError& e) {
            CHECK(m.kind == corpus::Err::Arity);
            CHECK(e.offset() == m.offset);
        } catch (const gstx::SyntaxError& e) {
            CHECK(m.kind == corpus::Err::Syntax);
            CHECK(e.offset() == m.offset);
        }
    }
}

TEST_CASE("tree shapes") {
    const FunctionExpr fa = parse("exp(-t)");
    const Node& a = fa.root();
    CHECK(a.kind == Kind::Call);
    CHECK(a.func == Func::Exp);
    CHECK(a.args.at(0)->kind == Kind::Neg);
    CHECK(a.args.at(0)->args.at(0)->kind == Kind::Var);

    const FunctionExpr fb = parse("t^2 * sin(t)");
    const Node& b = fb.root();
    CHECK(b.kind == Kind::Mul);
    CHECK(b.args.at(0)->kind == Kind::Pow);
    CHECK(b.args.at(1)->func == Func::Sin);

    const FunctionExpr fc = parse("bessel_j(0.5, t^2)");
    const Node& c = fc.root();
    CHECK(c.func == Func::BesselJ);
    CHECK(c.args.at(0)->number == 0.5);

    // Right associativity of ^.
    const FunctionExpr fd = parse("t^2^3");
    const Node& d = fd.root();
    CHECK(d.args.at(1)->kind == Kind::Pow);
    // Left associativity of - and /.
    CHECK(parse("1 - t - 2").root().args.at(0)->kind == Kind::Sub);
    CHECK(parse("1/t/2").root().args.at(0)->kind == Kind::Div);
    // Negation sits below ^.
    CHECK(parse("-t^2").root().kind == Kind::Pow);
}

TEST_CASE("evaluation") {
    CHECK(evaluate(parse("exp(-t)"), 0) == 1.0);
    CHECK(evaluate(parse("t^0.5"), 4) == 2.0);
    CHECK(evaluate(parse("bessel_j(0, t)"), 1) == doctest::Approx(0.7651976865579666).epsilon(1e-15));
    CHECK(evaluate(parse("pi"), 0) == std::numbers::pi);
    CHECK(evaluate(parse("e"), 0) == std::numbers::e);
    CHECK(evaluate(parse("t^0"), 0) == 1.0);
    CHECK(evaluate(parse("-t^2"), 3) == 9.0);
    CHECK(evaluate(parse("2*t + 3*t^2 - 4"), 2) == 12.0);
    CHECK(evaluate(parse("pow(t, 3)"), -2) == -8.0);
    CHECK(evaluate(parse("ln(e)"), 0) == 1.0);
    const FunctionExpr f = parse("sin(t)/t");
    CHECK(f(0.5) == evaluate(f, 0.5));
    CHECK(FunctionExpr()(7.0) == 1.0);
}

TEST_CASE("evaluation domain errors") {
    CHECK_THROWS_AS(evaluate(parse("ln(t)"), -1), gstx::EvalError);
    CHECK_THROWS_AS(evaluate(parse("ln(t)"), 0), gstx::EvalError);
    CHECK_THROWS_AS(evaluate(parse("1/t"), 0), gstx::EvalError);
    CHECK_THROWS_AS(evaluate(parse("sqrt(t)"), -4), gstx::EvalError);
    CHECK_THROWS_AS(evaluate(parse("t^0.5"), -4), gstx::EvalError);
}

TEST_CASE("structural equality ignores spacing") {
    CHECK(parse("t*(1+t)") == parse("  t  *  ( 1+t )  "));
    CHECK_FALSE(parse("t+1") == parse("1+t"));
}
