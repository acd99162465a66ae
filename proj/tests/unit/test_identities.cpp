#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <string>
#include <utility>

#include "gstx/identities.hpp"
#include "gstx/specfun.hpp"
#include "oracles/oracle_values.hpp"

using namespace gstx::identities;
namespace sf = gstx::specfun;

namespace {

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

Inputs make(std::initializer_list<std::pair<const char*, double>> params,
            std::optional<double> y = {}, const char* f = nullptr, const char* g = nullptr) {
    Inputs in;
    for (const auto& [name, value] : params) *in.params.field(name) = value;
    in.y = y;
    if (f) in.f = FunctionSlot::from_expr(f);
    if (g) in.g = FunctionSlot::from_expr(g);
    return in;
}

}  // namespace

TEST_CASE("catalog contents") {
    const auto& all = list_identities();
    CHECK(all.size() == 28);
    REQUIRE(find_identity("LLS") != nullptr);
    CHECK(find_identity("LLS")->citation == "Lemma 1");
    REQUIRE(find_identity("LFSR2") != nullptr);
    CHECK(find_identity("LFSR2")->citation == "Theorem 3");
    CHECK(find_identity("NOPE") == nullptr);
    int audits = 0;
    for (const IdentityCatalogEntry& e : all) {
        audits += e.audit_only;
        CHECK(e.lhs);
        CHECK(e.rhs);
    }
    CHECK(audits == 1);
    CHECK(find_identity("APP6")->audit_only);
}

TEST_CASE("LLS at unit parameters") {
    const IdentityReport r =
        check_identity("LLS", make({{"alpha", 1}, {"delta", 1}, {"mu", 1}}, 1.0, "exp(-t)"));
    CHECK(r.passed);
    CHECK(r.status == Status::Passed);
    CHECK(rel(r.lhs_value, 0.5963473623231940) < 1e-8);
    CHECK(rel(r.rhs_value, 0.5963473623231940) < 1e-8);
    CHECK(rel(r.lhs_value, oracle::LLS_1_1_1_1) < 1e-9);
    CHECK(r.lhs_quad_diag.inner_calls > 0);
    CHECK(r.lhs_quad_diag.inner_unconverged == 0);
}

TEST_CASE("SS1 symmetric case") {
    const IdentityReport r = check_identity(
        "SS1", make({{"alpha", 2}, {"delta", 2}, {"mu", 1}, {"lambda", 1}}, {}, "exp(-t)", "exp(-t)"));
    CHECK(r.passed);
    CHECK(r.rel_err < 1e-12);
}

TEST_CASE("sides agree with independent high-precision values") {
    struct Case {
        const char* id;
        Inputs in;
        bool lhs;
        double want;
        double tol;
    };
    const Case cases[] = {
        {"LLS", make({{"alpha", 2.5}, {"delta", 1.5}, {"mu", 2}}, 0.5, "1/(1+t^2)"), false,
         oracle::LLS_rhs_2p5_1p5_2_0p5_rational, 1e-9},
        {"LLSAMR1", make({{"alpha", 1.5}, {"delta", 2.5}, {"mu", 1}, {"lambda", 1.5}}, {}, "exp(-t)",
                         "exp(-2*t)"),
         true, oracle::LLSAMR_1p5_2p5_1_1p5, 1e-8},
        {"LAMFSAM", make({{"alpha", 1.5}, {"delta", 2}, {"mu", 1}}, 1.0, "exp(-t)"), true,
         oracle::LAMFSAM_1p5_2_1_1, 1e-7},
        {"LFSS2", make({{"alpha", 1.5}, {"delta", 2}, {"mu", 1}, {"lambda", 1}}, {}, "exp(-t)",
                       "exp(-t)"),
         true, oracle::LFSS2_1p5_2_1_1, 1e-6},
        {"SDMRLAM", make({{"alpha", 2.5}, {"delta", 1.5}, {"mu", 1}, {"rho", 0.75}}, 1.0, "exp(-t)"),
         true, oracle::SDMRLAM_2p5_1p5_1_0p75_1, 1e-8},
        {"LAMSDMR", make({{"alpha", 1.5}, {"delta", 2.5}, {"mu", 1}, {"rho", 0.75}}, 1.0, "exp(-t)"),
         true, oracle::LAMSDMR_1p5_2p5_1_0p75_1, 1e-8},
        {"LFSR1",
         make({{"alpha", 2}, {"delta", 1.5}, {"mu", 1}, {"lambda", 1}, {"rho", 0.75}}, {}, "exp(-t)",
              "exp(-2*t)"),
         true, oracle::LFSR_2_1p5_1_1_0p75, 1e-8},
        {"APP5",
         make({{"alpha", 1.5}, {"beta", 0}, {"delta", 0.5}, {"lambda", 1.5}, {"mu", 1}, {"nu", 0.5},
               {"a", 1}}),
         true, oracle::APP5_1p5_0_0p5_1p5_1_0p5_1, 1e-8},
        {"P342", make({{"alpha", 1}, {"beta", 0.5}, {"mu", 1}, {"nu", 1.5}, {"a", 0.5}}, 2.0), true,
         oracle::P342_1_0p5_1_1p5_0p5_2, 1e-9},
        {"UI_UII", make({{"lambda", 1}, {"p", 2}, {"delta", 1}, {"a", 0.5}, {"c", 0.3}, {"v", 3}}),
         true, oracle::UI_lhs_1_2_1_0p5_0p3_3, 1e-9},
    };
    for (const Case& c : cases) {
        INFO(c.id);
        const IdentityReport r = check_identity(c.id, c.in);
        CHECK(r.passed);
        CHECK(rel(c.lhs ? r.lhs_value : r.rhs_value, c.want) < c.tol);
    }
}

TEST_CASE("closed forms: worked values") {
    CHECK(rel(closed_form_rhs("APP0", make({{"alpha", 2}, {"mu", 1}, {"lambda", 1}}, 2.0)), 0.25) <
          1e-14);
    CHECK(rel(closed_form_rhs("APP1", make({{"alpha", 2}, {"delta", 1}, {"mu", 1}, {"lambda", 1}}, 2.0)),
              0.5) < 1e-14);
    CHECK(rel(closed_form_rhs("APP2", make({{"alpha", 1}, {"delta", 1}, {"mu", 1}, {"a", 1}}, 1.0)),
              oracle::tricomi_1_1_1) < 1e-12);
    CHECK_THROWS_AS(closed_form_rhs("LLS", make({{"alpha", 1}, {"delta", 1}, {"mu", 1}}, 1.0)),
                    gstx::DomainError);
}

TEST_CASE("APP3 with equal scales collapses to a Gamma ratio") {
    const double al = 2.5, d = 1.5, m = 1.0, l = 1.5, a = 1.3;
    const Inputs in = make({{"alpha", al}, {"delta", d}, {"mu", m}, {"lambda", l}, {"a", a}, {"b", a}});
    const double want = std::pow(a, l - d) / (m * std::pow(a, al)) * sf::gamma(l / m) *
                        sf::gamma((al - l + d) / m) / sf::gamma((al + d) / m);
    CHECK(rel(closed_form_rhs("APP3", in), want) < 1e-12);
    const IdentityReport r = check_identity("APP3", in);
    CHECK(r.passed);
    CHECK(r.rel_err <= 1e-8);
}

TEST_CASE("APP6 is reported as an audit") {
    const IdentityReport r = check_identity(
        "APP6", make({{"alpha", 1.5}, {"delta", 1}, {"lambda", 1}, {"mu", 1}, {"rho", 0.75}, {"a", 2},
                      {"b", 1}}));
    CHECK(r.audit_only);
    CHECK(r.status == Status::Audited);
}

TEST_CASE("constraints and missing inputs") {
    CHECK_THROWS_AS(
        check_identity("LAMSDMR", make({{"alpha", 0.5}, {"delta", 2}, {"mu", 1}, {"rho", 0.75}}, 1.0,
                                       "exp(-t)")),
        gstx::ConstraintViolation);
    CHECK_THROWS_AS(check_identity("LLS", make({{"alpha", 1}, {"mu", 1}}, 1.0, "exp(-t)")),
                    gstx::DomainError);
    CHECK_THROWS_AS(check_identity("LLS", make({{"alpha", 1}, {"delta", 1}, {"mu", 1}}, 1.0)),
                    gstx::DomainError);
    CHECK_THROWS_AS(check_identity("NOPE", Inputs{}), gstx::DomainError);
}

TEST_CASE("pass rule uses the tolerance or the absolute floor") {
    const Inputs in = make({{"alpha", 1}, {"delta", 1}, {"mu", 1}}, 1.0, "exp(-t)");
    const IdentityReport tight = check_identity("LLS", in, {}, 1e-30);
    CHECK(tight.passed == (tight.rel_err <= 1e-30 || tight.abs_err <= kAbsFloor));
    CHECK(tight.tol == 1e-30);
}

TEST_CASE("typo audit picks Gamma(nu) decisively") {
    const TypoAudit a = run_typo_audit();
    CHECK(a.winner == AuditConstant::GammaNu);
    CHECK(a.decisive);
    CHECK(a.points.size() >= 3);
    for (const AuditPoint& p : a.points) {
        CHECK(p.rel_err_nu <= 1e-8);
        CHECK(p.rel_err_a >= 1e-2);
        if (p.sine && p.nu == 1.5 && p.a == 2 && p.y == 1)
            CHECK(rel(p.integral, oracle::audit_sin_1p5_2_1) < 1e-10);
    }
    CHECK(lemma2_constant() == AuditConstant::GammaNu);
    CHECK(a.summary.find("Gamma(nu)") != std::string::npos);
}

TEST_CASE("suite: small grids") {
    GridSpec one;
    one.identities = std::vector<std::string>{"LLS"};
    one.values = {{"alpha", {1}}, {"delta", {1}}, {"mu", {1}}, {"y", {1}}};
    one.f = {"exp(-t)"};
    const SuiteResult r = run_suite(one, {}, 2);
    CHECK(r.reports.size() == 1);
    CHECK(r.summary.total == 1);
    CHECK(r.summary.passed == 1);

    GridSpec skip;
    skip.identities = std::vector<std::string>{"LAMSDMR"};
    skip.values = {{"alpha", {0.5}}, {"delta", {2}}, {"mu", {1}}, {"rho", {0.75}}, {"y", {1}}};
    skip.f = {"exp(-t)"};
    const SuiteResult s = run_suite(skip, {}, 1);
    CHECK(s.summary.skipped == 1);
    CHECK(s.summary.failed == 0);
    CHECK(s.reports.at(0).status == Status::Skipped);

    GridSpec none;
    none.identities = std::vector<std::string>{};
    CHECK(run_suite(none).summary.total == 0);
}

TEST_CASE("suite: grid expansion and ordering") {
    GridSpec g;
    g.identities = std::vector<std::string>{"APP0", "P343"};
    g.values = {{"alpha", {1, 2}}, {"mu", {1}}, {"lambda", {1, 2, 3}}, {"delta", {0.5}}, {"y", {1, 2}}};
    g.overrides = {{"P343.y", {3}}};
    CHECK(expand_grid(g, *find_identity("APP0")).size() == 12);
    CHECK(expand_grid(g, *find_identity("P343")).size() == 1);
    const SuiteResult a = run_suite(g, {}, 1);
    const SuiteResult b = run_suite(g, {}, 4);
    REQUIRE(a.reports.size() == 13);
    REQUIRE(b.reports.size() == 13);
    for (std::size_t i = 0; i < a.reports.size(); ++i) {
        CHECK(a.reports[i].id == b.reports[i].id);
        CHECK(a.reports[i].lhs_value == b.reports[i].lhs_value);
    }
    CHECK(a.reports.back().id == "P343");
    CHECK(a.summary.failed == 0);
}
