#include <doctest.h>

#include <cmath>
#include <numbers>

#include "common/draws.hpp"
#include "gstx/specfun.hpp"
#include "gstx/transforms.hpp"
#include "oracles/oracle_values.hpp"

using namespace gstx::transforms;
using gstx::expr::parse;

namespace {

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

const RealFunction one = [](double) { return 1.0; };
const RealFunction ex = [](double t) { return std::exp(-t); };

}  // namespace

TEST_CASE("l_transform: examples") {
    CHECK(rel(l_transform(one, 1, 1, 2).value, 0.5) < 1e-12);
    CHECK(rel(l_transform(one, 2, 2, 1).value, 0.5) < 1e-12);
    CHECK(rel(l_transform([](double t) { return std::exp(-t * t); }, 2, 2, 1).value, 0.25) < 1e-12);
    CHECK(rel(l_transform([](double t) { return 1 / (1 + t * t); }, 1.5, 2, 0.7).value,
              oracle::l_inv_1p5_2_0p7) < 1e-10);
}

TEST_CASE("l_transform: large and tiny arguments") {
    // L_{a,1}{1; y} = Gamma(a) / y^a across many decades.
    for (double y : {1e-3, 1.0, 1e3, 1e8, 1e12}) {
        INFO("y " << y);
        CHECK(rel(l_transform(one, 1.5, 1, y).value, gstx::specfun::gamma(1.5) * std::pow(y, -1.5)) <
              1e-10);
    }
}

TEST_CASE("stieltjes_transform: examples") {
    CHECK(rel(stieltjes_transform(one, 1, 1, 2, 2).value, 0.5) < 1e-10);
    CHECK(rel(stieltjes_transform(one, 2, 2, 2, 1).value, 0.5) < 1e-10);
    CHECK(rel(stieltjes_transform(ex, 1, 1, 1, 1).value, 0.5963473623231940) < 1e-10);
    CHECK(rel(stieltjes_transform(ex, 1, 1, 1, 1).value, oracle::stieltjes_exp_1_1_1) < 1e-10);
}

TEST_CASE("fourier transforms: examples") {
    CHECK(rel(fourier_sine_transform(ex, 1, 1, 1).value, 0.5) < 1e-9);
    CHECK(rel(fourier_cosine_transform(ex, 1, 1, 1).value, 0.5) < 1e-9);
    const RealFunction inv_sqrt = [](double t) { return 1 / std::sqrt(t); };
    CHECK(rel(fourier_sine_transform(inv_sqrt, 1, 1, 1).value, std::sqrt(std::numbers::pi / 2)) <
          1e-9);
    CHECK(rel(fourier_cosine_transform([](double t) { return 1 / (1 + t * t); }, 1, 1, 1.3).value,
              oracle::fc_rational) < 1e-9);
}

TEST_CASE("lambda_gamma_transform: closed form and reductions") {
    const LambdaGammaParams k{1, 2, 1, 1, 0.5, 1};
    CHECK(rel(lambda_gamma_transform(one, k).value,
              gstx::specfun::ferreira_salinas_closed(1, 2, 1, 1, 0.5, 1)) < 1e-10);
    // c = a + 1: kernel (v x^d)^{-a}.
    const double lam = 2, p = 1.5, d = 1, a = 0.5, v = 2;
    const double s = (lam - a * d) / d;
    const double want = std::pow(v, -a) / d * gstx::specfun::gamma(s) / std::pow(p, s);
    CHECK(rel(lambda_gamma_transform(one, {lam, p, d, a, a + 1, v}).value, want) < 1e-10);
    CHECK(rel(lambda_gamma_transform(ex, {1, 1, 1, 1, 0.5, 0.5}).value, oracle::lgamma_exp) < 1e-10);
    CHECK_THROWS_AS(lambda_gamma_transform(one, {1, -1, 1, 1, 0.5, 1}), gstx::DomainError);
}

TEST_CASE("invariances against the raw t-integrals") {
    const draws::InvarianceResult r = draws::check_invariances();
    CHECK(r.worst_l <= 1e-9);
    CHECK(r.worst_s <= 1e-9);
}

TEST_CASE("positivity and monotonicity in y") {
    const RealFunction rational = [](double t) { return 1 / (1 + t * t); };
    for (const draws::Draw& d : draws::invariance_grid()) {
        CHECK(l_transform(rational, d.alpha, d.mu, d.y).value >= 0.0);
        CHECK(stieltjes_transform(rational, d.alpha, d.mu, d.rho, d.y).value >= 0.0);
    }
    for (auto [y1, y2] : {std::pair{0.4, 0.9}, std::pair{1.0, 1.1}, std::pair{2.0, 5.0}})
        CHECK(l_transform(ex, 1.7, 2, y1).value > l_transform(ex, 1.7, 2, y2).value);
}

TEST_CASE("classical reductions") {
    const ClassicalReduction lap = reduce_classical(ClassicalTransformId::Laplace);
    CHECK(lap.family == Family::L);
    CHECK(*lap.params.alpha == 1.0);
    CHECK(*lap.params.mu == 1.0);
    CHECK(lap.prefactor(3.0) == 1.0);

    const ClassicalReduction gl = reduce_classical(ClassicalTransformId::Glasser);
    CHECK(gl.family == Family::S);
    CHECK(*gl.params.mu == 2.0);
    CHECK(*gl.params.rho == 0.5);

    const ClassicalReduction wp = reduce_classical(ClassicalTransformId::WidderPotential);
    CHECK(*wp.params.alpha == 2.0);
    CHECK(*wp.params.rho == 1.0);

    ClassicalArgs bd;
    bd.omega = 2;
    bd.mu = 1;
    const ClassicalReduction b = reduce_classical(ClassicalTransformId::BorelDzrbashjan, bd);
    CHECK(*b.params.alpha == 2.0);
    CHECK(b.prefactor(1.5) == doctest::Approx(3.0));

    // Laplace of exp(-t) at y = 1 and Stieltjes of exp(-t) at y = 1.
    CHECK(rel(classical_transform(ClassicalTransformId::Laplace, ex, 1).value, 0.5) < 1e-12);
    CHECK(rel(classical_transform(ClassicalTransformId::Stieltjes, ex, 1).value,
              oracle::stieltjes_exp_1_1_1) < 1e-10);
    CHECK(classical_from_string(to_string(ClassicalTransformId::L2)) == ClassicalTransformId::L2);
    CHECK_FALSE(classical_from_string("Hankel").has_value());
}

TEST_CASE("parameter bundles and validation") {
    TransformParams p;
    p.alpha = 1;
    p.mu = 1;
    CHECK(rel(l_transform(parse("exp(-t)"), p, 1).value, 0.5) < 1e-12);
    p.rho = 1;
    CHECK(rel(stieltjes_transform(parse("exp(-t)"), p, 1).value, oracle::stieltjes_exp_1_1_1) < 1e-10);
    TransformParams missing;
    missing.alpha = 1;
    CHECK_THROWS_AS(l_transform(parse("1"), missing, 1), gstx::DomainError);
    CHECK_THROWS_AS(l_transform(one, 1, 1, -1), gstx::DomainError);
    CHECK_THROWS_AS(l_transform(one, 1, 0, 1), gstx::DomainError);
    CHECK_THROWS_AS(stieltjes_transform(one, 1, 1, 0, 1), gstx::DomainError);
    CHECK(p.field("nope") == nullptr);
    CHECK(param_names().size() == 12);
}

TEST_CASE("divergent transforms raise non-convergence") {
    // S_{1,1,1/2}{1; 1} = int (1+t)^{-1/2} dt diverges.
    CHECK_THROWS_AS(stieltjes_transform(one, 1, 1, 0.5, 1), gstx::NonConvergence);
    CHECK_FALSE(try_stieltjes_transform(one, 1, 1, 0.5, 1).converged);
}
