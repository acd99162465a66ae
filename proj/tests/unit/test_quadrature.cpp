#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "common/quad_battery.hpp"
#include "gstx/quadrature.hpp"

using namespace gstx::quad;

TEST_CASE("battery: accuracy within default tolerances") {
    const std::vector<battery::Case> cs = battery::cases();
    REQUIRE(cs.size() == 20);
    for (const battery::Outcome& o : battery::run(cs)) {
        INFO(o.c->name << " value " << o.r.value << " truth " << o.c->truth);
        CHECK(o.r.converged);
        CHECK(o.accurate);
    }
}

TEST_CASE("battery: error estimates are honest") {
    const std::vector<battery::Case> cs = battery::cases();
    int honest = 0;
    for (const battery::Outcome& o : battery::run(cs)) honest += o.honest;
    CHECK(honest >= 19);  // 95% of 20
}

TEST_CASE("converged results respect the tolerance contract") {
    const QuadConfig cfg;
    for (const battery::Case& c : battery::cases()) {
        const QuadResult r = battery::integrate(c, cfg);
        if (r.converged)
            CHECK(r.err_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(r.value)));
    }
}

TEST_CASE("power_substitution: trivial cases") {
    const Integrand f = [](double t) { return std::exp(-t); };
    const Integrand id = power_substitution(f, 1, 1);
    for (double u : {0.1, 1.0, 3.0}) CHECK(id(u) == doctest::Approx(f(u)).epsilon(1e-15));
    const Integrand half = power_substitution([](double) { return 1.0; }, 2, 2);
    for (double u : {0.1, 1.0, 3.0}) CHECK(half(u) == doctest::Approx(0.5).epsilon(1e-15));
    // exp(-t^2) with alpha = mu = 2 and kernel exp(-u): 1/4.
    const Integrand g = power_substitution([](double t) { return std::exp(-t * t); }, 2, 2);
    const QuadResult r = integrate_semi_infinite([&](double u) { return g(u) * std::exp(-u); });
    CHECK(r.value == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("power_substitution: invariance of the L integrand") {
    for (int alpha = 1; alpha <= 3; ++alpha)
        for (int mu = 1; mu <= 3; ++mu) {
            const Integrand f = [mu](double t) { return std::exp(-std::pow(t, mu)); };
            const QuadResult raw = integrate_semi_infinite([&](double t) {
                return std::pow(t, alpha - 1) * std::exp(-std::pow(t, mu)) * f(t);
            });
            const Integrand h = power_substitution(f, alpha, mu);
            const QuadResult sub =
                integrate_semi_infinite([&](double u) { return h(u) * std::exp(-u); });
            INFO("alpha " << alpha << " mu " << mu);
            CHECK(std::abs(raw.value - sub.value) / std::abs(raw.value) <= 1e-10);
        }
}

TEST_CASE("levin_u: accelerates alternating series") {
    std::vector<double> terms;
    for (int k = 1; k <= 15; ++k) terms.push_back((k % 2 ? 1.0 : -1.0) / k);
    CHECK(levin_u(terms) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("oscillatory: Abel value of a non-decaying amplitude") {
    // Fs of 1 at omega = 2: Abel value 1/omega.
    const QuadResult r = integrate_oscillatory([](double) { return 1.0; }, Kernel::Sine, 2.0);
    CHECK(r.value == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("non-convergence is reported and thrown") {
    const Integrand grow = [](double t) { return 1.0 / std::sqrt(t) + 1.0; };
    const QuadResult r = try_integrate_semi_infinite(grow);
    CHECK_FALSE(r.converged);
    CHECK_THROWS_AS(integrate_semi_infinite(grow), QuadNonConvergence);
}

TEST_CASE("non-finite integrands are rejected") {
    CHECK_THROWS_AS(try_integrate_finite([](double) { return std::nan(""); }, 0, 1), gstx::NonFinite);
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS((QuadConfig{0.0, 1e-14, 12, 200}.validate()), gstx::DomainError);
    CHECK_THROWS_AS((QuadConfig{1e-10, -1.0, 12, 200}.validate()), gstx::DomainError);
    CHECK_THROWS_AS((QuadConfig{1e-10, 1e-14, 1, 200}.validate()), gstx::DomainError);
    const QuadConfig n = QuadConfig{}.nested();
    CHECK(n.rel_tol == doctest::Approx(1e-11));
}
