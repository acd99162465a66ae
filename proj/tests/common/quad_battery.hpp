#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "gstx/quadrature.hpp"
#include "oracles/oracle_values.hpp"

namespace battery {

enum class Range { SemiInfinite, Finite, Oscillatory };

struct Case {
    std::string name;
    Range range;
    gstx::quad::Integrand f;
    double truth;
    double a = 0.0, b = 0.0;                        // Finite
    gstx::quad::Kernel kernel = gstx::quad::Kernel::Sine;  // Oscillatory
    double omega = 1.0;
};

struct Outcome {
    const Case* c;
    gstx::quad::QuadResult r;
    double err;       // |value - truth|
    bool accurate;    // err <= max(abs_tol, rel_tol |truth|)
    bool honest;      // err_estimate >= err
};

inline std::vector<Case> cases() {
    using std::numbers::pi;
    using K = gstx::quad::Kernel;
    const double e = std::numbers::e;
    return {
        {"exp(-t)", Range::SemiInfinite, [](double t) { return std::exp(-t); }, 1.0},
        {"t^2 exp(-t)", Range::SemiInfinite, [](double t) { return t * t * std::exp(-t); }, 2.0},
        {"exp(-t^2)", Range::SemiInfinite, [](double t) { return std::exp(-t * t); },
         std::sqrt(pi) / 2},
        {"1/(1+t^2)", Range::SemiInfinite, [](double t) { return 1 / (1 + t * t); }, pi / 2},
        {"t^-1/2 exp(-t)", Range::SemiInfinite, [](double t) { return std::exp(-t) / std::sqrt(t); },
         std::sqrt(pi)},
        {"ln(t) exp(-t)", Range::SemiInfinite, [](double t) { return std::log(t) * std::exp(-t); },
         -std::numbers::egamma},
        {"(1+t)^-3", Range::SemiInfinite, [](double t) { return std::pow(1 + t, -3.0); }, 0.5},
        {"t/(e^t-1)", Range::SemiInfinite, [](double t) { return t / std::expm1(t); }, pi * pi / 6},
        {"exp(-t)/(1+t)", Range::SemiInfinite, [](double t) { return std::exp(-t) / (1 + t); },
         oracle::quad_exp_over_1pt},
        {"exp(-t) cos(t)", Range::SemiInfinite, [](double t) { return std::exp(-t) * std::cos(t); },
         0.5},
        {"sqrt(t) on [0,1]", Range::Finite, [](double t) { return std::sqrt(t); }, 2.0 / 3, 0, 1},
        {"ln(t) on [0,1]", Range::Finite, [](double t) { return std::log(t); }, -1.0, 0, 1},
        {"t^-1/2 on [0,1]", Range::Finite, [](double t) { return 1 / std::sqrt(t); }, 2.0, 0, 1},
        {"sin(t) on [0,pi]", Range::Finite, [](double t) { return std::sin(t); }, 2.0, 0, pi},
        {"4/(1+t^2) on [0,1]", Range::Finite, [](double t) { return 4 / (1 + t * t); }, pi, 0, 1},
        {"sin(t)/t", Range::Oscillatory, [](double t) { return 1 / t; }, pi / 2, 0, 0, K::Sine},
        {"t^-1/2 sin(t)", Range::Oscillatory, [](double t) { return 1 / std::sqrt(t); },
         std::sqrt(pi / 2), 0, 0, K::Sine},
        {"t^-1/2 cos(t)", Range::Oscillatory, [](double t) { return 1 / std::sqrt(t); },
         std::sqrt(pi / 2), 0, 0, K::Cosine},
        {"cos(t)/(1+t^2)", Range::Oscillatory, [](double t) { return 1 / (1 + t * t); },
         pi / (2 * e), 0, 0, K::Cosine},
        {"t sin(2t)/(1+t^2)", Range::Oscillatory, [](double t) { return t / (1 + t * t); },
         pi / (2 * e * e), 0, 0, K::Sine, 2.0},
    };
}

inline gstx::quad::QuadResult integrate(const Case& c, const gstx::quad::QuadConfig& cfg = {}) {
    switch (c.range) {
        case Range::SemiInfinite: return gstx::quad::try_integrate_semi_infinite(c.f, cfg);
        case Range::Finite: return gstx::quad::try_integrate_finite(c.f, c.a, c.b, cfg);
        case Range::Oscillatory:
            return gstx::quad::try_integrate_oscillatory(c.f, c.kernel, c.omega, cfg);
    }
    return {};
}

inline std::vector<Outcome> run(const std::vector<Case>& cs) {
    const gstx::quad::QuadConfig cfg;
    std::vector<Outcome> out;
    for (const Case& c : cs) {
        const gstx::quad::QuadResult r = integrate(c, cfg);
        const double err = std::abs(r.value - c.truth);
        out.push_back({&c, r, err, err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(c.truth)),
                       r.err_estimate >= err});
    }
    return out;
}

}  // namespace battery
