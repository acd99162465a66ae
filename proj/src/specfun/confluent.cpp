#include <cmath>
#include <optional>

#include "gstx/quadrature.hpp"
#include "gstx/specfun.hpp"

namespace gstx::specfun {

namespace {

constexpr double kSinPiFloor = 1e-8;
constexpr double kCancellationCap = 1e4;
constexpr double kAsymptoticFrom = 20.0;

// x^{−a} Σ (a)_k (a−c+1)_k (−1/x)^k / k!. Exact when a or a−c+1 is a
// non-positive integer; otherwise asymptotic, stopped at its smallest term.
struct Asymptotic {
    double value;
    bool accurate;
};

Asymptotic asymptotic_u(double a, double c, double x, bool terminating) {
    const double b = a - c + 1.0;
    long double sum = 1.0L;
    long double term = 1.0L;
    long double smallest = 1.0L;
    for (int k = 0; k < 2000; ++k) {
        const long double next = term * (static_cast<long double>(a) + k) *
                                 (static_cast<long double>(b) + k) /
                                 (-static_cast<long double>(x) * (k + 1));
        if (next == 0.0L) {
            return {static_cast<double>(sum) * std::pow(x, -a), true};
        }
        if (!terminating && std::abs(next) > smallest) break;
        term = next;
        smallest = std::abs(term);
        sum += term;
        if (!terminating && smallest < 1e-17L * std::abs(sum)) break;
    }
    const bool accurate = terminating || smallest <= 1e-15L * std::abs(sum);
    return {static_cast<double>(sum) * std::pow(x, -a), accurate};
}

struct Reflection {
    double value;
    double cancellation;
};

std::optional<Reflection> reflection_u(double a, double c, double x) {
    if (std::abs(sin_pi(c)) < kSinPiFloor) return std::nullopt;
    const double t1 = gamma(1.0 - c) * rgamma(a - c + 1.0) * kummer_m(a, c, x);
    const double t2 = gamma(c - 1.0) * rgamma(a) * std::pow(x, 1.0 - c) *
                      kummer_m(a - c + 1.0, 2.0 - c, x);
    const double value = t1 + t2;
    const double scale = std::abs(t1) + std::abs(t2);
    const double cancellation = value == 0.0 ? INFINITY : scale / std::abs(value);
    return Reflection{value, cancellation};
}

}  // namespace

double tricomi_u_reflection(double a, double c, double x) {
    if (!(x > 0.0)) throw DomainError("tricomi_u requires x > 0");
    const auto r = reflection_u(a, c, x);
    if (!r) throw NearPoleError("tricomi_u: |sin(pi c)| below 1e-8, reflection formula unusable");
    return r->value;
}

double tricomi_u_integral(double a, double c, double x) {
    if (!(x > 0.0)) throw DomainError("tricomi_u requires x > 0");
    if (!(a > 0.0)) throw DomainError("tricomi_u integral representation requires a > 0");
    const double e = c - a - 1.0;
    const double inv_x = 1.0 / x;
    const quad::Integrand f = [a, e, inv_x](double v) {
        return std::exp(-v) * std::pow(v, a - 1.0) * std::pow(1.0 + v * inv_x, e);
    };
    quad::QuadConfig cfg;
    cfg.rel_tol = 1e-13;
    cfg.abs_tol = 0.0;
    const quad::QuadResult r = quad::try_integrate_semi_infinite(f, cfg);
    if (!r.converged && !(r.err_estimate <= 1e-11 * std::abs(r.value)))
        throw NonConvergence("tricomi_u integral representation did not converge");
    return std::pow(x, -a) * rgamma(a) * r.value;
}

double tricomi_u(double a, double c, double x) {
    if (!(x > 0.0)) throw DomainError("tricomi_u requires x > 0");
    if (c == a + 1.0) return std::pow(x, -a);
    const double b = a - c + 1.0;
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b))
        return asymptotic_u(a, c, x, true).value;

    if (x >= kAsymptoticFrom) {
        const Asymptotic s = asymptotic_u(a, c, x, false);
        if (s.accurate) return s.value;
    }

    const auto refl = reflection_u(a, c, x);
    if (refl && refl->cancellation <= kCancellationCap) return refl->value;
    if (a > 0.0) return tricomi_u_integral(a, c, x);
    // Kummer's relation U(a;c;x) = x^{1−c} U(a−c+1; 2−c; x).
    if (b > 0.0) return std::pow(x, 1.0 - c) * tricomi_u_integral(b, 2.0 - c, x);
    if (refl) return refl->value;
    if (std::isfinite(a) && a > -50.0) {
        // Contiguous relation in a, run downwards from two integral seeds:
        // U(a) = (2a + 2 + x − c)·U(a+1) − (a+1)(a−c+2)·U(a+2).
        const int n = static_cast<int>(std::ceil(-a)) + 1;
        double u_hi = tricomi_u_integral(a + n + 1, c, x);
        double u_mid = tricomi_u_integral(a + n, c, x);
        for (int k = n - 1; k >= 0; --k) {
            const double ak = a + k;
            const double u_lo = (2.0 * ak + 2.0 + x - c) * u_mid - (ak + 1.0) * (ak - c + 2.0) * u_hi;
            u_hi = u_mid;
            u_mid = u_lo;
        }
        return u_mid;
    }
    throw NearPoleError("tricomi_u: no valid evaluation path (a <= 0, a-c+1 <= 0, c near an integer)");
}

}  // namespace gstx::specfun
