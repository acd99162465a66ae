#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "gstx/quadrature.hpp"

namespace gstx::quad {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Nodes with |s| below this are always visited; beyond it the walk stops once
// terms are negligible. Keeps an integrand whose mass sits far from x = 1 from
// being truncated to zero.
constexpr double kWalkFloor = 3.5;
constexpr double kNegligible = 1e-20;
constexpr int kMinLevel = 3;

struct Node {
    double x = 0.0;
    double w = 0.0;
    bool valid = false;
};

// t = exp(π/2 · sinh s) maps ℝ onto (0, ∞).
struct ExpSinh {
    Node operator()(double s) const {
        const double u = kHalfPi * std::sinh(s);
        if (u < -650.0 || u > 650.0) return {};
        const double x = std::exp(u);
        return {x, x * kHalfPi * std::cosh(s), true};
    }
};

// x = (a+b)/2 + (b−a)/2 · tanh(π/2 · sinh s), written through the distance to
// the nearer endpoint so nodes crowding an endpoint keep full precision.
struct TanhSinh {
    double a;
    double b;

    Node operator()(double s) const {
        const double u = kHalfPi * std::sinh(s);
        const double au = std::abs(u);
        if (au > 350.0) return {};
        const double len = b - a;
        const double dist = len / (1.0 + std::exp(2.0 * au));
        if (dist <= 0.0) return {};
        const double x = u < 0.0 ? a + dist : b - dist;
        if (x <= a || x >= b) return {};
        const double ch = std::cosh(u);
        const double w = len * 0.5 * kHalfPi * std::cosh(s) / (ch * ch);
        if (!(w > 0.0)) return {};
        return {x, w, true};
    }
};

// Neumaier-compensated running sum; the node count per level is large enough
// for plain summation error to rival the tolerance.
struct Accumulator {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

class Evaluator {
public:
    explicit Evaluator(const Integrand& f) : f_(f) {}

    // Returns false when the integrand is non-finite; throws for interior nodes.
    bool term(const Node& node, double s, double& out) {
        const double fx = f_(node.x);
        ++n_evals;
        if (!std::isfinite(fx)) {
            if (std::abs(s) > kWalkFloor) return false;
            throw NonFinite("integrand is not finite at x = " + std::to_string(node.x));
        }
        out = fx * node.w;
        return true;
    }

    std::int64_t n_evals = 0;

private:
    const Integrand& f_;
};

template <class Map>
QuadResult de_integrate(const Integrand& f, const Map& map, const QuadConfig& cfg) {
    cfg.validate();
    Evaluator eval(f);

    double h = 0.5;
    Accumulator sum;       // Σ f·w over every node visited so far
    double abs_sum = 0.0;  // Σ |f·w|, for the roundoff floor
    double max_term = 0.0;

    double term0 = 0.0;
    const Node centre = map(0.0);
    if (centre.valid && eval.term(centre, 0.0, term0)) {
        sum.add(term0);
        abs_sum += std::abs(term0);
        max_term = std::abs(term0);
    }

    // Level 0: walk outwards in both directions to find the truncation points.
    double s_lo = 0.0;
    double s_hi = 0.0;
    for (int dir : {+1, -1}) {
        int quiet = 0;
        for (int k = 1;; ++k) {
            const double s = dir * k * h;
            // The bound reaches the first unusable node, so refined nodes
            // short of it are still visited.
            (dir > 0 ? s_hi : s_lo) = s;
            const Node node = map(s);
            if (!node.valid) break;
            double t = 0.0;
            if (!eval.term(node, s, t)) break;
            sum.add(t);
            abs_sum += std::abs(t);
            max_term = std::max(max_term, std::abs(t));
            if (std::abs(s) >= kWalkFloor && std::abs(t) <= kNegligible * max_term) {
                if (++quiet >= 2) break;
            } else {
                quiet = 0;
            }
        }
    }

    QuadResult result;
    double prev = h * sum.value();
    result.value = prev;
    result.err_estimate = std::abs(prev);

    for (int level = 1; level <= cfg.max_levels; ++level) {
        h *= 0.5;
        // New nodes are the odd multiples of the halved step inside [s_lo, s_hi].
        const int k_lo = static_cast<int>(std::floor(s_lo / h));
        const int k_hi = static_cast<int>(std::ceil(s_hi / h));
        for (int k = k_lo; k <= k_hi; ++k) {
            if ((k & 1) == 0) continue;
            const double s = k * h;
            if (s < s_lo || s > s_hi) continue;
            const Node node = map(s);
            if (!node.valid) continue;
            double t = 0.0;
            if (!eval.term(node, s, t)) continue;
            sum.add(t);
            abs_sum += std::abs(t);
        }
        const double current = h * sum.value();
        const double roundoff = 8.0 * kEps * h * abs_sum;
        const double err = std::max(std::abs(current - prev), roundoff);
        result.value = current;
        result.err_estimate = err;
        const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(current));
        if (level >= kMinLevel && err <= tol) {
            result.converged = true;
            break;
        }
        prev = current;
    }
    result.n_evals = eval.n_evals;
    return result;
}

}  // namespace

QuadConfig QuadConfig::nested() const {
    QuadConfig inner = *this;
    inner.rel_tol = rel_tol / 10.0;
    inner.abs_tol = abs_tol / 10.0;
    return inner;
}

void QuadConfig::validate() const {
    if (!(rel_tol > 0.0)) throw DomainError("QuadConfig.rel_tol must be > 0");
    if (!(abs_tol >= 0.0)) throw DomainError("QuadConfig.abs_tol must be >= 0");
    if (max_levels < 2) throw DomainError("QuadConfig.max_levels must be >= 2");
    if (max_half_periods < 1) throw DomainError("QuadConfig.max_half_periods must be >= 1");
}

QuadResult try_integrate_semi_infinite(const Integrand& f, const QuadConfig& cfg) {
    return de_integrate(f, ExpSinh{}, cfg);
}

QuadResult integrate_semi_infinite(const Integrand& f, const QuadConfig& cfg) {
    QuadResult r = try_integrate_semi_infinite(f, cfg);
    if (!r.converged)
        throw QuadNonConvergence("semi-infinite quadrature did not reach tolerance", r);
    return r;
}

QuadResult try_integrate_finite(const Integrand& f, double a, double b, const QuadConfig& cfg) {
    if (!(a < b)) {
        if (a == b) return {0.0, 0.0, 0, true};
        throw DomainError("integrate_finite requires a < b");
    }
    return de_integrate(f, TanhSinh{a, b}, cfg);
}

QuadResult integrate_finite(const Integrand& f, double a, double b, const QuadConfig& cfg) {
    QuadResult r = try_integrate_finite(f, a, b, cfg);
    if (!r.converged) throw QuadNonConvergence("finite quadrature did not reach tolerance", r);
    return r;
}

Integrand power_substitution(Integrand f, double alpha, double mu) {
    if (!(mu > 0.0)) throw DomainError("power_substitution requires mu > 0");
    if (mu == 1.0) {
        if (alpha == 1.0) return f;
        return [f = std::move(f), p = alpha - 1.0](double u) { return std::pow(u, p) * f(u); };
    }
    const double inv_mu = 1.0 / mu;
    const double p = alpha / mu - 1.0;
    return [f = std::move(f), inv_mu, p](double u) {
        return inv_mu * std::pow(u, p) * f(std::pow(u, inv_mu));
    };
}

}  // namespace gstx::quad
