#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "gstx/quadrature.hpp"

namespace gstx::quad {

namespace {

constexpr double kPi = std::numbers::pi;

template <int N>
struct GaussLegendre {
    std::array<double, N> x{};
    std::array<double, N> w{};

    GaussLegendre() {
        for (int i = 0; i < N; ++i) {
            double z = std::cos(kPi * (i + 0.75) / (N + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0;
                double p1 = z;
                for (int k = 2; k <= N; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = N * (z * p1 - p0) / (z * z - 1.0);
                const double dz = p1 / dp;
                z -= dz;
                if (std::abs(dz) < 1e-16) break;
            }
            x[i] = z;
            w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        }
    }
};

const GaussLegendre<20>& gl20() {
    static const GaussLegendre<20> rule;
    return rule;
}

const GaussLegendre<10>& gl10() {
    static const GaussLegendre<10> rule;
    return rule;
}

struct Piece {
    double value = 0.0;
    double err = 0.0;
};

template <class F>
Piece gauss_pair(const F& f, double a, double b, std::int64_t& n_evals) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double hi = 0.0;
    for (int i = 0; i < 20; ++i) hi += gl20().w[i] * f(mid + half * gl20().x[i]);
    double lo = 0.0;
    for (int i = 0; i < 10; ++i) lo += gl10().w[i] * f(mid + half * gl10().x[i]);
    n_evals += 30;
    return {half * hi, std::abs(half * (hi - lo))};
}

// One half-period; bisects a few times if the 10/20-point rules disagree.
template <class F>
Piece half_period(const F& f, double a, double b, double tol, int depth, std::int64_t& n_evals) {
    Piece p = gauss_pair(f, a, b, n_evals);
    if (p.err <= tol || depth >= 6) return p;
    const double m = 0.5 * (a + b);
    const Piece l = half_period(f, a, m, 0.5 * tol, depth + 1, n_evals);
    const Piece r = half_period(f, m, b, 0.5 * tol, depth + 1, n_evals);
    return {l.value + r.value, l.err + r.err};
}

double levin_window(std::span<const double> terms, std::size_t first, std::size_t k) {
    // L_k^{(n)} = Σ_j c_j s_{n+j}/ω_{n+j} / Σ_j c_j/ω_{n+j},
    // c_j = (−1)^j C(k,j) ((n+j+1)/(n+k+1))^{k−1},  ω_m = (m+1)·a_m.
    double s = 0.0;
    std::vector<double> partial(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
        s += terms[i];
        partial[i] = s;
    }
    const double n = static_cast<double>(first);
    const double kk = static_cast<double>(k);
    double num = 0.0;
    double den = 0.0;
    double binom = 1.0;
    for (std::size_t j = 0; j <= k; ++j) {
        const std::size_t m = first + j;
        const double omega = (static_cast<double>(m) + 1.0) * terms[m];
        const double ratio = (n + static_cast<double>(j) + 1.0) / (n + kk + 1.0);
        const double c = (j % 2 == 0 ? 1.0 : -1.0) * binom * std::pow(ratio, kk - 1.0);
        num += c * partial[m] / omega;
        den += c / omega;
        binom = binom * (kk - static_cast<double>(j)) / (static_cast<double>(j) + 1.0);
    }
    return num / den;
}

constexpr std::size_t kMaxLevinOrder = 50;

}  // namespace

double levin_u(std::span<const double> terms) {
    if (terms.empty()) return 0.0;
    for (double t : terms)
        if (t == 0.0 || !std::isfinite(t)) throw DomainError("levin_u needs finite non-zero terms");
    if (terms.size() == 1) return terms[0];
    const std::size_t k = std::min(terms.size() - 1, kMaxLevinOrder);
    return levin_window(terms, terms.size() - 1 - k, k);
}

QuadResult try_integrate_oscillatory(const Integrand& g, Kernel kernel, double omega,
                                     const QuadConfig& cfg) {
    cfg.validate();
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw DomainError("integrate_oscillatory requires a finite omega > 0");

    const bool sine = kernel == Kernel::Sine;
    const auto integrand = [&](double u) {
        const double gu = g(u);
        const double k = sine ? std::sin(omega * u) : std::cos(omega * u);
        return gu * k;
    };
    const auto checked = [&](double u) {
        const double v = integrand(u);
        if (!std::isfinite(v))
            throw NonFinite("oscillatory integrand is not finite at u = " + std::to_string(u));
        return v;
    };

    const double period = kPi / omega;
    const double first_zero = sine ? period : 0.5 * period;

    QuadResult result;
    QuadConfig head_cfg = cfg;
    head_cfg.rel_tol = cfg.rel_tol / 4.0;
    const QuadResult head = try_integrate_finite(integrand, 0.0, first_zero, head_cfg);
    result.n_evals += head.n_evals;

    std::vector<double> terms{head.value};
    double piece_err = head.err_estimate;
    double partial = head.value;
    double scale = std::abs(head.value);

    double estimate = partial;
    double prev_estimate = std::numeric_limits<double>::quiet_NaN();
    double last_change = std::numeric_limits<double>::infinity();
    double best_change = std::numeric_limits<double>::infinity();
    double best_estimate = partial;
    int quiet = 0;
    bool done = false;
    bool decayed = false;

    for (int k = 0; k < cfg.max_half_periods && !done; ++k) {
        const double a = first_zero + k * period;
        const double b = a + period;
        const double local_tol = 1e-3 * std::max(cfg.abs_tol, cfg.rel_tol * scale);
        const Piece p = half_period(checked, a, b, local_tol, 0, result.n_evals);
        partial += p.value;
        piece_err += p.err;
        scale = std::max(scale, std::abs(partial));
        terms.push_back(p.value);

        // Exponentially decaying amplitude: the tail is already negligible.
        if (std::abs(p.value) <= 1e-17 * std::max(scale, cfg.abs_tol)) {
            if (++quiet >= 3) {
                estimate = partial;
                last_change = 0.0;
                decayed = true;
                done = true;
            }
            continue;
        }
        quiet = 0;

        const std::size_t n = terms.size();
        if (n < 8 || n % 2 != 0) continue;
        if (std::any_of(terms.begin(), terms.end(), [](double t) { return t == 0.0; })) continue;
        estimate = levin_u(terms);
        if (std::isfinite(prev_estimate)) {
            last_change = std::abs(estimate - prev_estimate);
            if (last_change < best_change) {
                best_change = last_change;
                best_estimate = estimate;
            }
            const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(estimate));
            if (last_change + piece_err <= tol && n >= 12) done = true;
        }
        prev_estimate = estimate;
    }

    if (decayed) {
        result.value = partial;
        result.err_estimate = piece_err;
    } else if (done) {
        result.value = estimate;
        result.err_estimate = last_change + piece_err;
    } else {
        result.value = best_estimate;
        result.err_estimate = best_change + piece_err;
    }
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(result.value));
    result.converged = head.converged && result.err_estimate <= tol;
    return result;
}

QuadResult integrate_oscillatory(const Integrand& g, Kernel kernel, double omega,
                                 const QuadConfig& cfg) {
    QuadResult r = try_integrate_oscillatory(g, kernel, omega, cfg);
    if (!r.converged)
        throw QuadNonConvergence("oscillatory quadrature did not reach tolerance", r);
    return r;
}

}  // namespace gstx::quad
