#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "gstx/error.hpp"

namespace gstx::quad {

using Integrand = std::function<double(double)>;

struct QuadConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_levels = 12;        // trapezoid step halvings in the double-exponential rules
    int max_half_periods = 200;  // cap on kernel half-periods before giving up

    /// Configuration for an integral evaluated inside another integrand.
    QuadConfig nested() const;
    /// Throws DomainError when a field violates its invariant.
    void validate() const;
};

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;  // absolute
    std::int64_t n_evals = 0;
    bool converged = false;
};

/// Thrown by the checked entry points; carries the best estimate reached.
class QuadNonConvergence : public NonConvergence {
public:
    QuadNonConvergence(const std::string& what, QuadResult partial)
        : NonConvergence(what), partial_(partial) {}
    const QuadResult& partial() const noexcept { return partial_; }

private:
    QuadResult partial_;
};

enum class Kernel { Sine, Cosine };

/// ∫₀^∞ f(t) dt by the exp-sinh transformation with level doubling.
/// Integrable algebraic singularities at 0 and algebraic decay at ∞ are handled.
QuadResult integrate_semi_infinite(const Integrand& f, const QuadConfig& cfg = {});

/// Same as integrate_semi_infinite but reports failure through `converged`.
QuadResult try_integrate_semi_infinite(const Integrand& f, const QuadConfig& cfg = {});

/// ∫ₐᵇ f(x) dx by the tanh-sinh transformation; endpoint singularities allowed.
/// Nodes cannot come closer to an endpoint than its floating-point spacing, so
/// a singularity at a non-zero endpoint (e.g. (1−x)^{−1/2} at b = 1) loses the
/// mass of the last ulp, about 1e−8 for an inverse square root.
QuadResult integrate_finite(const Integrand& f, double a, double b, const QuadConfig& cfg = {});
QuadResult try_integrate_finite(const Integrand& f, double a, double b, const QuadConfig& cfg = {});

/// ∫₀^∞ g(u)·sin(ωu) du (or cos). The range is split at the kernel zeros, each
/// half-period is integrated separately and the partial sums are accelerated
/// with the Levin u-transform, so conditionally convergent and Abel-summable
/// integrals get their regularized value.
QuadResult integrate_oscillatory(const Integrand& g, Kernel kernel, double omega,
                                 const QuadConfig& cfg = {});
QuadResult try_integrate_oscillatory(const Integrand& g, Kernel kernel, double omega,
                                     const QuadConfig& cfg = {});

/// Rewrites t^{α−1} f(t) dt under t = u^{1/μ} as h(u) du with
/// h(u) = (1/μ) u^{α/μ−1} f(u^{1/μ}).
Integrand power_substitution(Integrand f, double alpha, double mu);

/// Levin u-transform (β = 1) of the series whose terms are given; returns the
/// limit estimate using every term. Terms must be non-zero.
double levin_u(std::span<const double> terms);

}  // namespace gstx::quad
