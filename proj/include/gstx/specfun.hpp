#pragma once

#include <span>

#include "gstx/error.hpp"

/// Real-argument special functions.
///
/// Everything here is a pure function of its arguments. Series are truncated
/// once three consecutive terms fall below `rel_tol` relative to the partial sum.
namespace gstx::specfun {

struct SeriesConfig {
    double rel_tol = 1e-15;
    int max_terms = 10000;

    void validate() const;
};

struct SpecialValue {
    double value = 0.0;
    bool converged = false;
    int terms_used = 0;
};

/// True when x is one of 0, −1, −2, ...
bool is_nonpositive_integer(double x);

/// sin(πx) with exact zeros at the integers.
double sin_pi(double x);

/// Γ(z) by a Lanczos approximation; reflection below 1/2. Exact at small
/// positive integers. Throws PoleError at non-positive integers.
double gamma(double z);

/// ln Γ(z) for z > 0.
double log_gamma(double z);

/// 1/Γ(z), zero at the poles of Γ.
double rgamma(double z);

/// B(a, b) = Γ(a)Γ(b)/Γ(a+b) for a, b > 0.
double beta(double a, double b);

/// Rising factorial (α)_n.
double pochhammer(double alpha, int n);

/// Generalized hypergeometric series rFs(α; β; z).
///
/// Throws DomainError when a β_j is a non-positive integer and NonConvergence
/// when the series diverges (r > s+1 with z ≠ 0, or r = s+1 with |z| > 1) or
/// `max_terms` is reached.
SpecialValue hyp_rfs(std::span<const double> alphas, std::span<const double> betas, double z,
                     const SeriesConfig& cfg = {});

/// Partial sum of a possibly divergent rFs series stopped at its smallest term
/// (optimal truncation). `converged` reports whether the terms actually fell
/// below the tolerance.
SpecialValue hyp_rfs_truncated(std::span<const double> alphas, std::span<const double> betas,
                               double z, int max_terms = 200);

/// Gauss hypergeometric function 2F1(a, b; c; z) for z ≤ 1.
///
/// Direct series on [−1/2, 1/2); Pfaff's transformation below −1/2; the
/// z ↔ 1−z connection formula on [1/2, 1). When c−a−b is within 1e−8 of an
/// integer the connection formula is evaluated at c ± h, c ± 2h and
/// Richardson-extrapolated to h → 0. At z = 1 the Gauss sum is returned for
/// c−a−b > 0.
double hyp2f1(double a, double b, double c, double z);

/// Kummer's function M(a; c; x) = 1F1(a; c; x).
double kummer_m(double a, double c, double x);

/// Tricomi's confluent hypergeometric function U(a; c; x), x > 0.
///
/// Path order: terminating expansion, large-x asymptotic series, the
/// reflection formula in terms of M (when sin πc is not tiny and the two
/// terms do not cancel badly), and finally the integral representation
/// (a > 0). Throws NearPoleError when none applies.
double tricomi_u(double a, double c, double x);

/// U through the reflection formula only. Throws NearPoleError for |sin πc| < 1e−8.
double tricomi_u_reflection(double a, double c, double x);

/// U through its integral representation only; requires a > 0.
double tricomi_u_integral(double a, double c, double x);

/// Bessel function of the first kind J_ν(x) for ν ≥ 0, x ≥ 0.
double bessel_j(double nu, double x);

/// Ferrers (on-the-cut) associated Legendre function P^μ_ν(x) on (−1, 1).
/// Evaluated through 2F1(−ν, ν+1; 1−μ; (1−x)/2); DomainError when 1 − μ is a
/// non-positive integer (positive integer orders).
double legendre_p(double order_mu, double degree_nu, double x);

/// P^μ_ν(1 − w) for w ∈ (0, 2), for arguments whose distance from 1 is known
/// more accurately than the argument itself.
double legendre_p_complement(double order_mu, double degree_nu, double one_minus_x);

/// ∫₀^∞ e^{−yt} t^{v−1} rFs(α; β; at) dt = Γ(v)/y^v · r+1Fs(v, α; β; a/y).
double laplace_rfs_closed(double v, double a, double y, std::span<const double> alphas,
                          std::span<const double> betas);

/// ∫₀^∞ x^{λ−1} e^{−p x^δ} U(a; c; v x^δ) dx in its 2F1(…; 1 − v/p) form.
double ferreira_salinas_closed(double lambda, double p, double delta, double a, double c,
                               double v);

/// Same integral through the two-term form in 2F1(…; v/p); needs c < 1, c ∉ ℤ.
double ferreira_salinas_two_term(double lambda, double p, double delta, double a, double c,
                                 double v);

}  // namespace gstx::specfun
