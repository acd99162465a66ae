#include <cmath>
#include <numbers>

#include "gstx/specfun.hpp"

namespace gstx::specfun {

namespace {

constexpr double kSeriesUpTo = 20.0;

double bessel_series(double nu, double x) {
    const long double q = -0.25L * static_cast<long double>(x) * x;
    long double term = std::exp(nu * std::log(0.5 * x) - log_gamma(nu + 1.0));
    long double sum = term;
    for (int k = 0; k < 500; ++k) {
        term *= q / ((k + 1.0L) * (nu + k + 1.0L));
        sum += term;
        if (std::abs(term) < 1e-19L * std::abs(sum) && k > x) break;
    }
    return static_cast<double>(sum);
}

// Hankel's expansion, truncated at its smallest term.
double bessel_hankel(double nu, double x) {
    const double m = 4.0 * nu * nu;
    double p = 0.0;
    double q = 0.0;
    double term = 1.0;
    double smallest = INFINITY;
    for (int k = 0; k < 200; ++k) {
        if (std::abs(term) > smallest) break;
        smallest = std::abs(term);
        // a_k(ν)/x^k alternates between the P and Q sums with signs (+, +, −, −, ...).
        const double sign = (k / 2) % 2 == 0 ? 1.0 : -1.0;
        (k % 2 == 0 ? p : q) += sign * term;
        const double odd = 2.0 * k + 1.0;
        term *= (m - odd * odd) / ((k + 1.0) * 8.0 * x);
        if (term == 0.0) break;
    }
    const double chi = x - (0.5 * nu + 0.25) * std::numbers::pi;
    return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace

double bessel_j(double nu, double x) {
    if (!(nu >= 0.0)) throw DomainError("bessel_j requires nu >= 0");
    if (!(x >= 0.0)) throw DomainError("bessel_j requires x >= 0");
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    if (x <= kSeriesUpTo || x < nu * nu) return bessel_series(nu, x);
    return bessel_hankel(nu, x);
}

double legendre_p(double order_mu, double degree_nu, double x) {
    if (!(x > -1.0 && x < 1.0)) throw DomainError("legendre_p requires -1 < x < 1");
    return legendre_p_complement(order_mu, degree_nu, 1.0 - x);
}

double legendre_p_complement(double order_mu, double degree_nu, double w) {
    if (!(w > 0.0 && w < 2.0)) throw DomainError("legendre_p requires -1 < x < 1");
    if (is_nonpositive_integer(1.0 - order_mu))
        throw DomainError("legendre_p requires 1 - mu not a non-positive integer");
    return rgamma(1.0 - order_mu) * std::pow((2.0 - w) / w, 0.5 * order_mu) *
           hyp2f1(-degree_nu, degree_nu + 1.0, 1.0 - order_mu, 0.5 * w);
}

}  // namespace gstx::specfun
