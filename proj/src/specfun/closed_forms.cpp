#include <cmath>
#include <numbers>
#include <vector>

#include "gstx/specfun.hpp"

namespace gstx::specfun {

double laplace_rfs_closed(double v, double a, double y, std::span<const double> alphas,
                          std::span<const double> betas) {
    if (!(v > 0.0)) throw DomainError("laplace_rfs_closed requires v > 0");
    if (!(y > 0.0)) throw DomainError("laplace_rfs_closed requires y > 0");
    const std::size_t r = alphas.size();
    const std::size_t s = betas.size();
    if (r > s) throw DomainError("laplace_rfs_closed requires r <= s");
    if (r == s && !(std::abs(a) < y)) throw DomainError("laplace_rfs_closed with r = s requires |a| < y");

    const double z = a / y;
    const double prefactor = gamma(v) * std::pow(y, -v);
    if (r == 0 && s == 0) return prefactor * std::pow(1.0 - z, -v);
    if (r == 1 && s == 1) return prefactor * hyp2f1(v, alphas[0], betas[0], z);
    std::vector<double> upper{v};
    upper.insert(upper.end(), alphas.begin(), alphas.end());
    return prefactor * hyp_rfs(upper, betas, z).value;
}

namespace {

void check_fs_domain(double lambda, double p, double delta, double c, double v) {
    if (!(lambda > 0.0) || !(delta > 0.0) || !(p > 0.0))
        throw DomainError("Ferreira-Salinas integral requires lambda, delta, p > 0");
    if (!(v > 0.0)) throw DomainError("Ferreira-Salinas integral requires v > 0");
    if (!(lambda / delta - c + 1.0 > 0.0))
        throw DomainError("Ferreira-Salinas integral requires lambda/delta - c + 1 > 0");
}

}  // namespace

double ferreira_salinas_closed(double lambda, double p, double delta, double a, double c,
                               double v) {
    check_fs_domain(lambda, p, delta, c, v);
    const double s = lambda / delta;
    const double top = s - c + 1.0;
    return std::pow(p, -s) / delta * gamma(s) * gamma(top) * rgamma(a + top) *
           hyp2f1(a, s, a + top, 1.0 - v / p);
}

double ferreira_salinas_two_term(double lambda, double p, double delta, double a, double c,
                                 double v) {
    check_fs_domain(lambda, p, delta, c, v);
    if (!(c < 1.0) || c == std::floor(c))
        throw DomainError("two-term Ferreira-Salinas form requires c < 1 and c not an integer");
    if (!(v < p)) throw DomainError("two-term Ferreira-Salinas form requires v < p");
    if (is_nonpositive_integer(a) || is_nonpositive_integer(1.0 + a - c))
        throw DomainError("two-term Ferreira-Salinas form requires a, 1+a-c not in {0,-1,...}");
    const double s = lambda / delta;
    const double z = v / p;
    const double first = gamma(s) * rgamma(1.0 + a - c) * rgamma(c) * hyp2f1(a, s, c, z);
    const double second = std::pow(z, 1.0 - c) * gamma(s - c + 1.0) * rgamma(a) * rgamma(2.0 - c) *
                          hyp2f1(1.0 + a - c, s - c + 1.0, 2.0 - c, z);
    return std::numbers::pi / (delta * sin_pi(c) * std::pow(p, s)) * (first - second);
}

}  // namespace gstx::specfun
