#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "gstx/specfun.hpp"
#include "gstx/transforms.hpp"

namespace gstx::transforms {

namespace {

void require_positive(double x, const char* what) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError(std::string(what) + " must be > 0");
}

QuadResult checked(QuadResult r, const char* what) {
    if (!r.converged) throw quad::QuadNonConvergence(std::string(what) + " did not converge", r);
    return r;
}

RealFunction wrap(const expr::FunctionExpr& f) {
    return [f](double t) { return f(t); };
}

double first_parameter(const TransformParams& params) {
    if (params.delta) return *params.delta;
    if (params.alpha) return *params.alpha;
    throw DomainError("transform parameter delta (or alpha) is not set");
}

}  // namespace

double TransformParams::need(std::string_view name) const {
    const std::optional<double>* f = field(name);
    if (f == nullptr) throw DomainError("unknown parameter '" + std::string(name) + "'");
    if (!f->has_value()) throw DomainError("parameter '" + std::string(name) + "' is not set");
    return **f;
}

std::optional<double>* TransformParams::field(std::string_view name) {
    return const_cast<std::optional<double>*>(std::as_const(*this).field(name));
}

const std::optional<double>* TransformParams::field(std::string_view name) const {
    if (name == "alpha") return &alpha;
    if (name == "mu") return &mu;
    if (name == "delta") return &delta;
    if (name == "lambda") return &lambda;
    if (name == "rho") return &rho;
    if (name == "nu") return &nu;
    if (name == "a") return &a;
    if (name == "b") return &b;
    if (name == "beta") return &beta;
    if (name == "p") return &p;
    if (name == "c") return &c;
    if (name == "v") return &v;
    return nullptr;
}

const std::vector<std::string>& param_names() {
    static const std::vector<std::string> names = {"alpha", "mu", "delta", "lambda", "rho", "nu",
                                                   "a",     "b",  "beta",  "p",      "c",   "v"};
    return names;
}

QuadResult try_l_transform(const RealFunction& f, double alpha, double mu, double y,
                           const QuadConfig& cfg) {
    require_positive(alpha, "L transform: alpha");
    require_positive(mu, "L transform: mu");
    require_positive(y, "L transform: y");
    const double s = std::pow(y, mu);
    const quad::Integrand h = quad::power_substitution(f, alpha, mu);
    // For s > 1 the mass sits near u ~ 1/s; u = v/s moves the cutoff to v ~ 1.
    const double k = std::max(s, 1.0);
    QuadResult r = quad::try_integrate_semi_infinite(
        [&](double v) {
            const double u = v / k;
            const double damp = std::exp(-s * u);
            return damp == 0.0 ? 0.0 : h(u) * damp;
        },
        cfg);
    r.value /= k;
    r.err_estimate /= k;
    return r;
}

QuadResult l_transform(const RealFunction& f, double alpha, double mu, double y,
                       const QuadConfig& cfg) {
    return checked(try_l_transform(f, alpha, mu, y, cfg), "L transform");
}

QuadResult try_stieltjes_transform(const RealFunction& f, double alpha, double mu, double rho,
                                   double y, const QuadConfig& cfg) {
    require_positive(alpha, "Stieltjes transform: delta");
    require_positive(mu, "Stieltjes transform: mu");
    require_positive(rho, "Stieltjes transform: rho");
    require_positive(y, "Stieltjes transform: y");
    const double s = std::pow(y, mu);
    const quad::Integrand h = quad::power_substitution(f, alpha, mu);
    return quad::try_integrate_semi_infinite([&](double u) { return h(u) * std::pow(s + u, -rho); },
                                             cfg);
}

QuadResult stieltjes_transform(const RealFunction& f, double alpha, double mu, double rho, double y,
                               const QuadConfig& cfg) {
    return checked(try_stieltjes_transform(f, alpha, mu, rho, y, cfg), "Stieltjes transform");
}

namespace {

QuadResult try_fourier(const RealFunction& f, double delta, double mu, double y, quad::Kernel k,
                       const QuadConfig& cfg) {
    if (!std::isfinite(delta)) throw DomainError("Fourier transform: delta must be finite");
    require_positive(mu, "Fourier transform: mu");
    require_positive(y, "Fourier transform: y");
    return quad::try_integrate_oscillatory(quad::power_substitution(f, delta, mu), k, std::pow(y, mu),
                                           cfg);
}

}  // namespace

QuadResult try_fourier_sine_transform(const RealFunction& f, double delta, double mu, double y,
                                      const QuadConfig& cfg) {
    return try_fourier(f, delta, mu, y, quad::Kernel::Sine, cfg);
}

QuadResult fourier_sine_transform(const RealFunction& f, double delta, double mu, double y,
                                  const QuadConfig& cfg) {
    return checked(try_fourier_sine_transform(f, delta, mu, y, cfg), "Fourier sine transform");
}

QuadResult try_fourier_cosine_transform(const RealFunction& f, double delta, double mu, double y,
                                        const QuadConfig& cfg) {
    return try_fourier(f, delta, mu, y, quad::Kernel::Cosine, cfg);
}

QuadResult fourier_cosine_transform(const RealFunction& f, double delta, double mu, double y,
                                    const QuadConfig& cfg) {
    return checked(try_fourier_cosine_transform(f, delta, mu, y, cfg), "Fourier cosine transform");
}

QuadResult try_lambda_gamma_transform(const RealFunction& f, const LambdaGammaParams& k,
                                      const QuadConfig& cfg) {
    require_positive(k.lambda, "lambda-gamma transform: lambda");
    require_positive(k.delta, "lambda-gamma transform: delta");
    require_positive(k.v, "lambda-gamma transform: v");
    if (!(k.p >= 0.0) || !std::isfinite(k.p)) throw DomainError("lambda-gamma transform: p must be >= 0");
    // u = x^δ turns the kernel into e^{−pu} U(a; c; vu); u = w/p for p > 1.
    const quad::Integrand h = quad::power_substitution(f, k.lambda, k.delta);
    const double scale = std::max(k.p, 1.0);
    QuadResult r = quad::try_integrate_semi_infinite(
        [&](double w) {
            const double u = w / scale;
            const double damp = k.p == 0.0 ? 1.0 : std::exp(-k.p * u);
            if (damp == 0.0) return 0.0;
            return h(u) * damp * specfun::tricomi_u(k.a, k.c, k.v * u);
        },
        cfg);
    r.value /= scale;
    r.err_estimate /= scale;
    return r;
}

QuadResult lambda_gamma_transform(const RealFunction& f, const LambdaGammaParams& k,
                                  const QuadConfig& cfg) {
    return checked(try_lambda_gamma_transform(f, k, cfg), "lambda-gamma transform");
}

QuadResult l_transform(const expr::FunctionExpr& f, const TransformParams& params, double y,
                       const QuadConfig& cfg) {
    return l_transform(wrap(f), params.need("alpha"), params.need("mu"), y, cfg);
}

QuadResult stieltjes_transform(const expr::FunctionExpr& f, const TransformParams& params, double y,
                               const QuadConfig& cfg) {
    return stieltjes_transform(wrap(f), first_parameter(params), params.need("mu"),
                               params.need("rho"), y, cfg);
}

QuadResult fourier_sine_transform(const expr::FunctionExpr& f, const TransformParams& params,
                                  double y, const QuadConfig& cfg) {
    return fourier_sine_transform(wrap(f), first_parameter(params), params.need("mu"), y, cfg);
}

QuadResult fourier_cosine_transform(const expr::FunctionExpr& f, const TransformParams& params,
                                    double y, const QuadConfig& cfg) {
    return fourier_cosine_transform(wrap(f), first_parameter(params), params.need("mu"), y, cfg);
}

QuadResult lambda_gamma_transform(const expr::FunctionExpr& f, const TransformParams& params,
                                  const QuadConfig& cfg) {
    const LambdaGammaParams k{params.need("lambda"), params.need("p"), params.need("delta"),
                              params.need("a"),      params.need("c"), params.need("v")};
    return lambda_gamma_transform(wrap(f), k, cfg);
}

}  // namespace gstx::transforms
