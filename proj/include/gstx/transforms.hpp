#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gstx/expr.hpp"
#include "gstx/quadrature.hpp"

/// The generalized transforms, evaluated on the u = t^μ side:
///
///     L_{α,μ}{f; y}     = ∫ t^{α−1} e^{−y^μ t^μ} f(t) dt
///     S_{α,μ,ρ}{f; y}   = ∫ t^{α−1} (y^μ + t^μ)^{−ρ} f(t) dt
///     F_{s,c; δ,μ}{f; y} = ∫ t^{δ−1} sin/cos(y^μ t^μ) f(t) dt
///     λγ∞{f}            = ∫ x^{λ−1} e^{−p x^δ} U(a; c; v x^δ) f(x) dx
///
/// All integrals run over (0, ∞). Each operation comes in a checked form that
/// throws QuadNonConvergence and a `try_` form that reports through `converged`.
namespace gstx::transforms {

using RealFunction = std::function<double(double)>;
using quad::QuadConfig;
using quad::QuadResult;

struct TransformParams {
    std::optional<double> alpha, mu, delta, lambda, rho, nu, a, b, beta, p, c, v;

    /// Value of a field or DomainError naming it.
    double need(std::string_view name) const;
    /// Pointer to the named field, nullptr for an unknown name.
    std::optional<double>* field(std::string_view name);
    const std::optional<double>* field(std::string_view name) const;
};

/// Names of every TransformParams field, in declaration order.
const std::vector<std::string>& param_names();

QuadResult try_l_transform(const RealFunction& f, double alpha, double mu, double y,
                           const QuadConfig& cfg = {});
QuadResult l_transform(const RealFunction& f, double alpha, double mu, double y,
                       const QuadConfig& cfg = {});

QuadResult try_stieltjes_transform(const RealFunction& f, double alpha, double mu, double rho,
                                   double y, const QuadConfig& cfg = {});
QuadResult stieltjes_transform(const RealFunction& f, double alpha, double mu, double rho, double y,
                               const QuadConfig& cfg = {});

QuadResult try_fourier_sine_transform(const RealFunction& f, double delta, double mu, double y,
                                      const QuadConfig& cfg = {});
QuadResult fourier_sine_transform(const RealFunction& f, double delta, double mu, double y,
                                  const QuadConfig& cfg = {});
QuadResult try_fourier_cosine_transform(const RealFunction& f, double delta, double mu, double y,
                                        const QuadConfig& cfg = {});
QuadResult fourier_cosine_transform(const RealFunction& f, double delta, double mu, double y,
                                    const QuadConfig& cfg = {});

struct LambdaGammaParams {
    double lambda, p, delta, a, c, v;
};

/// p = 0 is accepted: the U kernel alone then has to supply the decay.
QuadResult try_lambda_gamma_transform(const RealFunction& f, const LambdaGammaParams& k,
                                      const QuadConfig& cfg = {});
QuadResult lambda_gamma_transform(const RealFunction& f, const LambdaGammaParams& k,
                                  const QuadConfig& cfg = {});

// Parameter-bundle forms over parsed expressions. The Stieltjes and Fourier
// forms read `delta`, falling back to `alpha` when `delta` is unset.
QuadResult l_transform(const expr::FunctionExpr& f, const TransformParams& params, double y,
                       const QuadConfig& cfg = {});
QuadResult stieltjes_transform(const expr::FunctionExpr& f, const TransformParams& params, double y,
                               const QuadConfig& cfg = {});
QuadResult fourier_sine_transform(const expr::FunctionExpr& f, const TransformParams& params,
                                  double y, const QuadConfig& cfg = {});
QuadResult fourier_cosine_transform(const expr::FunctionExpr& f, const TransformParams& params,
                                    double y, const QuadConfig& cfg = {});
QuadResult lambda_gamma_transform(const expr::FunctionExpr& f, const TransformParams& params,
                                  const QuadConfig& cfg = {});

enum class ClassicalTransformId {
    Laplace,
    L2,
    LaplaceAlpha,
    BorelDzrbashjan,
    Stieltjes,
    WidderPotential,
    Glasser,
    GeneralizedStieltjes,
    GeneralizedWidderPotential,
};

enum class Family { L, S };

/// Free parameters of the classical transforms that carry one.
struct ClassicalArgs {
    double alpha = 1.0;  // LaplaceAlpha
    double omega = 1.0;  // BorelDzrbashjan
    double mu = 1.0;     // BorelDzrbashjan
    double rho = 1.0;    // GeneralizedStieltjes, GeneralizedWidderPotential
};

/// classical{f; y} = prefactor(y) · generalized{f; y} with the given parameters.
struct ClassicalReduction {
    Family family;
    TransformParams params;
    std::function<double(double)> prefactor;
};

ClassicalReduction reduce_classical(ClassicalTransformId id, const ClassicalArgs& args = {});

/// Evaluates a classical transform through its reduction.
QuadResult classical_transform(ClassicalTransformId id, const RealFunction& f, double y,
                               const ClassicalArgs& args = {}, const QuadConfig& cfg = {});

std::string_view to_string(ClassicalTransformId id);
std::optional<ClassicalTransformId> classical_from_string(std::string_view name);

}  // namespace gstx::transforms
