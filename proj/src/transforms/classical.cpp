#include <array>
#include <cmath>

#include "gstx/transforms.hpp"

namespace gstx::transforms {

namespace {

TransformParams lparams(double alpha, double mu) {
    TransformParams p;
    p.alpha = alpha;
    p.mu = mu;
    return p;
}

TransformParams sparams(double alpha, double mu, double rho) {
    TransformParams p;
    p.alpha = alpha;
    p.mu = mu;
    p.rho = rho;
    return p;
}

double unit(double) { return 1.0; }

struct Named {
    ClassicalTransformId id;
    std::string_view name;
};

constexpr std::array<Named, 9> kNames = {{
    {ClassicalTransformId::Laplace, "Laplace"},
    {ClassicalTransformId::L2, "L2"},
    {ClassicalTransformId::LaplaceAlpha, "LaplaceAlpha"},
    {ClassicalTransformId::BorelDzrbashjan, "BorelDzrbashjan"},
    {ClassicalTransformId::Stieltjes, "Stieltjes"},
    {ClassicalTransformId::WidderPotential, "WidderPotential"},
    {ClassicalTransformId::Glasser, "Glasser"},
    {ClassicalTransformId::GeneralizedStieltjes, "GeneralizedStieltjes"},
    {ClassicalTransformId::GeneralizedWidderPotential, "GeneralizedWidderPotential"},
}};

}  // namespace

ClassicalReduction reduce_classical(ClassicalTransformId id, const ClassicalArgs& args) {
    switch (id) {
        case ClassicalTransformId::Laplace:
            return {Family::L, lparams(1.0, 1.0), unit};
        case ClassicalTransformId::L2:
            return {Family::L, lparams(2.0, 2.0), unit};
        case ClassicalTransformId::LaplaceAlpha:
            return {Family::L, lparams(args.alpha, 1.0), unit};
        case ClassicalTransformId::BorelDzrbashjan: {
            // B_{ω,μ}{f; y} = ω y^{μω−1} L_{μω,μ}{f; y}.
            const double omega = args.omega;
            const double mu = args.mu;
            return {Family::L, lparams(mu * omega, mu),
                    [omega, mu](double y) { return omega * std::pow(y, mu * omega - 1.0); }};
        }
        case ClassicalTransformId::Stieltjes:
            return {Family::S, sparams(1.0, 1.0, 1.0), unit};
        case ClassicalTransformId::WidderPotential:
            return {Family::S, sparams(2.0, 2.0, 1.0), unit};
        case ClassicalTransformId::Glasser:
            return {Family::S, sparams(1.0, 2.0, 0.5), unit};
        case ClassicalTransformId::GeneralizedStieltjes:
            return {Family::S, sparams(1.0, 1.0, args.rho), unit};
        case ClassicalTransformId::GeneralizedWidderPotential:
            return {Family::S, sparams(2.0, 2.0, args.rho), unit};
    }
    throw DomainError("unknown classical transform");
}

QuadResult classical_transform(ClassicalTransformId id, const RealFunction& f, double y,
                               const ClassicalArgs& args, const QuadConfig& cfg) {
    const ClassicalReduction red = reduce_classical(id, args);
    QuadResult r = red.family == Family::L
                       ? l_transform(f, *red.params.alpha, *red.params.mu, y, cfg)
                       : stieltjes_transform(f, *red.params.alpha, *red.params.mu,
                                             *red.params.rho, y, cfg);
    const double scale = red.prefactor(y);
    r.value *= scale;
    r.err_estimate *= std::abs(scale);
    return r;
}

std::string_view to_string(ClassicalTransformId id) {
    for (const Named& n : kNames)
        if (n.id == id) return n.name;
    return "unknown";
}

std::optional<ClassicalTransformId> classical_from_string(std::string_view name) {
    for (const Named& n : kNames)
        if (n.name == name) return n.id;
    return std::nullopt;
}

}  // namespace gstx::transforms
