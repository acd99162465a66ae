#include <cmath>

#include "gstx/expr.hpp"
#include "gstx/identities.hpp"

namespace gstx::identities {

FunctionSlot FunctionSlot::from_expr(const std::string& text) {
    const expr::FunctionExpr e = expr::parse(text);
    return {[e](double t) { return e(t); }, text};
}

const char* to_string(Status s) {
    switch (s) {
        case Status::Passed: return "passed";
        case Status::Failed: return "failed";
        case Status::Audited: return "audited";
        case Status::Skipped: return "skipped";
        case Status::NonConverged: return "nonconverged";
        case Status::Error: return "error";
    }
    return "error";
}

namespace {

const IdentityCatalogEntry& lookup(const std::string& id) {
    const IdentityCatalogEntry* e = find_identity(id);
    if (e == nullptr) throw DomainError("unknown identity '" + id + "'");
    return *e;
}

void require_inputs(const IdentityCatalogEntry& e, const Inputs& in) {
    for (const std::string& name : e.params) {
        const std::optional<double>* f = in.params.field(name);
        if (f == nullptr || !f->has_value())
            throw DomainError(e.id + ": parameter '" + name + "' is not set");
    }
    if (e.needs_y && !in.y) throw DomainError(e.id + ": transform argument y is not set");
    if (e.uses_f && !in.f) throw DomainError(e.id + ": function f is not set");
    if (e.uses_g && !in.g) throw DomainError(e.id + ": function g is not set");
}

void check_constraint(const IdentityCatalogEntry& e, const Inputs& in) {
    if (!e.constraint) return;
    if (const std::optional<std::string> reason = e.constraint(in))
        throw ConstraintViolation(e.id + ": " + *reason);
}

}  // namespace

IdentityReport check_identity(const std::string& id, const Inputs& inputs, const QuadConfig& cfg,
                              std::optional<double> tol) {
    const IdentityCatalogEntry& e = lookup(id);
    cfg.validate();
    require_inputs(e, inputs);
    check_constraint(e, inputs);

    IdentityReport r;
    r.id = e.id;
    r.citation = e.citation;
    r.inputs = inputs;
    r.tol = tol.value_or(e.default_tol);
    r.audit_only = e.audit_only;

    const SideResult lhs = e.lhs(inputs, cfg);
    r.lhs_value = lhs.value;
    r.lhs_quad_diag = lhs.diag;
    const SideResult rhs = e.rhs(inputs, cfg);
    r.rhs_value = rhs.value;
    r.rhs_quad_diag = rhs.diag;
    for (const SideResult* s : {&lhs, &rhs})
        r.notes.insert(r.notes.end(), s->notes.begin(), s->notes.end());

    r.abs_err = std::abs(r.lhs_value - r.rhs_value);
    const double scale = std::max(std::abs(r.lhs_value), std::abs(r.rhs_value));
    r.rel_err = scale == 0.0 ? 0.0 : r.abs_err / scale;
    const bool finite = std::isfinite(r.lhs_value) && std::isfinite(r.rhs_value);
    r.passed = finite && (r.rel_err <= r.tol || r.abs_err <= kAbsFloor);

    if (!lhs.diag.converged || !rhs.diag.converged) {
        const std::string side = !lhs.diag.converged ? "lhs" : "rhs";
        r.status = Status::NonConverged;
        r.passed = false;
        r.message = side + " quadrature did not reach its tolerance";
        throw IdentityNonConvergence(side, std::move(r));
    }

    if (e.audit_only) {
        r.status = Status::Audited;
        r.message = r.passed ? "sides agree" : "sides disagree (audit only, not a failure)";
    } else {
        r.status = r.passed ? Status::Passed : Status::Failed;
    }
    return r;
}

double closed_form_rhs(const std::string& id, const Inputs& inputs) {
    const IdentityCatalogEntry& e = lookup(id);
    if (e.kind != Kind::ClosedForm) throw DomainError(id + " has no closed-form side");
    require_inputs(e, inputs);
    if (e.constraint) {
        if (const std::optional<std::string> reason = e.constraint(inputs))
            throw DomainError(e.id + ": " + *reason);
    }
    const SideResult rhs = e.rhs(inputs, QuadConfig{});
    if (!rhs.diag.closed_form) throw DomainError(id + " has no closed-form side");
    return rhs.value;
}

}  // namespace gstx::identities
