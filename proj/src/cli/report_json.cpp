#include "gstx/cli.hpp"

namespace gstx::cli {

namespace {

Json diag_json(const identities::QuadDiag& d) {
    Json j;
    j["value"] = d.value;
    j["err_estimate"] = d.err_estimate;
    j["n_evals"] = d.n_evals;
    j["converged"] = d.converged;
    j["inner_calls"] = d.inner_calls;
    j["inner_unconverged"] = d.inner_unconverged;
    j["closed_form"] = d.closed_form;
    return j;
}

Json optional_number(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

Json optional_text(const identities::FunctionSlot& s) {
    return s ? Json(s.text) : Json(nullptr);
}

}  // namespace

Json params_json(const transforms::TransformParams& p) {
    Json j = Json::object();
    for (const std::string& name : transforms::param_names())
        if (const std::optional<double>* f = p.field(name); f && *f) j[name] = **f;
    return j;
}

Json report_json(const identities::IdentityReport& r) {
    Json j;
    j["id"] = r.id;
    j["citation"] = r.citation;
    j["params"] = params_json(r.inputs.params);
    j["y"] = optional_number(r.inputs.y);
    j["f"] = optional_text(r.inputs.f);
    j["g"] = optional_text(r.inputs.g);
    j["tol"] = r.tol;
    j["lhs_value"] = r.lhs_value;
    j["rhs_value"] = r.rhs_value;
    j["abs_err"] = r.abs_err;
    j["rel_err"] = r.rel_err;
    j["passed"] = r.passed;
    j["audit"] = r.audit_only;
    j["status"] = identities::to_string(r.status);
    j["message"] = r.message;
    j["lhs_quad_diag"] = diag_json(r.lhs_quad_diag);
    j["rhs_quad_diag"] = diag_json(r.rhs_quad_diag);
    j["notes"] = r.notes;
    return j;
}

Json typo_audit_json(const identities::TypoAudit& a) {
    Json j;
    const bool nu = a.winner == identities::AuditConstant::GammaNu;
    j["formula"] = "int_0^inf t^(nu-1) e^(-yt) {sin,cos}(at) dt = C (a^2+y^2)^(-nu/2) {sin,cos}(nu atan(a/y))";
    j["winner"] = nu ? "Gamma(nu)" : "Gamma(a)";
    j["loser"] = nu ? "Gamma(a)" : "Gamma(nu)";
    j["printed"] = "Gamma(a)";
    j["decisive"] = a.decisive;
    j["summary"] = a.summary;
    Json pts = Json::array();
    for (const identities::AuditPoint& p : a.points) {
        Json q;
        q["kernel"] = p.sine ? "sin" : "cos";
        q["nu"] = p.nu;
        q["a"] = p.a;
        q["y"] = p.y;
        q["integral"] = p.integral;
        q["with_gamma_nu"] = p.with_gamma_nu;
        q["with_gamma_a"] = p.with_gamma_a;
        q["rel_err_gamma_nu"] = p.rel_err_nu;
        q["rel_err_gamma_a"] = p.rel_err_a;
        pts.push_back(std::move(q));
    }
    j["points"] = std::move(pts);
    return j;
}

Json suite_json(const identities::SuiteResult& s) {
    Json j;
    Json sum;
    sum["total"] = s.summary.total;
    sum["passed"] = s.summary.passed;
    sum["failed"] = s.summary.failed;
    sum["skipped"] = s.summary.skipped;
    sum["audited"] = s.summary.audited;
    j["summary"] = std::move(sum);
    j["typo_audit"] = typo_audit_json(s.typo_audit);
    Json reports = Json::array();
    for (const identities::IdentityReport& r : s.reports) reports.push_back(report_json(r));
    j["reports"] = std::move(reports);
    return j;
}

}  // namespace gstx::cli
