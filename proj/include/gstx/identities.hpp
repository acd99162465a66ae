#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gstx/transforms.hpp"

/// Catalog of the transform identities and closed-form evaluations, each with
/// two structurally independent evaluation paths, plus the runner that checks
/// them over parameter grids.
namespace gstx::identities {

using transforms::QuadConfig;
using transforms::QuadResult;
using transforms::RealFunction;
using transforms::TransformParams;

/// A function slot: the callable plus the text it came from (for reports).
struct FunctionSlot {
    RealFunction fn;
    std::string text;

    static FunctionSlot from_expr(const std::string& text);
    explicit operator bool() const { return static_cast<bool>(fn); }
};

struct Inputs {
    TransformParams params;
    std::optional<double> y;  // transform argument, for entries that have one
    FunctionSlot f;
    FunctionSlot g;
};

/// Summary of the quadratures behind one side of an identity.
struct QuadDiag {
    double value = 0.0;
    double err_estimate = 0.0;
    std::int64_t n_evals = 0;
    bool converged = true;
    std::int64_t inner_calls = 0;        // nested quadratures evaluated inside the outer one
    std::int64_t inner_unconverged = 0;  // of which did not reach their tolerance
    bool closed_form = false;            // no quadrature on this side
};

struct SideResult {
    double value = 0.0;
    QuadDiag diag;
    std::vector<std::string> notes;
};

using Evaluator = std::function<SideResult(const Inputs&, const QuadConfig&)>;
/// Empty optional when the inputs are admissible, otherwise the reason.
using Constraint = std::function<std::optional<std::string>(const Inputs&)>;

enum class Kind { Nested, Oscillatory, ClosedForm };

struct IdentityCatalogEntry {
    std::string id;
    std::string citation;     // where the identity comes from, e.g. "Lemma 1"
    std::string description;  // LHS = RHS in words
    Kind kind = Kind::Nested;
    std::vector<std::string> params;  // TransformParams fields read by the entry
    bool needs_y = false;
    bool uses_f = false;
    bool uses_g = false;
    Evaluator lhs;
    Evaluator rhs;
    Constraint constraint;
    double default_tol = 1e-6;
    bool audit_only = false;
};

constexpr double kAbsFloor = 1e-12;
constexpr double kNestedTol = 1e-6;
constexpr double kOscillatoryTol = 1e-5;
constexpr double kClosedFormTol = 1e-8;

const std::vector<IdentityCatalogEntry>& list_identities();
/// nullptr when the id is unknown.
const IdentityCatalogEntry* find_identity(const std::string& id);

enum class Status { Passed, Failed, Audited, Skipped, NonConverged, Error };

const char* to_string(Status s);

struct IdentityReport {
    std::string id;
    std::string citation;
    Inputs inputs;
    double tol = 0.0;
    double lhs_value = 0.0;
    double rhs_value = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    bool passed = false;
    bool audit_only = false;
    Status status = Status::Error;
    std::string message;  // skip reason, error text, side of a non-convergence
    QuadDiag lhs_quad_diag;
    QuadDiag rhs_quad_diag;
    std::vector<std::string> notes;
};

/// Thrown by check_identity when one side's outer quadrature fails; carries
/// the report with both values as far as they were obtained.
class IdentityNonConvergence : public NonConvergence {
public:
    IdentityNonConvergence(const std::string& side, IdentityReport report)
        : NonConvergence(side + " side did not converge"), side_(side), report_(std::move(report)) {}
    const std::string& side() const noexcept { return side_; }
    const IdentityReport& report() const noexcept { return report_; }

private:
    std::string side_;
    IdentityReport report_;
};

/// Evaluates both sides and compares them. Throws ConstraintViolation when
/// the entry's constraint rejects the inputs, DomainError for a missing
/// parameter or function slot, IdentityNonConvergence as described above.
IdentityReport check_identity(const std::string& id, const Inputs& inputs,
                              const QuadConfig& cfg = {}, std::optional<double> tol = {});

/// The closed-form side of an application entry.
double closed_form_rhs(const std::string& id, const Inputs& inputs);

// ---------------------------------------------------------------------------
// Typo audit of the Laplace formulas for t^{ν−1} sin(at) and t^{ν−1} cos(at).

enum class AuditConstant { GammaNu, GammaA };

struct AuditPoint {
    double nu, a, y;
    bool sine;
    double integral;    // quadrature of ∫ t^{ν−1} e^{−yt} sin/cos(at) dt
    double with_gamma_nu;
    double with_gamma_a;
    double rel_err_nu;
    double rel_err_a;
};

struct TypoAudit {
    std::vector<AuditPoint> points;
    AuditConstant winner = AuditConstant::GammaNu;
    bool decisive = false;  // winner within 1e−8 everywhere, loser off by ≥ 1e−2 everywhere
    std::string summary;
};

TypoAudit run_typo_audit(const QuadConfig& cfg = {});

/// The audit winner, computed once per process.
AuditConstant lemma2_constant();

// ---------------------------------------------------------------------------
// Grid runs.

/// A parameter grid: per-parameter value lists, optionally overridden per
/// identity as "ID.param"; function lists; an id filter; tolerance overrides.
struct GridSpec {
    std::vector<std::pair<std::string, std::vector<double>>> values;         // includes "y"
    std::vector<std::pair<std::string, std::vector<double>>> overrides;      // "ID.key"
    std::vector<std::string> f;
    std::vector<std::string> g;
    std::vector<std::pair<std::string, std::vector<std::string>>> fn_overrides;  // "ID.f", "ID.g"
    std::optional<std::vector<std::string>> identities;  // unset = all
    std::vector<std::pair<std::string, double>> tol;     // id → tolerance
};

/// The points one entry is evaluated at: the Cartesian product of the lists of
/// the parameters the entry reads (plus y, f, g when it uses them).
std::vector<Inputs> expand_grid(const GridSpec& grid, const IdentityCatalogEntry& entry);

struct SuiteSummary {
    std::int64_t total = 0;
    std::int64_t passed = 0;
    std::int64_t failed = 0;
    std::int64_t skipped = 0;
    std::int64_t audited = 0;
};

struct SuiteResult {
    std::vector<IdentityReport> reports;  // ordered by (catalog index, grid index)
    SuiteSummary summary;
    TypoAudit typo_audit;
};

/// Runs every selected (identity, point) pair, in parallel over `threads`
/// workers (0 = GSTX_THREADS or the hardware concurrency).
SuiteResult run_suite(const GridSpec& grid, const QuadConfig& cfg = {}, unsigned threads = 0);

}  // namespace gstx::identities
