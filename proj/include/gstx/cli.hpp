#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "gstx/identities.hpp"

/// Command-line front end: eval, check, suite, table, list.
namespace gstx::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kIdentityFailure = 1, kUsage = 2, kNonConvergence = 3 };

/// Malformed grid file; carries the 1-based line number.
class GridError : public Error {
public:
    GridError(const std::string& what, int line)
        : Error("grid line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

/// Parses the flat grid format:
///
///     # comment
///     alpha = [1.5, 2.5]
///     f = ["exp(-t)", "1/(1+t^2)"]
///     LLS.mu = [1]          per-identity override
///     identities = [LLS, APP0]
///     tol.LLS = 1e-7
///
/// A bare value is a one-element list. Every function string must parse.
identities::GridSpec parse_grid(std::string_view text);
identities::GridSpec load_grid(const std::string& path);

/// Serializes with numbers at 17 significant digits; NaN and infinities as null.
std::string dump_json(const Json& j, int indent = 2);
/// "%.17g" formatting shared by JSON and CSV output.
std::string number(double x);

Json params_json(const transforms::TransformParams& p);
Json report_json(const identities::IdentityReport& r);
Json typo_audit_json(const identities::TypoAudit& a);
Json suite_json(const identities::SuiteResult& s);

/// Runs one command; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gstx::cli
