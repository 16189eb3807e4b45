#pragma once

#include "fraczeta/arith.hpp"
#include "fraczeta/fourier.hpp"
#include "fraczeta/summation.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace fraczeta {

enum class Verdict { pass, fail, inconclusive };
std::string_view verdict_name(Verdict v);

using ParamValue = std::variant<double, std::string>;
using Params = std::map<std::string, ParamValue>;

struct RhsValue {
    double value = 0.0;
    double budget = 0.0;
};

/// One identity check.
struct IdentityReport {
    std::string identity_id;
    Params params;
    TruncatedSum lhs;
    RhsValue rhs_canonical;
    std::optional<double> rhs_printed;
    double abs_diff = 0.0;
    double budget = 0.0;
    double tolerance = 0.0;
    Verdict verdict = Verdict::fail;
    std::string adjudication;
};

/// fail iff abs_diff > max(budget, tol); inconclusive iff the check passes
/// only through the budget and |rhs| <= 3 budget; pass otherwise.
Verdict decide_verdict(double abs_diff, double budget, double tolerance, double rhs);

struct RunContext {
    std::filesystem::path zeros_file;
    std::optional<std::filesystem::path> cache_dir;  // nullopt: build tables in memory
    std::uint64_t memory_budget = kDefaultMemoryBudget;
};

/// Identifiers understood by run_identity.
std::span<const std::string_view> identity_ids();

/// Runs th1, th2-log, th2-mu, th4, em-check or rh-slope. Numeric parameters:
/// x, k, N, zeros, radius, tol (and a, b, xmin, xmax, points); string
/// parameter "function" selects the em-check test function. Missing
/// parameters take the acceptance defaults. UsageError on an unknown id or
/// parameter.
IdentityReport run_identity(std::string_view identity_id, const Params& params, const RunContext& ctx);

/// rh-slope report for an exploration already computed with these settings.
IdentityReport rh_slope_report(const RhExploration& ex, double x_min, double x_max, std::size_t points,
                               std::uint64_t n_terms);

/// Default tolerance for an identity (mirrors the acceptance thresholds).
double default_tolerance(std::string_view identity_id, int k = 1);

enum class ReportFormat { json, csv };

std::string reports_to_json(std::span<const IdentityReport> reports);
std::string reports_to_csv(std::span<const IdentityReport> reports);

/// Serialize to path. IoError when the file cannot be written.
void emit_report(std::span<const IdentityReport> reports, ReportFormat format, const std::filesystem::path& path);

/// 0 when every verdict is pass (or inconclusive for rh-slope), else 1.
int report_exit_code(std::span<const IdentityReport> reports);

}  // namespace fraczeta
