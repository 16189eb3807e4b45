#pragma once

#include "fraczeta/arith.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace fraczeta {

struct InvariantResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    bool io_error = false;  // failed because an input file was missing or malformed
};

struct SelftestOptions {
    std::uint64_t n_max = 100000;
    std::filesystem::path zeros_file;
    std::size_t zero_count = 100;
    std::uint64_t memory_budget = kDefaultMemoryBudget;
};

struct SelftestReport {
    std::vector<InvariantResult> results;

    bool ok() const;
    /// 0 on success, 3 when a failure came from the zeros file, else 1.
    int exit_code() const;
};

/// Runs every invariant suite; a throwing check is recorded as a failure
/// and the remaining checks still run.
SelftestReport run_invariants(const SelftestOptions& options);

}  // namespace fraczeta
