#pragma once

#include "fraczeta/arith.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>

namespace fraczeta {

/// Cache directory: $FRACZETA_CACHE_DIR, else $XDG_CACHE_HOME/fraczeta,
/// else ~/.cache/fraczeta, else the system temp directory.
std::filesystem::path default_cache_dir();

/// Flat binary file: 8-byte magic, u32 version, u64 n_max, u64 FNV-1a
/// checksum of the payload, then spf, lambda, mu, mubar, upsilon.
void save_table(const ArithmeticTable& t, const std::filesystem::path& path);

/// Returns nullopt on a missing file, bad header or checksum mismatch.
std::optional<ArithmeticTable> load_table(const std::filesystem::path& path);

std::filesystem::path table_cache_path(const std::filesystem::path& dir, std::uint64_t n_max);

/// Load from the cache directory or build and store. A corrupt entry is
/// rebuilt; a failure to write the cache is not an error.
ArithmeticTable cached_table(std::uint64_t n_max, const std::filesystem::path& dir,
                             std::uint64_t memory_budget = kDefaultMemoryBudget);

}  // namespace fraczeta
