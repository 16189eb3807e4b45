#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fraczeta {

/// Sieved arithmetic weights on 1..n_max. Index 0 of every array is unused
/// padding so that entry n is weight(n). Immutable once built.
struct ArithmeticTable {
    std::uint64_t n_max = 0;
    std::vector<std::uint32_t> spf;  // smallest prime factor, spf[1] = 1
    std::vector<double> lambda;      // von Mangoldt
    std::vector<std::int8_t> mu;     // Moebius
    std::vector<double> mubar;       // sum_{d|n} mu(d) sqrt(d) mu(n/d)
    std::vector<double> upsilon;     // sum_{d|n} mu(d) sqrt(d)

    bool operator==(const ArithmeticTable&) const = default;
};

inline constexpr std::uint64_t kMaxSieveBound = 100'000'000;
inline constexpr std::uint64_t kDefaultMemoryBudget = 2ull << 30;

/// Bytes needed for a table with the given bound.
std::uint64_t table_footprint(std::uint64_t n_max);

/// Linear sieve for spf, lambda and mu, then divisor-loop convolutions for
/// mubar and upsilon. Throws CapacityError on n_max = 0, n_max > 1e8, or a
/// footprint above memory_budget.
ArithmeticTable build_sieve(std::uint64_t n_max, std::uint64_t memory_budget = kDefaultMemoryBudget);

double vonmangoldt(const ArithmeticTable& t, std::uint64_t n);
int moebius(const ArithmeticTable& t, std::uint64_t n);
double mubar(const ArithmeticTable& t, std::uint64_t n);
double upsilon(const ArithmeticTable& t, std::uint64_t n);

/// h(n) = sum_{d|n} f(d) g(n/d) for n = 1..N. Inputs and output use the
/// same layout as the table arrays: element 0 is padding, so the spans
/// have N + 1 entries. Throws ArgumentError on a length mismatch.
std::vector<double> dirichlet_convolve(std::span<const double> f, std::span<const double> g);

}  // namespace fraczeta
