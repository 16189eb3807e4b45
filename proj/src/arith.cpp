#include "fraczeta/arith.hpp"

#include "fraczeta/errors.hpp"

#include <cmath>
#include <string>

namespace fraczeta {

std::uint64_t table_footprint(std::uint64_t n_max) {
    const std::uint64_t per_entry = sizeof(std::uint32_t) + 3 * sizeof(double) + sizeof(std::int8_t);
    return (n_max + 1) * per_entry;
}

ArithmeticTable build_sieve(std::uint64_t n_max, std::uint64_t memory_budget) {
    if (n_max == 0) throw CapacityError("sieve bound must be at least 1");
    if (n_max > kMaxSieveBound)
        throw CapacityError("sieve bound " + std::to_string(n_max) + " exceeds 1e8");
    if (table_footprint(n_max) > memory_budget)
        throw CapacityError("table for n_max=" + std::to_string(n_max) + " needs " +
                            std::to_string(table_footprint(n_max)) + " bytes, budget is " +
                            std::to_string(memory_budget));

    const std::size_t n = static_cast<std::size_t>(n_max);
    ArithmeticTable t;
    t.n_max = n_max;
    t.spf.assign(n + 1, 0);
    t.lambda.assign(n + 1, 0.0);
    t.mu.assign(n + 1, 0);
    t.mubar.assign(n + 1, 0.0);
    t.upsilon.assign(n + 1, 0.0);

    std::vector<std::uint32_t> primes;
    t.spf[1] = 1;
    t.mu[1] = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        if (t.spf[i] == 0) {
            t.spf[i] = static_cast<std::uint32_t>(i);
            primes.push_back(static_cast<std::uint32_t>(i));
            t.mu[i] = -1;
        }
        const std::uint32_t pi = t.spf[i];
        for (const std::uint32_t p : primes) {
            if (p > pi || static_cast<std::uint64_t>(p) * i > n) break;
            const std::size_t ip = static_cast<std::size_t>(p) * i;
            t.spf[ip] = p;
            t.mu[ip] = (p == pi) ? 0 : static_cast<std::int8_t>(-t.mu[i]);
        }
    }

    // Lambda(n) = log p iff n / p^a == 1 with p = spf(n).
    for (std::size_t i = 2; i <= n; ++i) {
        const std::uint32_t p = t.spf[i];
        std::size_t m = i;
        while (m % p == 0) m /= p;
        if (m == 1) t.lambda[i] = std::log(static_cast<double>(p));
    }

    std::vector<double> mu_sqrt(n + 1, 0.0);
    for (std::size_t d = 1; d <= n; ++d)
        if (t.mu[d] != 0) mu_sqrt[d] = t.mu[d] * std::sqrt(static_cast<double>(d));

    for (std::size_t d = 1; d <= n; ++d) {
        if (t.mu[d] == 0) continue;
        const double a = mu_sqrt[d];
        for (std::size_t m = 1, dm = d; dm <= n; ++m, dm += d) {
            t.upsilon[dm] += a;
            if (t.mu[m] != 0) t.mubar[dm] += a * t.mu[m];
        }
    }
    return t;
}

namespace {
void check_index(const ArithmeticTable& t, std::uint64_t n) {
    if (n < 1 || n > t.n_max)
        throw IndexError("index " + std::to_string(n) + " outside 1.." + std::to_string(t.n_max));
}
}  // namespace

double vonmangoldt(const ArithmeticTable& t, std::uint64_t n) {
    check_index(t, n);
    return t.lambda[n];
}

int moebius(const ArithmeticTable& t, std::uint64_t n) {
    check_index(t, n);
    return t.mu[n];
}

double mubar(const ArithmeticTable& t, std::uint64_t n) {
    check_index(t, n);
    return t.mubar[n];
}

double upsilon(const ArithmeticTable& t, std::uint64_t n) {
    check_index(t, n);
    return t.upsilon[n];
}

std::vector<double> dirichlet_convolve(std::span<const double> f, std::span<const double> g) {
    if (f.size() != g.size())
        throw ArgumentError("dirichlet_convolve: length mismatch (" + std::to_string(f.size()) +
                            " vs " + std::to_string(g.size()) + ")");
    std::vector<double> h(f.size(), 0.0);
    if (f.size() < 2) return h;
    const std::size_t n = f.size() - 1;
    for (std::size_t d = 1; d <= n; ++d) {
        const double fd = f[d];
        if (fd == 0.0) continue;
        for (std::size_t m = 1, dm = d; dm <= n; ++m, dm += d) h[dm] += fd * g[m];
    }
    return h;
}

}  // namespace fraczeta
