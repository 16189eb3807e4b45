#include "fraczeta/table_cache.hpp"

#include "fraczeta/errors.hpp"


#include <array>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <system_error>

namespace fraczeta {

namespace {

constexpr std::array<char, 8> kMagic = {'F', 'Z', 'T', 'A', 'B', 'L', 'E', '\0'};
constexpr std::uint32_t kVersion = 1;

struct Fnv1a {
    std::uint64_t h = 14695981039346656037ull;
    void feed(const void* data, std::size_t n) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= p[i];
            h *= 1099511628211ull;
        }
    }
};

template <typename T>
void feed_vec(Fnv1a& f, const std::vector<T>& v) {
    f.feed(v.data(), v.size() * sizeof(T));
}

std::uint64_t checksum(const ArithmeticTable& t) {
    Fnv1a f;
    feed_vec(f, t.spf);
    feed_vec(f, t.lambda);
    feed_vec(f, t.mu);
    feed_vec(f, t.mubar);
    feed_vec(f, t.upsilon);
    return f.h;
}

template <typename T>
void write_vec(std::ofstream& out, const std::vector<T>& v) {
    out.write(reinterpret_cast<const char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(T)));
}

template <typename T>
bool read_vec(std::ifstream& in, std::vector<T>& v, std::size_t n) {
    v.resize(n);
    in.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(n * sizeof(T)));
    return static_cast<std::size_t>(in.gcount()) == n * sizeof(T);
}

}  // namespace

std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("FRACZETA_CACHE_DIR"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "fraczeta";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "fraczeta";
    return std::filesystem::temp_directory_path() / "fraczeta";
}

std::filesystem::path table_cache_path(const std::filesystem::path& dir, std::uint64_t n_max) {
    return dir / ("arith_" + std::to_string(n_max) + ".bin");
}

void save_table(const ArithmeticTable& t, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write table cache " + path.string());
    const std::uint64_t sum = checksum(t);
    out.write(kMagic.data(), kMagic.size());
    out.write(reinterpret_cast<const char*>(&kVersion), sizeof kVersion);
    out.write(reinterpret_cast<const char*>(&t.n_max), sizeof t.n_max);
    out.write(reinterpret_cast<const char*>(&sum), sizeof sum);
    write_vec(out, t.spf);
    write_vec(out, t.lambda);
    write_vec(out, t.mu);
    write_vec(out, t.mubar);
    write_vec(out, t.upsilon);
    out.flush();
    if (!out) throw IoError("failed writing table cache " + path.string());
}

std::optional<ArithmeticTable> load_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::array<char, 8> magic{};
    std::uint32_t version = 0;
    std::uint64_t sum = 0;
    ArithmeticTable t;
    in.read(magic.data(), magic.size());
    in.read(reinterpret_cast<char*>(&version), sizeof version);
    in.read(reinterpret_cast<char*>(&t.n_max), sizeof t.n_max);
    in.read(reinterpret_cast<char*>(&sum), sizeof sum);
    if (!in || magic != kMagic || version != kVersion || t.n_max == 0 || t.n_max > kMaxSieveBound) return std::nullopt;
    const std::size_t n = static_cast<std::size_t>(t.n_max) + 1;
    if (!read_vec(in, t.spf, n) || !read_vec(in, t.lambda, n) || !read_vec(in, t.mu, n) ||
        !read_vec(in, t.mubar, n) || !read_vec(in, t.upsilon, n))
        return std::nullopt;
    if (checksum(t) != sum) return std::nullopt;
    return t;
}

ArithmeticTable cached_table(std::uint64_t n_max, const std::filesystem::path& dir, std::uint64_t memory_budget) {
    const auto path = table_cache_path(dir, n_max);
    if (auto t = load_table(path); t && t->n_max == n_max) return std::move(*t);
    auto t = build_sieve(n_max, memory_budget);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    // write beside the target and rename, so a concurrent reader never sees a partial file
    auto tmp = path;
    tmp += ".tmp";
    try {
        save_table(t, tmp);
        std::filesystem::rename(tmp, path, ec);
    } catch (const IoError&) {
    }
    std::filesystem::remove(tmp, ec);
    return t;
}

}  // namespace fraczeta
