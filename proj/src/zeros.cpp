#include "fraczeta/errors.hpp"
#include "fraczeta/zeta.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fraczeta {

namespace {

std::string trim(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    return s.substr(i);
}

template <typename T>
T parse_number(const std::string& field, const std::string& source, std::size_t line) {
    T value{};
    const auto* first = field.data();
    const auto* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw FormatError(source + ":" + std::to_string(line) + ": cannot parse '" + field + "'");
    return value;
}

}  // namespace

ZeroTable parse_zero_table(const std::string& text, std::string source) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    ZeroTable table;
    table.source = std::move(source);
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty()) continue;
        if (!header_seen) {
            if (line != "index,gamma")
                throw FormatError(table.source + ":" + std::to_string(line_no) + ": expected header 'index,gamma'");
            header_seen = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
            throw FormatError(table.source + ":" + std::to_string(line_no) + ": expected two fields");
        ZeroEntry e;
        e.index = parse_number<std::size_t>(trim(line.substr(0, comma)), table.source, line_no);
        e.gamma = parse_number<double>(trim(line.substr(comma + 1)), table.source, line_no);
        if (!std::isfinite(e.gamma) || e.gamma <= 0.0)
            throw FormatError(table.source + ":" + std::to_string(line_no) + ": ordinate must be positive");
        if (!table.entries.empty() && !(e.gamma > table.entries.back().gamma))
            throw FormatError(table.source + ":" + std::to_string(line_no) + ": ordinates not strictly increasing");
        if (!table.entries.empty() && e.index <= table.entries.back().index)
            throw FormatError(table.source + ":" + std::to_string(line_no) + ": indices not increasing");
        table.entries.push_back(e);
    }
    if (table.entries.empty()) throw FormatError(table.source + ": no zero ordinates");
    return table;
}

ZeroTable load_zero_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open zeros file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_zero_table(buf.str(), path.string());
}

ZeroEntry refine_zero(double seed_gamma) {
    if (!(seed_gamma > 0.0) || seed_gamma > 500.0)
        throw DomainError("refine_zero: seed " + std::to_string(seed_gamma) + " outside (0, 500]");
    const Complex start(0.5, seed_gamma);
    Complex s = start;
    Complex z = zeta_em(s);
    for (int step = 0; step < 50; ++step) {
        if (std::abs(z) <= 1e-10) {
            // one polishing step; keep it only if it improves the residual
            const Complex polished = s - z / zeta_deriv(s);
            const Complex zp = zeta_em(polished);
            if (std::abs(zp) < std::abs(z)) {
                s = polished;
                z = zp;
            }
            ZeroEntry e;
            e.gamma = s.imag();
            e.residual = std::abs(z);
            e.re_deviation = std::fabs(s.real() - 0.5);
            return e;
        }
        const Complex d = zeta_deriv(s);
        if (std::abs(d) == 0.0) throw RefinementError("refine_zero: vanishing derivative", s);
        s -= z / d;
        if (std::abs(s - start) > 0.5) {
            std::ostringstream os;
            os << "refine_zero: iterate " << s << " left the neighbourhood of seed " << seed_gamma;
            throw RefinementError(os.str(), s);
        }
        z = zeta_em(s);
    }
    std::ostringstream os;
    os << "refine_zero: no convergence from seed " << seed_gamma << ", |zeta| = " << std::abs(z);
    throw RefinementError(os.str(), s);
}

ZeroTable refine_table(const ZeroTable& seeds, std::size_t count) {
    if (count == 0 || count > seeds.entries.size()) count = seeds.entries.size();
    ZeroTable out;
    out.source = seeds.source;
    out.refined = true;
    out.entries.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        ZeroEntry e;
        try {
            e = refine_zero(seeds.entries[i].gamma);
        } catch (const Error& err) {
            throw FormatError("zero-table validation failed at index " + std::to_string(seeds.entries[i].index) +
                              ": " + err.what());
        }
        e.index = seeds.entries[i].index;
        if (e.residual > 1e-8)
            throw FormatError("zero-table validation failed: residual " + std::to_string(e.residual) +
                              " at index " + std::to_string(e.index));
        if (!out.entries.empty() && e.gamma - out.entries.back().gamma <= 0.1)
            throw FormatError("zero-table validation failed: zeros " + std::to_string(out.entries.back().index) +
                              " and " + std::to_string(e.index) + " are not separated by 0.1");
        out.entries.push_back(e);
    }
    if (out.entries.empty() || !(out.entries[0].gamma > 14.0 && out.entries[0].gamma < 14.2))
        throw FormatError("zero-table validation failed: first ordinate not in (14, 14.2)");
    return out;
}

std::string format_zero_table(const ZeroTable& table) {
    std::string out = "index,gamma\n";
    char buf[64];
    for (const auto& e : table.entries) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g\n", e.index, e.gamma);
        out += buf;
    }
    return out;
}

}  // namespace fraczeta
