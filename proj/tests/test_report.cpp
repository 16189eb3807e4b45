#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include "fraczeta/errors.hpp"
#include "fraczeta/report.hpp"
#include "fraczeta/table_cache.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace fraczeta;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "fraczeta_test_report";
    fs::create_directories(dir);
    return dir / name;
}

RunContext context() {
    RunContext ctx;
    ctx.zeros_file = FRACZETA_SEED_ZEROS;
    return ctx;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("verdict rule") {
    CHECK(decide_verdict(1e-8, 1e-6, 1e-7, 1.0) == Verdict::pass);
    CHECK(decide_verdict(1e-5, 1e-6, 1e-7, 1.0) == Verdict::fail);
    CHECK(decide_verdict(5e-7, 1e-6, 1e-7, 2e-6) == Verdict::inconclusive);
    CHECK(decide_verdict(5e-8, 1e-6, 1e-7, 2e-6) == Verdict::pass);
    CHECK(decide_verdict(NAN, 1e-6, 1e-7, 1.0) == Verdict::fail);
    CHECK(verdict_name(Verdict::inconclusive) == "inconclusive");
}

TEST_CASE("run_identity") {
    const auto r = run_identity("th2-mu", {{"x", 2.0}, {"N", 1e6}}, context());
    CHECK(r.verdict == Verdict::pass);
    CHECK(r.adjudication.find("1/(2π²)") != std::string::npos);
    REQUIRE(r.rhs_printed);
    CHECK(std::fabs(*r.rhs_printed - 2 * r.rhs_canonical.value) <= 1e-17);

    const auto t1 = run_identity("th1", {{"k", 1.0}, {"x", 10.5}, {"N", 1e6}, {"zeros", 100.0}}, context());
    CHECK(t1.verdict == Verdict::pass);
    CHECK(t1.abs_diff <= 1e-3);
    CHECK(t1.adjudication.find("sigma=-1 wins") != std::string::npos);
    CHECK(t1.adjudication.find("x^(-2j-1-k)") != std::string::npos);

    const auto t2 = run_identity("th1", {{"k", 2.0}, {"x", 5.5}}, context());
    CHECK(t2.verdict == Verdict::pass);
    CHECK(t2.adjudication.find("simple-pole residue") != std::string::npos);

    CHECK(run_identity("em-check", {{"function", std::string("exp_decay")}}, context()).verdict == Verdict::pass);
    CHECK(run_identity("th4", {{"x", 1.0}}, context()).abs_diff <= 1e-12);

    CHECK_THROWS_AS(run_identity("bogus", {}, context()), UsageError);
    CHECK_THROWS_AS(run_identity("th2-mu", {{"k", 1.0}}, context()), UsageError);
    CHECK_THROWS_AS(run_identity("th2-mu", {{"x", std::string("two")}}, context()), UsageError);
    CHECK_THROWS_AS(run_identity("th1", {{"N", -5.0}}, context()), UsageError);
    CHECK(identity_ids().size() == 6);
}

TEST_CASE("json and csv") {
    const auto r = run_identity("th2-mu", {{"x", 3.5}}, context());
    const std::vector<IdentityReport> reports{r, r};
    const auto doc = json::parse(reports_to_json(reports));
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 2);
    const auto& o = doc[0];
    CHECK(o["identity_id"] == "th2-mu");
    CHECK(o["params"]["x"] == 3.5);
    CHECK(o["lhs"]["value"].get<double>() == r.lhs.value);  // 17 digits round-trip exactly
    CHECK(o["lhs"]["terms_used"] == r.lhs.terms_used);
    CHECK(o["rhs_canonical"]["budget"].get<double>() == r.rhs_canonical.budget);
    CHECK(o["rhs_printed"].get<double>() == *r.rhs_printed);
    CHECK(o["verdict"] == "pass");
    for (const char* key : {"abs_diff", "budget", "adjudication"}) CHECK(o.contains(key));

    CHECK(json::parse(reports_to_json({})).empty());

    const auto csv = reports_to_csv(reports);
    CHECK(csv.rfind("identity_id,params,lhs_value", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);

    const auto path = scratch("r.json");
    emit_report(reports, ReportFormat::json, path);
    CHECK(slurp(path).find("\"verdict\":\"pass\"") != std::string::npos);
    emit_report({}, ReportFormat::json, path);
    CHECK(json::parse(slurp(path)).empty());
    CHECK_THROWS_AS(emit_report(reports, ReportFormat::csv, "/nonexistent/dir/r.csv"), IoError);

    CHECK(report_exit_code(reports) == 0);
    CHECK(report_exit_code({}) == 0);
    auto bad = r;
    bad.verdict = Verdict::inconclusive;
    CHECK(report_exit_code(std::vector{bad}) == 1);
    bad.identity_id = "rh-slope";
    CHECK(report_exit_code(std::vector{bad}) == 0);
}

TEST_CASE("determinism") {
    const auto a = run_identity("th2-log", {{"x", 3.7}, {"N", 1e5}}, context());
    const auto b = run_identity("th2-log", {{"x", 3.7}, {"N", 1e5}}, context());
    CHECK(reports_to_json(std::vector{a}) == reports_to_json(std::vector{b}));
}

TEST_CASE("table cache") {
    const auto dir = scratch("cache");
    fs::remove_all(dir);
    const auto t = build_sieve(5000);
    const auto path = table_cache_path(dir, 5000);
    CHECK(path.filename() == "arith_5000.bin");

    const auto built = cached_table(5000, dir);
    CHECK(built == t);
    REQUIRE(fs::exists(path));
    const auto loaded = load_table(path);
    REQUIRE(loaded);
    CHECK(*loaded == t);

    // flip one byte in the mu array: checksum mismatch, table rebuilt
    {
        std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(static_cast<std::streamoff>(fs::file_size(path) / 2));
        char c = 0;
        f.read(&c, 1);
        f.seekp(static_cast<std::streamoff>(fs::file_size(path) / 2));
        c = static_cast<char>(c ^ 0x5a);
        f.write(&c, 1);
    }
    CHECK_FALSE(load_table(path));
    CHECK(cached_table(5000, dir) == t);
    CHECK(load_table(path));

    // truncated and foreign files
    fs::resize_file(path, 40);
    CHECK_FALSE(load_table(path));
    { std::ofstream(path) << "not a table"; }
    CHECK_FALSE(load_table(path));
    CHECK_FALSE(load_table(dir / "missing.bin"));
    CHECK_THROWS_AS(save_table(t, "/nonexistent/dir/t.bin"), IoError);
}

TEST_CASE("cache directory resolution") {
    setenv("FRACZETA_CACHE_DIR", "/tmp/fz_override", 1);
    CHECK(default_cache_dir() == fs::path("/tmp/fz_override"));
    unsetenv("FRACZETA_CACHE_DIR");
    setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
    CHECK(default_cache_dir() == fs::path("/tmp/xdg/fraczeta"));
}
