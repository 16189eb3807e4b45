#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(FRACZETA_CLI) + " " + args + " 2>&1";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path scratch(const std::string& name) {
    const auto dir = fs::temp_directory_path() / "fraczeta_test_cli";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("usage errors exit 2") {
    CHECK(run("").code == 2);
    CHECK(run("verify").code == 2);
    CHECK(run("verify bogus").code == 2);
    CHECK(run("verify th2-mu --nope 1").code == 2);
    CHECK(run("verify th2-mu --k 2").code == 2);
    CHECK(run("verify th1 --x 10").code == 2);
    CHECK(run("zeros").code == 2);
    CHECK(run("--help").code == 0);
}

TEST_CASE("verify writes a parseable report") {
    const auto json_path = scratch("th2mu.json");
    const auto csv_path = scratch("th2mu.csv");
    const auto r = run("verify th2-mu --x 2 --nterms 1000000 --json " + json_path.string() + " --csv " + csv_path.string());
    CHECK(r.code == 0);
    std::ifstream in(json_path);
    const auto doc = nlohmann::json::parse(in);
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["identity_id"] == "th2-mu");
    CHECK(doc[0]["verdict"] == "pass");
    CHECK(doc[0]["params"]["N"] == 1000000);
    CHECK(std::abs(doc[0]["lhs"]["value"].get<double>() + 0.10132118364233778) <= 5e-7);
    CHECK(doc[0]["adjudication"].get<std::string>().find("1/(2π²)") != std::string::npos);
    CHECK(fs::file_size(csv_path) > 0);
}

TEST_CASE("verification failure exits 1") {
    // em-check has no truncation budget, so a zero tolerance fails on rounding alone
    const auto json_path = scratch("em.json");
    const auto r = run("verify em-check --function square --tol 0 --json " + json_path.string());
    CHECK(r.code == 1);
    std::ifstream in(json_path);
    CHECK(nlohmann::json::parse(in)[0]["verdict"] == "fail");
    CHECK(run("verify em-check --function square").code == 0);
}

TEST_CASE("io and format errors exit 3") {
    CHECK(run("verify th2-mu --json /nonexistent/dir/r.json").code == 3);
    CHECK(run("--zeros-file /nonexistent/zeros.csv verify th1").code == 3);
    const auto bad = scratch("bad.csv");
    { std::ofstream(bad) << "index,gamma\n1,14.13\n2,14.14\n"; }
    const auto r = run("--zeros-file " + bad.string() + " selftest");
    CHECK(r.code != 0);
    CHECK(r.out.find("zero-table validation") != std::string::npos);
    const auto missing = run("--zeros-file /nonexistent/zeros.csv selftest");
    CHECK(missing.code != 0);
    CHECK(missing.out.find("cannot open zeros file") != std::string::npos);
}

TEST_CASE("zeros refine") {
    const auto out = scratch("refined.csv");
    CHECK(run("zeros refine --count 5 --output " + out.string()).code == 0);
    std::ifstream in(out);
    std::string header, first;
    std::getline(in, header);
    std::getline(in, first);
    CHECK(header == "index,gamma");
    CHECK(first.rfind("1,14.13472514173469", 0) == 0);
}

TEST_CASE("selftest and em-check") {
    const auto st = run("selftest");
    CHECK(st.code == 0);
    CHECK(st.out.find("FAIL") == std::string::npos);
    const auto em = run("em-check");
    CHECK(em.code == 0);
    CHECK(em.out.find("exp_decay") != std::string::npos);
}
