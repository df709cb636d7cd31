// Drives the installed binary end to end; locates it relative to the test
// executable inside the build tree.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

std::string finmod_bin() {
    namespace fs = std::filesystem;
    for (const char* cand : {"./tools/finmod", "../tools/finmod", "build/tools/finmod"}) {
        if (fs::exists(cand)) return fs::absolute(cand).string();
    }
    return "finmod";
}

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = finmod_bin() + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    const int status = pclose(p);
    return RunResult{WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("ring-info reproduces the pinned flags") {
    auto r8 = run("ring-info --ring R8");
    CHECK(r8.code == 0);
    CHECK(r8.out.find("local: yes") != std::string::npos);
    CHECK(r8.out.find("dual Kasch: yes") != std::string::npos);
    CHECK(r8.out.find("self-injective (QF): no") != std::string::npos);

    auto k4 = run("ring-info --ring K4");
    CHECK(k4.code == 0);
    CHECK(k4.out.find("self-injective (QF): yes") != std::string::npos);

    auto f2 = run("ring-info --ring F2");
    CHECK(f2.code == 0);
    CHECK(f2.out.find("semisimple: yes") != std::string::npos);
}

TEST_CASE("check subcommands") {
    auto sj = run("check subinjective --ring R8 --b R --a J");
    CHECK(sj.code == 0);
    CHECK(sj.out.find("= true") != std::string::npos);
    auto sj2 = run("check subinjective --ring R8 --b R --a R");
    CHECK(sj2.out.find("= false") != std::string::npos);

    auto sier = run("check sier --ring R8 --module R");
    CHECK(sier.code == 0);
    CHECK(sier.out.find("Counterexample") != std::string::npos);

    auto all = run("check sier --ring Z4 --module all --max-size 16");
    CHECK(all.code == 0);
    CHECK(all.out.find("Counterexample") == std::string::npos);
    CHECK(all.out.find("CertifiedUpToBound(16)") != std::string::npos);

    auto hull = run("check injective-hull --ring Z4 --module R/J");
    CHECK(hull.code == 0);
    CHECK(hull.out.find("size 4") != std::string::npos);

    auto bad = run("check sier --ring R8 --module nonsense");
    CHECK(bad.code == 2);
    CHECK(bad.out.find("UnknownSelector") != std::string::npos);
}

TEST_CASE("json output validates against the published schema shape") {
    auto r = run("check subinjective --ring R8 --b R --a R/J --format json");
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    // required fields of schemas/finmod-report.v1.schema.json
    CHECK(j.at("format") == "finmod.report/1");
    CHECK(j.at("command").is_string());
    CHECK(j.at("config").at("ring") == "R8");
    CHECK(j.at("config").at("max_size").is_number_integer());
    CHECK(j.at("config").at("max_gens").is_number_integer());
    CHECK(j.at("config").at("jobs").is_number_integer());
    CHECK(j.at("config").at("seed").is_number_integer());
    CHECK(j.at("results").is_array());
    CHECK(j.at("results")[0].at("value") == true);
    // byte-stable across runs
    auto r2 = run("check subinjective --ring R8 --b R --a R/J --format json");
    CHECK(r.out == r2.out);
}

TEST_CASE("verify: single suite, skip path, and exit codes") {
    auto e24 = run("verify E2.4 --ring R8");
    CHECK(e24.code == 0);
    CHECK(e24.out.find("FAIL") == std::string::npos);

    auto skip = run("verify E2.5 --ring Z4");
    CHECK(skip.code == 0);
    CHECK(skip.out.find("SKIP") != std::string::npos);
    CHECK(skip.out.find("OUT_OF_SCOPE") != std::string::npos);

    auto unknown = run("verify NOPE --ring Z4");
    CHECK(unknown.code == 2);

    auto usage = run("bogus-subcommand");
    CHECK(usage.code == 2);
}

TEST_CASE("verify writes report files") {
    namespace fs = std::filesystem;
    const std::string dir = (fs::temp_directory_path() / "finmod-cli-reports").string();
    fs::remove_all(dir);
    auto r = run("verify L3.2 --ring Z4 --report-dir " + dir);
    CHECK(r.code == 0);
    CHECK(fs::exists(dir + "/Z4-L3.2.json"));
    std::ifstream f(dir + "/Z4-L3.2.json");
    nlohmann::json j;
    f >> j;
    CHECK(j.at("suite") == "L3.2");
    CHECK(j.at("failed") == 0);
    fs::remove_all(dir);
}

TEST_CASE("cache directory round trip through the cli") {
    namespace fs = std::filesystem;
    const std::string dir = (fs::temp_directory_path() / "finmod-cli-cache").string();
    fs::remove_all(dir);
    auto r1 = run("check sier --ring Z4 --module R --cache-dir " + dir);
    CHECK(r1.code == 0);
    bool has_cache = false;
    for (const auto& e : fs::directory_iterator(dir)) has_cache |= e.path().extension() == ".json";
    CHECK(has_cache);
    auto r2 = run("check sier --ring Z4 --module R --cache-dir " + dir);
    CHECK(r2.code == 0);
    CHECK(r1.out == r2.out);
    fs::remove_all(dir);
}
