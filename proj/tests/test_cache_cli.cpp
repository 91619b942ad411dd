/**
 * @file test_cache_cli.cpp
 * @brief Cache-layer unit tests (digests, manifest, atomic storage,
 *        corruption detection) and end-to-end smoke tests of the command
 *        line binary driven through a pipe.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "charnum/cache.hpp"
#include "charnum/tangency.hpp"

using namespace charnum;
namespace fs = std::filesystem;

namespace {

/// Self-cleaning unique temporary directory.
struct TempDir {
    fs::path path;

    TempDir() {
        static int counter = 0;
        auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
        path = fs::temp_directory_path() /
               ("charnum-test-" + std::to_string(stamp) + "-" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void spew(const fs::path& p, const std::string& bytes) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    REQUIRE(out.good());
    out << bytes;
}

struct RunResult {
    int exit_code;
    std::string output;  ///< stdout and stderr combined
};

/// Run the installed CLI binary with the given arguments.
RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CHARNUM_CLI_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    while (size_t n = fread(buffer, 1, sizeof buffer, pipe)) output.append(buffer, n);
    int status = pclose(pipe);
    int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {exit_code, output};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::string first_line(const std::string& text) {
    return text.substr(0, text.find('\n'));
}

}  // namespace

TEST_CASE("fnv1a64 matches the published test vectors") {
    CHECK(fnv1a64("") == "cbf29ce484222325");
    CHECK(fnv1a64("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a64("foobar") == "85944171f73967e8");
}

TEST_CASE("cache file names are canonical") {
    CHECK(cache_file_name(Target::Plane, Kind::G, 5) == "p2-G-cap5.json");
    CHECK(cache_file_name(Target::Quadric, Kind::KPirr, 6) == "p1xp1-KPirr-cap6.json");
    CHECK(cache_file_name(Target::Plane, Kind::F, 5, 2) == "p2-F-z2-cap5.json");
    CHECK(cache_file_name(Target::Quadric, Kind::F, 6) == "p1xp1-F-cap6.json");
}

TEST_CASE("store and load round-trip through the manifest") {
    TempDir dir;
    CHECK(load_manifest(dir.path).entries.empty());

    Potential g = build_G(Target::Plane, 3);
    store_potential(dir.path, g);
    Potential h = build_G(Target::Plane, 2);
    store_potential(dir.path, h);

    CacheManifest m = load_manifest(dir.path);
    CHECK(m.engine_version == kEngineVersion);
    REQUIRE(m.entries.size() == 2);
    // Entries stay sorted by file name.
    CHECK(m.entries[0].file == "p2-G-cap2.json");
    CHECK(m.entries[1].file == "p2-G-cap3.json");
    CHECK(m.entries[1].kind == "G");
    CHECK(m.entries[1].cap == 3);
    CHECK(m.entries[1].digest == fnv1a64(slurp(dir.path / "p2-G-cap3.json")));

    auto loaded = load_potential(dir.path, Target::Plane, Kind::G, 3);
    REQUIRE(loaded.has_value());
    CHECK(same_series(*loaded, g));
    CHECK(loaded->kind == Kind::G);

    // Absent entries are a miss, not an error.
    CHECK(!load_potential(dir.path, Target::Plane, Kind::G, 5).has_value());
    CHECK(!load_potential(dir.path, Target::Quadric, Kind::G, 3).has_value());

    // No temporary files survive the atomic writes.
    for (const auto& entry : fs::directory_iterator(dir.path))
        CHECK(entry.path().extension() != ".tmp");

    CHECK(best_cached_cap(dir.path, Target::Plane, Kind::G) == 3);
    CHECK(!best_cached_cap(dir.path, Target::Plane, Kind::K).has_value());
}

TEST_CASE("corrupted cache files fail their digest check") {
    TempDir dir;
    store_potential(dir.path, build_G(Target::Plane, 2));
    fs::path file = dir.path / "p2-G-cap2.json";
    spew(file, slurp(file) + " ");
    CHECK_THROWS_WITH_AS(load_potential(dir.path, Target::Plane, Kind::G, 2),
                         doctest::Contains("digest"), std::runtime_error);
}

TEST_CASE("a manifest from another engine version is treated as empty") {
    TempDir dir;
    store_potential(dir.path, build_G(Target::Plane, 2));
    std::string manifest = slurp(dir.path / "manifest.json");
    std::string stale = manifest;
    stale.replace(stale.find(kEngineVersion), std::string(kEngineVersion).size(), "0.0.1");
    REQUIRE(stale != manifest);
    spew(dir.path / "manifest.json", stale);
    CHECK(load_manifest(dir.path).entries.empty());
    CHECK(!load_potential(dir.path, Target::Plane, Kind::G, 2).has_value());
}

TEST_CASE("identical builds produce byte-identical cache files") {
    TempDir a;
    TempDir b;
    store_potential(a.path, build_G(Target::Plane, 3));
    store_potential(b.path, build_G(Target::Plane, 3));
    CHECK(slurp(a.path / "p2-G-cap3.json") == slurp(b.path / "p2-G-cap3.json"));
    CHECK(slurp(a.path / "manifest.json") == slurp(b.path / "manifest.json"));
}

TEST_CASE("cli: compute reports the files it builds") {
    TempDir dir;
    auto r = run_cli("compute --cache-dir " + dir.path.string() + " --target p2 --cap 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "built p2 potentials at cap 3"));
    CHECK(contains(r.output, "p2-G-cap3.json"));
    CHECK(contains(r.output, "p2-F-z3-cap3.json"));
    CHECK(fs::exists(dir.path / "p2-K-cap3.json"));
    CHECK(fs::exists(dir.path / "manifest.json"));
}

TEST_CASE("cli: query answers from the cache with stratum metadata") {
    TempDir dir;
    std::string base = " --cache-dir " + dir.path.string() + " --target p2";
    REQUIRE(run_cli("compute" + base + " --cap 3").exit_code == 0);

    auto hit = run_cli("query" + base + " --kind G --class 3 --a 8");
    CHECK(hit.exit_code == 0);
    CHECK(first_line(hit.output) == "12");
    CHECK(contains(hit.output, "# stratum: a+b+2c = 8 for G at class 3"));

    // Off-stratum queries answer 0 with a diagnostic, not an error.
    auto off = run_cli("query" + base + " --kind G --class 3 --a 7");
    CHECK(off.exit_code == 0);
    CHECK(first_line(off.output) == "0");
    CHECK(contains(off.output, "# off-stratum"));

    // Fractional counts print as exact fractions, flagged as stack counts.
    auto kp = run_cli("query" + base + " --kind KP --class 2 --c 1");
    CHECK(kp.exit_code == 0);
    CHECK(first_line(kp.output) == "1/2");
    CHECK(contains(kp.output, "stack counts"));

    // Classes beyond the cached cap are refused ("not computed" != "zero").
    auto far = run_cli("query" + base + " --kind G --class 5 --a 14");
    CHECK(far.exit_code != 0);
    CHECK(contains(far.output, "beyond cached cap 3"));

    // With an explicit --cap a cold cache is filled on the fly.
    TempDir cold;
    auto k = run_cli("query --cache-dir " + cold.path.string() +
                     " --target p2 --cap 3 --kind K --class 3 --a 7");
    CHECK(k.exit_code == 0);
    CHECK(first_line(k.output) == "24");
}

TEST_CASE("cli: table prints one slice in three formats") {
    TempDir dir;
    std::string base = " --cache-dir " + dir.path.string() + " --target p2";
    REQUIRE(run_cli("compute" + base + " --cap 2").exit_code == 0);

    auto csv = run_cli("table" + base + " --kind G --class 2 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(first_line(csv.output) == "a,b,c,value");
    CHECK(contains(csv.output, "0,1,2,1\n"));
    CHECK(contains(csv.output, "5,0,0,1\n"));

    auto json = run_cli("table" + base + " --kind G --class 2 --format json");
    CHECK(json.exit_code == 0);
    CHECK(contains(json.output, "\"target\":\"p2\""));
    CHECK(contains(json.output, "\"class\":[2]"));
    CHECK(contains(json.output, "{\"a\":0,\"b\":1,\"c\":2,\"value\":\"1\"}"));

    auto plain = run_cli("table" + base + " --kind G --class 2");
    CHECK(plain.exit_code == 0);
    CHECK(contains(plain.output, "value"));

    // An empty slice yields just the header.
    auto empty = run_cli("table" + base + " --kind F --class 2 --format csv");
    CHECK(empty.exit_code == 0);
    CHECK(first_line(empty.output) == "a,b,c,value");
}

TEST_CASE("cli: verify passes on a sound cache and fails on a corrupted one") {
    TempDir dir;
    std::string base = " --cache-dir " + dir.path.string() + " --target p2";
    REQUIRE(run_cli("compute" + base + " --cap 2").exit_code == 0);

    auto ok = run_cli("verify" + base + " --cap 2");
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.output, "[PASS] cache-integrity"));
    CHECK(contains(ok.output, "[PASS] trr-residual"));
    CHECK(contains(ok.output, " 0 failed"));

    fs::path file = dir.path / "p2-G-cap2.json";
    spew(file, slurp(file) + " ");
    auto bad = run_cli("verify" + base + " --cap 2");
    CHECK(bad.exit_code != 0);
    CHECK(contains(bad.output, "[FAIL] cache-integrity"));
}

TEST_CASE("cli: malformed requests exit nonzero with a message") {
    TempDir dir;
    std::string base = " --cache-dir " + dir.path.string();
    CHECK(run_cli("query" + base + " --kind X --class 2 --cap 2").exit_code != 0);
    CHECK(contains(run_cli("query" + base + " --target p2 --kind G --class 2,1 --cap 2").output,
                   "error:"));
    CHECK(run_cli("query" + base + " --target p2 --kind H --class 2 --cap 2").exit_code != 0);
    CHECK(run_cli("table" + base + " --target p2 --kind G --class 2 --format yaml --cap 2")
              .exit_code != 0);
    CHECK(run_cli("compute" + base + " --target p2").exit_code != 0);  // --cap required
}
