#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "znt/zeros.hpp"

namespace fs = std::filesystem;

namespace {

struct RunOutput {
    int exit_code = -1;
    std::string out;
};

RunOutput run(const std::string& args, const std::string& prefix = "") {
    std::string cmd = prefix + " " + std::string(ZNT_CLI_PATH) + " " + args +
                      " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunOutput r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const std::string& cache_path() {
    static std::string path = [] {
        fs::path dir = fs::temp_directory_path() / "znt_cli_test";
        fs::create_directories(dir);
        std::string p = (dir / "zeros_2010.txt").string();
        if (!fs::exists(p)) znt::find_zeros(10.0, 2010.0).save(p);
        return p;
    }();
    return path;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("mertens prints the exact partial sum") {
    RunOutput r = run("mertens --x 100.5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n");
}

TEST_CASE("envelope prints the growth bound") {
    RunOutput r = run("envelope --x 20");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2538.52366925\n");
}

TEST_CASE("typicality report matches the committed golden file") {
    RunOutput r = run("typicality --T 1000 --V 4 --t 1000.37 --unsafe-range --zeros " +
                      cache_path());
    CHECK(r.exit_code == 0);
    CHECK(r.out == slurp(std::string(ZNT_GOLDEN_DIR) + "/typicality.json"));
}

TEST_CASE("typicality json round-trips through an independent parser") {
    RunOutput r = run("typicality --T 1000 --V 4 --t 1000.37 --unsafe-range --zeros " +
                      cache_path());
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["T"].get<double>() == 1000.0);
    CHECK(j["V"].get<double>() == 4.0);
    CHECK(j["typical"].get<bool>() == true);
    CHECK(j["criterion_ii_max_count"].is_number_integer());
}

TEST_CASE("empty scan in csv format emits only the header") {
    RunOutput r = run("--format csv typicality --T 1000 --V 4 --scan --unsafe-range"
                      " --zeros " + cache_path());
    CHECK(r.exit_code == 0);
    CHECK(r.out == "t\r\n");
}

TEST_CASE("usage errors exit with code two") {
    CHECK(run("mertens --x 1 --bogus").exit_code == 2);
    CHECK(run("").exit_code == 2);
    CHECK(run("typicality --T 1000 --V 4").exit_code == 2);
    CHECK(run("no-such-command").exit_code == 2);
}

TEST_CASE("runtime failures exit with code one") {
    CHECK(run("typicality --T 1000 --V 50 --t 1000.5 --zeros " + cache_path())
              .exit_code == 1);
}

TEST_CASE("a lock file blocks a second writer") {
    fs::path dir = fs::temp_directory_path() / "znt_cli_test";
    fs::create_directories(dir);
    std::string target = (dir / "lock_demo.txt").string();
    std::ofstream(target + ".lock").put('\n');
    CHECK(run("zeros --from 10 --to 20 --out " + target).exit_code == 1);
    fs::remove(target + ".lock");
    CHECK(run("zeros --from 10 --to 20 --out " + target).exit_code == 0);
    CHECK(fs::exists(target));
    CHECK(!fs::exists(target + ".lock"));
    fs::remove(target);
}

TEST_CASE("configuration comes from a file named by the environment") {
    fs::path dir = fs::temp_directory_path() / "znt_cli_test";
    fs::create_directories(dir);
    std::string cfg = (dir / "cfg.txt").string();
    {
        std::ofstream out(cfg);
        out << "# comment line\n";
        out << "format = csv\n";
    }
    RunOutput r = run("typicality --T 1000 --V 4 --t 1000.37 --unsafe-range --zeros " +
                          cache_path(),
                      "ZNT_CONFIG=" + cfg);
    CHECK(r.exit_code == 0);
    CHECK(r.out.substr(0, 2) == "t,");
    CHECK(r.out.find("\r\n") != std::string::npos);
}

TEST_CASE("rejected configuration values exit with code two") {
    CHECK(run("--tolerance -1 mertens --x 10").exit_code == 2);
}
