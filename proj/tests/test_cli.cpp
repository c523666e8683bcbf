#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / "qmds_cli_tests";
    fs::create_directories(dir);
    return dir;
}

CliResult run_cli(const std::string& args) {
    fs::path capture = scratch_dir() / "capture.txt";
    std::string cmd =
        std::string(QMDS_CLI_PATH) + " " + args + " > " + capture.string() + " 2>&1";
    int rc = std::system(cmd.c_str());
    int code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(capture);
    std::stringstream buf;
    buf << in.rdbuf();
    return {code, buf.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("cli enumerate") {
    CliResult r = run_cli("enumerate 7 --max-n 24 --format json");
    REQUIRE(r.exit_code == 0);
    auto rows = nlohmann::json::parse(r.out);
    CHECK(rows.size() == 5);
    bool found = false;
    for (const auto& row : rows)
        if (row["lambda"] == 3 && row["tau"] == 2 && row["rho"] == 8 && row["sigma"] == 4)
            found = row["case"] == 2 && row["T"] == 5 && row["n"] == 24;
    CHECK(found);

    CHECK(run_cli("enumerate 3").exit_code == 0);
    CHECK(run_cli("enumerate 6").exit_code == 2);

    CliResult again = run_cli("enumerate 7 --max-n 24 --format json");
    CHECK(again.out == r.out);  // listings are deterministic
}

TEST_CASE("cli construct and verify round trip") {
    fs::path out = scratch_dir() / "q7.qmds";
    CliResult c = run_cli("construct 7 3 2 8 2 5 " + out.string());
    REQUIRE(c.exit_code == 0);
    CHECK(c.out.find("[[12,4,5]]_7") != std::string::npos);
    CHECK(c.out.find("T=5") != std::string::npos);

    // byte-identical on repeated runs
    fs::path out2 = scratch_dir() / "q7_again.qmds";
    run_cli("construct 7 3 2 8 2 5 " + out2.string());
    CHECK(slurp(out) == slurp(out2));

    CliResult v = run_cli("verify " + out.string());
    CHECK(v.exit_code == 0);
    auto cert = nlohmann::json::parse(v.out);
    CHECK(cert["ok"] == true);
    CHECK(cert["self_orthogonal"] == true);
    CHECK(cert["mds"]["mode"] == "full");
    CHECK(cert["mds"]["minors_checked"] == 495);
    CHECK(cert["exhaustive_distance"] == 9);
    CHECK(cert["quantum"]["k_Q"] == 4);
}

TEST_CASE("cli construct refuses d beyond T") {
    fs::path out = scratch_dir() / "never.qmds";
    CliResult r = run_cli("construct 11 5 3 4 3 8 " + out.string());
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("T = 7") != std::string::npos);
}

TEST_CASE("cli verify flags a perturbed file") {
    fs::path out = scratch_dir() / "q7_perturbed.qmds";
    run_cli("construct 7 3 2 8 2 5 " + out.string());
    std::string text = slurp(out);
    // bump the first element of row 0 (line 4) to a different field value
    size_t pos = 0;
    for (int i = 0; i < 3; ++i) pos = text.find('\n', pos) + 1;
    text[pos] = text[pos] == '0' ? '1' : '0';
    std::ofstream(out, std::ios::binary) << text;

    CliResult v = run_cli("verify " + out.string());
    CHECK(v.exit_code == 1);
    auto cert = nlohmann::json::parse(v.out);
    CHECK(cert["self_orthogonal"] == false);
    CHECK(cert["ok"] == false);
}

TEST_CASE("cli verify rejects malformed files") {
    fs::path out = scratch_dir() / "trunc.qmds";
    run_cli("construct 7 3 2 8 2 5 " + out.string());
    std::string text = slurp(out);
    std::ofstream(out, std::ios::binary) << text.substr(0, text.size() / 2);
    CliResult v = run_cli("verify " + out.string());
    CHECK(v.exit_code == 2);
    CHECK(v.out.find("parse error") != std::string::npos);
}

TEST_CASE("cli oracle") {
    CliResult r = run_cli("oracle 5 3 4 --L 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("(3,6)") != std::string::npos);
    CHECK(r.out.find("match=yes") != std::string::npos);

    r = run_cli("oracle 3 2 8 --all-L");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("argmax T2=4 at L in {0}") != std::string::npos);

    r = run_cli("oracle 28 5 30 --L 8 --json");
    CHECK(r.exit_code == 0);
    auto rows = nlohmann::json::parse(r.out);
    CHECK(rows[0]["T1"] == 13);
    CHECK(rows[0]["T2"] == 23);
    CHECK(rows[0]["matches_closed_form"] == true);
}

TEST_CASE("cli reproduce small-d with light caps") {
    CliResult r = run_cli("reproduce small-d --q 7 --minor-cap 1000 --samples 100 "
                          "--exhaustive-cap 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[[12,4,5]]_7 certified") != std::string::npos);
    CHECK(r.out.find("[[18,10,5]]_7 certified") != std::string::npos);
    CHECK(r.out.find("[[24,16,5]]_7 certified") != std::string::npos);

    CHECK(run_cli("reproduce small-d --q 11").exit_code == 2);  // wrong congruence class
    CHECK(run_cli("reproduce c2 --q 59").exit_code == 2);       // needs explicit --m
    CHECK(run_cli("reproduce nope").exit_code == 2);
}
