// End-to-end checks of the installed command-line binary: schemas, exit
// codes, formats, and byte-level determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"

#ifndef CVDJ_CLI_PATH
#error "CVDJ_CLI_PATH must point at the built binary"
#endif

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "cvdj_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path out = scratch_dir() / ("out" + std::to_string(counter) + ".txt");
    const fs::path err = scratch_dir() / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    const std::string cmd = std::string(CVDJ_CLI_PATH) + " " + args + " >" + out.string() +
                            " 2>" + err.string();
    const int raw = std::system(cmd.c_str());
    const int code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return {code, slurp(out), slurp(err)};
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("register run: documented example and schema") {
    const RunResult r = run_cli("dv-run --z 1111");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"n\":2,\"class\":\"Constant\",\"prob_zero\":1.0}\n");
    const json j = json::parse(r.out);
    CHECK(j["n"].is_number_integer());
    CHECK(j["class"].is_string());
    CHECK(j["prob_zero"].is_number());

    const RunResult balanced = run_cli("dv-run --z 0110");
    const json jb = json::parse(balanced.out);
    CHECK(jb["class"] == "Balanced");
    CHECK(jb["prob_zero"] == 0.0);
}

TEST_CASE("exit codes: validation failures and unknown subcommands") {
    const RunResult bad_z = run_cli("dv-run --z 011");
    CHECK(bad_z.exit_code == 1);
    CHECK(bad_z.err.find("length must be a power of two") != std::string::npos);

    const RunResult unknown = run_cli("frobnicate --x 1");
    CHECK(unknown.exit_code == 2);
    CHECK(unknown.err.find("usage") != std::string::npos);

    const RunResult none = run_cli("");
    CHECK(none.exit_code == 2);

    const RunResult missing = run_cli("dv-run");
    CHECK(missing.exit_code == 1);  // missing required option

    const RunResult bad_n = run_cli("asb-check --N 3");
    CHECK(bad_n.exit_code == 1);

    const RunResult bad_samples = run_cli("cv-encode --z 0011 --P 1 --samples 100");
    CHECK(bad_samples.exit_code == 1);
    CHECK(bad_samples.err.find("power of two") != std::string::npos);
}

TEST_CASE("momentum encoding CSV") {
    const RunResult r = run_cli("cv-encode --z 0011 --P 1 --samples 256");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("p,value\n", 0) == 0);
    CHECK(count_lines(r.out) == 257);
    // JSON override carries the same data as arrays.
    const RunResult rj = run_cli("cv-encode --z 0011 --P 1 --samples 256 --format json");
    const json j = json::parse(rj.out);
    CHECK(j["p"].size() == 256);
    CHECK(j["value"].size() == 256);
    const double amp = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(std::abs(j["value"][0].get<double>()) - amp) < 1e-15);
}

TEST_CASE("density grid CSV and origin values") {
    const RunResult r = run_cli("cv-pdf --z 0000 --P 1 --xmin -1 --xmax 1 --points 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("x,pdf\n", 0) == 0);
    CHECK(count_lines(r.out) == 4);
    // Middle row is x = 0: density 1/pi for a constant setting at P = 1.
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    std::getline(lines, line);
    std::getline(lines, line);
    const double at_zero = std::stod(line.substr(line.find(',') + 1));
    CHECK(at_zero == doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-14));
}

TEST_CASE("window probability and optimum schemas") {
    const RunResult r = run_cli("cv-prob --z 00 --P 1 --delta 1.5707963267948966");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["prob"].get<double>() == doctest::Approx(0.7736950099).epsilon(1e-6));

    const RunResult o = run_cli("optimal-delta --P 2");
    const json jo = json::parse(o.out);
    CHECK(jo["delta"].get<double>() == doctest::Approx(std::numbers::pi / 4).epsilon(1e-9));
    CHECK(jo["P_delta_product"].get<double>() ==
          doctest::Approx(std::numbers::pi / 2).epsilon(1e-9));
}

TEST_CASE("dominance check schema") {
    const RunResult r = run_cli("asb-check --N 4 --grid 201");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["holds"] == true);
    CHECK(j["worst_margin"].get<double>() > 0.0);
    CHECK(j["witness"].is_null());
    CHECK(j["strings_checked"] == 6);
}

TEST_CASE("amplification report schema and determinism") {
    const std::string args = "amplify --m 96 --runs 2000 --illustrative --seed 5";
    const RunResult r1 = run_cli(args);
    const RunResult r2 = run_cli(args);
    CHECK(r1.exit_code == 0);
    CHECK(r1.out == r2.out);  // byte-identical
    const json j = json::parse(r1.out);
    CHECK(j["m"] == 96);
    CHECK(j["runs"] == 2000);
    CHECK(j["seed"] == 5);
    CHECK(j["illustrative"] == true);
    CHECK(j["p_detect_constant"] == 0.75);
    for (const char* side : {"constant", "balanced"}) {
        CHECK(j[side]["empirical_error"].is_number());
        CHECK(j[side]["chernoff_bound"].is_number());
        CHECK(j[side]["first_run_decision"].is_string());
    }
    // The default model reports the closed-form window probabilities.
    const json jd = json::parse(run_cli("amplify --m 24 --runs 100").out);
    CHECK(jd["p_detect_constant"].get<double>() ==
          doctest::Approx(0.7736950099).epsilon(1e-8));
    CHECK(jd["illustrative"] == false);
}

TEST_CASE("classical baseline schema") {
    const RunResult r = run_cli("classical-baseline --N 128 --m 20");
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    const double exact = j["exact"].get<double>();
    const double lower = j["lower_bound"].get<double>();
    CHECK(exact >= lower);
    CHECK(lower == doctest::Approx(1.0 - std::pow(2.0, -20.0)).epsilon(1e-12));
    CHECK(run_cli("classical-baseline --N 128 --m 65").exit_code == 1);
}

TEST_CASE("figure data files are complete and reproducible") {
    const fs::path dir1 = scratch_dir() / "figs1";
    const fs::path dir2 = scratch_dir() / "figs2";
    CHECK(run_cli("reproduce-figures --output " + dir1.string()).exit_code == 0);
    CHECK(run_cli("reproduce-figures --output " + dir2.string()).exit_code == 0);
    const char* names[] = {"fig4_a.csv", "fig4_b.csv", "fig4_c.csv", "fig4_d.csv",
                           "fig6_a.csv", "fig6_b.csv", "fig6_c.csv", "fig6_d.csv",
                           "fig7_phasors.csv", "fig8_window.csv"};
    for (const char* name : names) {
        CAPTURE(name);
        REQUIRE(fs::exists(dir1 / name));
        const std::string c1 = slurp(dir1 / name);
        CHECK(c1 == slurp(dir2 / name));
        CHECK(!c1.empty());
        CHECK(c1.find('\r') == std::string::npos);  // LF only
    }
    CHECK(slurp(dir1 / "fig4_a.csv").rfind("p,value\n", 0) == 0);
    CHECK(slurp(dir1 / "fig6_a.csv").rfind("x,pdf\n", 0) == 0);
    CHECK(slurp(dir1 / "fig7_phasors.csv").rfind("x,slot,angle\n", 0) == 0);
    CHECK(slurp(dir1 / "fig8_window.csv")
              .rfind("delta,prob_constant,prob_asb,separation\n", 0) == 0);

    // The density files carry the documented origin values.
    std::istringstream lines(slurp(dir1 / "fig6_a.csv"));
    std::string line;
    double at_zero_const = -1.0, at_zero_asb = -1.0;
    while (std::getline(lines, line)) {
        if (line.rfind("0,", 0) == 0) at_zero_const = std::stod(line.substr(2));
    }
    std::istringstream lines_b(slurp(dir1 / "fig6_b.csv"));
    while (std::getline(lines_b, line)) {
        if (line.rfind("0,", 0) == 0) at_zero_asb = std::stod(line.substr(2));
    }
    CHECK(at_zero_const == doctest::Approx(1.0 / std::numbers::pi).epsilon(1e-13));
    CHECK(at_zero_asb == 0.0);
}

TEST_CASE("output flag writes the payload to a file") {
    const fs::path target = scratch_dir() / "dv.json";
    const RunResult r = run_cli("dv-run --z 1010 --output " + target.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    const json j = json::parse(slurp(target));
    CHECK(j["class"] == "Balanced");
}

TEST_CASE("csv format override for scalar reports") {
    const RunResult r = run_cli("dv-run --z 1111 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n,class,prob_zero\n2,Constant,1\n");
}
