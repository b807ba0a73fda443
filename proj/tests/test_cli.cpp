#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sigmainv/cli.hpp"
#include "sigmainv/sigma_poly.hpp"

namespace fs = std::filesystem;
using sigmainv::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const fs::path kGolden = SIGMAINV_GOLDEN_DIR;

// Set SIGMAINV_UPDATE_GOLDEN=1 to rewrite the files after an intended change.
void check_golden(const std::string& name, const std::vector<std::string>& args, int code = 0) {
    const auto r = call(args);
    CAPTURE(name);
    CAPTURE(r.err);
    CHECK(r.code == code);
    const auto path = kGolden / (name + ".json");
    if (std::getenv("SIGMAINV_UPDATE_GOLDEN")) {
        std::ofstream(path) << r.out;
        return;
    }
    REQUIRE(fs::exists(path));
    CHECK(r.out == slurp(path));
}

}  // namespace

TEST_CASE("plain text outputs") {
    auto r = call({"sigma-tr", "-t", "0", "-r", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "-tr[y z] + tr[y z']\n");
    r = call({"power", "-t", "1", "-l", "2"});
    CHECK(r.out == "tr[a]^2 - 2*s2[a]\n");
    r = call({"canon", "[x1 y1 x1 y1]"});
    CHECK(r.out == "[x1 y1]^2\n");
    r = call({"lin", "-d", "1", "tr[x1]^3"});
    CHECK(r.out == "6*tr[x1]*tr[x2]*tr[x3]\n");
    r = call({"sigma-tr", "-t", "0", "-r", "1", "--subst", "y=[y1]", "z=[y1]"});
    CHECK(r.out == "-tr[y1]^2 + tr[y1 y1'] + 2*s2[y1]\n");
}

TEST_CASE("golden JSON outputs") {
    check_golden("sigma_tr_1_1", {"--json", "sigma-tr", "-t", "1", "-r", "1"});
    check_golden("sigma_tr_key", {"--json", "sigma-tr", "--key", "1,1;1;1"});
    check_golden("power_2_2", {"--json", "power", "-t", "2", "-l", "2"});
    check_golden("canon", {"--json", "canon", "[y' z' y z]"});
    check_golden("cycles_111", {"--json", "cycles", "-u", "1", "-v", "1", "-w", "1", "--bound", "1,1,1"});
    check_golden("amitsur_2", {"--json", "amitsur", "-t", "2", "--arg", "[x1] + [x2]"});
    check_golden("lin_s2", {"--json", "lin", "-d", "2", "s2[x1]"});
    check_golden("dp_1_3", {"--json", "dp", "-r", "1", "-n", "3", "--seed", "4"});
    check_golden("bpf_2_1", {"--json", "bpf", "-t", "2", "-r", "1", "--decompose", "--seed", "2"});
    check_golden("bpf_f7", {"--json", "--field", "fp:7", "bpf", "-t", "1", "-r", "1", "--seed", "2"});
    check_golden("relations_n1", {"--json", "relations", "-n", "1", "-d", "1", "--max-deg", "2", "--verify",
                                  "randomized", "--trials", "3"});
    check_golden("verify_falsified",
                 {"--json", "verify", "--gen", "tr[x1]*tr[x2] - tr[x1 x2]", "-n", "2", "--trials", "20", "--seed", "7"},
                 1);
    check_golden("verify_exact", {"--json", "verify", "--gen", "s3[x1]", "-n", "2", "--mode", "exact"});
    check_golden("eval", {"--json", "eval", "--poly", "tr[x y] + s2[x]", "--assign", (kGolden / "assign.json").string()});
}

TEST_CASE("verify reads a generator file and prints a replay line") {
    const auto path = fs::temp_directory_path() / "sigmainv_gen.txt";
    std::ofstream(path) << "-tr[x1]*tr[x2 x3] + tr[x1]*tr[x2 x3'] + tr[x1 x2 x3] - tr[x1 x2 x3'] - tr[x1 x2' x3] + "
                           "tr[x1 x2' x3']\n";
    const auto r = call({"verify", "--gen", path.string(), "-n", "2", "--trials", "20", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verdict: verified-zero") != std::string::npos);
    CHECK(r.out.find("# replay: sigmainv verify --gen " + path.string() + " -n 2 --trials 20 --seed 7") !=
          std::string::npos);
    const auto boundary = call({"verify", "--gen", path.string(), "-n", "3", "--seed", "7"});
    CHECK(boundary.code == 1);
    CHECK(boundary.out.find("witness value") != std::string::npos);
    fs::remove(path);
}

TEST_CASE("exit codes and diagnostics") {
    auto r = call({"--field", "fp:2", "power", "-t", "1", "-l", "2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("characteristic 2") != std::string::npos);
    CHECK(call({}).code == 2);
    CHECK(call({"frobnicate"}).code == 2);
    CHECK(call({"power", "-t", "1"}).code == 2);
    r = call({"canon", "[x1 q"});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    r = call({"sigma-tr", "-t", "5", "-r", "3"});
    CHECK(r.code == 2);
    CHECK(r.err.find("size limit") != std::string::npos);
    r = call({"verify", "--gen", "tr[x1]", "-n", "3", "--mode", "exact"});
    CHECK(r.code == 2);
    CHECK(r.err.find("exact mode") != std::string::npos);
    r = call({"cycles", "--bound", "1,1"});
    CHECK(r.code == 2);
    r = call({"eval", "--poly", "tr[x y]", "--assign", (kGolden / "assign_mismatch.json").string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("different sizes") != std::string::npos);
    CHECK(call({"--help"}).code == 0);
    CHECK(call({"relations", "-n", "1", "-d", "1", "--max-deg", "2", "--verify", "randomized"}).code == 0);
}

TEST_CASE("printed polynomials reparse") {
    for (const auto& args : std::vector<std::vector<std::string>>{{"sigma-tr", "-t", "2", "-r", "1"},
                                                                  {"power", "-t", "2", "-l", "3"},
                                                                  {"amitsur", "-t", "3", "--arg", "[x1] - 2*[x2 x1']"}}) {
        const auto text = call(args).out;
        sigmainv::Alphabet a;
        const auto p = sigmainv::parse_sigma_poly(text.substr(0, text.size() - 1), a);
        CHECK(sigmainv::to_string(p, a) + "\n" == text);
    }
}
