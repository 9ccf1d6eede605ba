#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "clc/cli.hpp"
#include "clc/serialize.hpp"

using namespace clc;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path dir;
    TempDir() {
        dir = fs::temp_directory_path() / ("clc_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~TempDir() { fs::remove_all(dir); }
    std::string operator/(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("usage errors exit with 2") {
        CHECK(run_cli({}) == 2);
        CHECK(run_cli({"intersect", "--nonsense"}) == 2);
        CHECK(run_cli({"bounds", "--rmax", "4"}) == 2);  // missing --char
    }

    TEST_CASE("intersect writes the class table deterministically") {
        TempDir tmp;
        std::string out = tmp / "table.csv";
        CHECK(run_cli({"intersect", "--q", "3", "--r", "3", "--out", out}) == 0);
        std::string first = read_file(out);
        CHECK(first.find("norm_class,trace_class,count,lines_in_class") == 0);
        CHECK(first.find(",13,") != std::string::npos);
        CHECK(first.find(",7,") != std::string::npos);
        CHECK(first.find(",10,") != std::string::npos);

        CHECK(run_cli({"intersect", "--q", "3", "--r", "3", "--out", out}) == 0);
        CHECK(read_file(out) == first);

        // --oracle adds validation without changing the table
        std::string out2 = tmp / "table2.csv";
        CHECK(run_cli({"intersect", "--q", "3", "--r", "3", "--oracle", "--out", out2}) == 0);
        CHECK(read_file(out2) == first);
    }

    TEST_CASE("bounds emits the B columns") {
        TempDir tmp;
        std::string out = tmp / "bounds.csv";
        CHECK(run_cli({"bounds", "--char", "3", "--rmax", "4", "--out", out}) == 0);
        std::string csv = read_file(out);
        CHECK(csv.find("3,1,4,1") != std::string::npos);
        CHECK(csv.find("4,8,14,0") != std::string::npos);
    }

    TEST_CASE("build, encode, erase, repair, audit, drill round trip") {
        TempDir tmp;
        std::string code_path = tmp / "code.json";
        CHECK(run_cli({"build", "--q", "2", "--r", "3", "--lines", "all", "--B", "auto", "--out",
                       code_path}) == 0);

        // artifact loads and matches itself when re-serialized
        Json artifact = Json::parse(read_file(code_path));
        CHECK(artifact.at("params").at("n") == 32);
        CHECK(artifact.at("params").at("locality") == 2);
        CHECK(artifact.at("params").at("availability") == 7);
        LiftedCode code = code_from_json(artifact);
        CHECK(code_to_json(code) == artifact);

        std::string cw_path = tmp / "cw.csv";
        CHECK(run_cli({"encode", "--code", code_path, "--message", "1,5,3", "--out", cw_path}) ==
              0);
        std::string damaged_path = tmp / "damaged.csv";
        CHECK(run_cli({"erase", "--code", code_path, "--cw", cw_path, "--positions", "4,9",
                       "--out", damaged_path}) == 0);
        CHECK(read_file(damaged_path).find('?') != std::string::npos);

        std::string repaired_path = tmp / "repaired.csv";
        CHECK(run_cli({"repair", "--code", code_path, "--cw", damaged_path, "--out",
                       repaired_path}) == 0);
        CHECK(read_file(repaired_path) == read_file(cw_path));

        CHECK(run_cli({"audit", "--code", code_path, "--format", "json", "--out",
                       tmp / "audit.json"}) == 0);
        Json audit = Json::parse(read_file(tmp / "audit.json"));
        CHECK(audit.at("availability") == 7);

        std::string drill_path = tmp / "drill.json";
        CHECK(run_cli({"drill", "--code", code_path, "--trials", "25", "--erasures", "2",
                       "--seed", "7", "--out", drill_path}) == 0);
        Json drill = Json::parse(read_file(drill_path));
        CHECK(drill.at("trials") == 25);
        CHECK(drill.at("successes") == 25);
        CHECK(drill.at("seed") == 7);

        // deterministic artifacts: rebuilding produces identical bytes
        std::string code2 = tmp / "code2.json";
        CHECK(run_cli({"build", "--q", "2", "--r", "3", "--lines", "all", "--B", "auto", "--out",
                       code2}) == 0);
        CHECK(read_file(code2) == read_file(code_path));
    }

    TEST_CASE("build rejects a degenerate automatic bound") {
        // B_{3,3} = 1 is degenerate, an explicit B is required
        CHECK(run_cli({"build", "--q", "3", "--r", "3", "--B", "auto"}) == 1);
        TempDir tmp;
        CHECK(run_cli({"build", "--q", "3", "--r", "3", "--B", "7", "--out", tmp / "c.json"}) ==
              0);
    }

    TEST_CASE("custom curves go through spectrum output") {
        TempDir tmp;
        // Schmidt curve spec
        Json spec;
        spec["kind"] = "custom";
        spec["field"] = Json{{"p", 2}, {"m", 6}, {"tower", Json::array({1, 6})},
                             {"modulus", nullptr}};
        spec["terms"] = Json::array({Json{{"a", 0}, {"b", 8}, {"coeff", 1}},
                                     Json{{"a", 0}, {"b", 1}, {"coeff", 1}},
                                     Json{{"a", 3}, {"b", 0}, {"coeff", 1}}});
        std::string spec_path = tmp / "schmidt.json";
        write_file(spec_path, spec.dump(2));

        std::string out = tmp / "spectrum.csv";
        CHECK(run_cli({"intersect", "--curve", spec_path, "--out", out}) == 0);
        std::string csv = read_file(out);
        CHECK(csv.find("size,num_lines") == 0);
        CHECK(csv.find("7,168") != std::string::npos);

        // build on the 4-point lines
        std::string code_path = tmp / "schmidt_code.json";
        CHECK(run_cli({"build", "--curve", spec_path, "--lines", "size:4", "--B", "4", "--out",
                       code_path}) == 0);
        Json artifact = Json::parse(read_file(code_path));
        CHECK(artifact.at("params").at("availability") == 30);
    }

    TEST_CASE("reproduce runs the binary suite") {
        TempDir tmp;
        std::string out = tmp / "binary.json";
        CHECK(run_cli({"reproduce", "--suite", "binary", "--out", out}) == 0);
        Json rep = Json::parse(read_file(out));
        CHECK(rep.at("suite") == "binary");
        CHECK(rep.at("pass") == true);
        CHECK(rep.at("assertions").size() == 7);

        // unknown suite is a computational error, not a usage error
        CHECK(run_cli({"reproduce", "--suite", "nope"}) == 1);

        // idempotent: identical artifact bytes on a second run
        std::string out2 = tmp / "binary2.json";
        CHECK(run_cli({"reproduce", "--suite", "binary", "--out", out2}) == 0);
        CHECK(read_file(out2) == read_file(out));
    }
}
