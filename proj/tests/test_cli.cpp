// Drives the installed CLI binary end to end. The binary path comes from the
// PSDRANK_CLI environment variable, which the CTest registration sets.

#include "psdrank/fixtures.hpp"
#include "psdrank/json_io.hpp"
#include "psdrank/rationality.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

using namespace psdrank;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

const char* cli_path() {
    const char* path = std::getenv("PSDRANK_CLI");
    REQUIRE_MESSAGE(path != nullptr, "PSDRANK_CLI must point at the psdrank binary");
    return path;
}

fs::path scratch_dir() {
    const fs::path dir = fs::temp_directory_path() / "psdrank-cli-tests";
    fs::create_directories(dir);
    return dir;
}

CliResult run_cli(const std::string& args) {
    const fs::path out = scratch_dir() / "stdout.txt";
    const std::string command =
        std::string("'") + cli_path() + "' " + args + " > '" + out.string() + "' 2>&1";
    const int status = std::system(command.c_str());
    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out);
    std::stringstream buffer;
    buffer << in.rdbuf();
    result.output = buffer.str();
    return result;
}

std::string write_file(const std::string& name, const std::string& contents) {
    const fs::path path = scratch_dir() / name;
    std::ofstream out(path);
    out << contents;
    return path.string();
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("bounds on the builtin matrix") {
        const fs::path out = scratch_dir() / "bounds.json";
        const CliResult r = run_cli("bounds builtin:cuboid --out '" + out.string() + "'");
        CHECK(r.exit_code == 0);
        const io::json report = io::load_json_file(out.string());
        CHECK(report["lowerBound"] == 4);
        CHECK(report["upperBound"] == 4);
        CHECK(report["tight"] == true);
        CHECK(report["search"]["exhaustive"] == true);
        CHECK(report["search"]["patternsExamined"] == 2048);
    }

    TEST_CASE("byte-identical reruns") {
        const fs::path a = scratch_dir() / "bounds-a.json";
        const fs::path b = scratch_dir() / "bounds-b.json";
        CHECK(run_cli("bounds builtin:cuboid --seed 5 --out '" + a.string() + "'").exit_code == 0);
        CHECK(run_cli("bounds builtin:cuboid --seed 5 --out '" + b.string() + "'").exit_code == 0);
        std::ifstream fa(a), fb(b);
        std::stringstream sa, sb;
        sa << fa.rdbuf();
        sb << fb.rdbuf();
        CHECK(sa.str() == sb.str());
        CHECK_FALSE(sa.str().empty());
    }

    TEST_CASE("malformed input exits 2") {
        const std::string bad = write_file("bad.json", "{ this is not json");
        CHECK(run_cli("bounds '" + bad + "'").exit_code == 2);
        CHECK(run_cli("bounds /nonexistent.json").exit_code == 2);
        CHECK(run_cli("nonsense-command").exit_code == 2);
        CHECK(run_cli("bounds").exit_code == 2);
        CHECK(run_cli("bounds builtin:cuboid --exhaustive-bits 0").exit_code == 2);
    }

    TEST_CASE("irrationality emits a certificate that validate accepts") {
        const fs::path cert = scratch_dir() / "cert.json";
        const CliResult r = run_cli("irrationality builtin:cuboid --out '" + cert.string() + "'");
        CHECK(r.exit_code == 0);
        const io::json j = io::load_json_file(cert.string());
        CHECK(j["size"] == 4);
        CHECK(j["obstruction"]["alternatingClass"] == "2");

        const CliResult v = run_cli("validate builtin:cuboid '" + cert.string() + "'");
        CHECK(v.exit_code == 0);
        CHECK(v.output.find("valid") != std::string::npos);

        // Tampering flips the validator.
        io::json tampered = j;
        tampered["obstruction"]["alternatingClass"] = "1";
        const std::string bad = write_file("tampered.json", io::dump(tampered));
        CHECK(run_cli("validate builtin:cuboid '" + bad + "'").exit_code == 1);
    }

    TEST_CASE("irrationality is inconclusive on the all-ones matrix") {
        RatMatrix ones(2, 2);
        ones(0, 0) = ones(0, 1) = ones(1, 0) = ones(1, 1) = 1;
        const std::string path = write_file("ones.json", io::dump(io::matrix_to_json(ones)));
        const CliResult r = run_cli("irrationality '" + path + "'");
        CHECK(r.exit_code == 1);
        CHECK(r.output.find("inconclusive") != std::string::npos);
    }

    TEST_CASE("irrationality rejects zero lines with exit 2") {
        RatMatrix with_zero_row(3, 2);
        with_zero_row(0, 0) = 1;
        with_zero_row(0, 1) = 1;
        with_zero_row(1, 0) = 1;
        with_zero_row(1, 1) = 2;
        const std::string path = write_file("zero-row.json", io::dump(io::matrix_to_json(with_zero_row)));
        CHECK(run_cli("irrationality '" + path + "'").exit_code == 2);
    }

    TEST_CASE("factorize then verify") {
        const fs::path fact = scratch_dir() / "factorization.json";
        CHECK(run_cli("factorize builtin:cuboid --out '" + fact.string() + "'").exit_code == 0);
        const io::json j = io::load_json_file(fact.string());
        CHECK(j["size"] == 4);
        CHECK(j["arithmetic"] == "radical");
        CHECK(j["rowFactors"].size() == 8);
        CHECK(j["colFactors"].size() == 6);

        CHECK(run_cli("verify builtin:cuboid '" + fact.string() + "'").exit_code == 0);

        // Perturb one factor entry: verification fails with exit 1.
        io::json perturbed = j;
        perturbed["rowFactors"][0]["entries"][0][0] = io::json::array(
            {io::json{{"coefficient", "9"}, {"radicand", "1"}}});
        const std::string bad = write_file("perturbed.json", io::dump(perturbed));
        const CliResult v = run_cli("verify builtin:cuboid '" + bad + "'");
        CHECK(v.exit_code == 1);

        // A factor block of the wrong size is a dimension error: exit 2.
        io::json mismatched = j;
        mismatched["rowFactors"][0] = io::json{
            {"rows", 2},
            {"cols", 2},
            {"entries", io::json::array({io::json::array({io::json::array(), io::json::array()}),
                                         io::json::array({io::json::array(), io::json::array()})})}};
        const std::string wrong = write_file("mismatched.json", io::dump(mismatched));
        CHECK(run_cli("verify builtin:cuboid '" + wrong + "'").exit_code == 2);
    }

    TEST_CASE("negative entries cannot be factorized") {
        const std::string path =
            write_file("negative.json", io::dump(io::matrix_to_json(RatMatrix{{-1}})));
        CHECK(run_cli("factorize '" + path + "'").exit_code == 2);
    }

    TEST_CASE("slack on a triangle file") {
        const std::string path = write_file(
            "triangle.json", io::dump(io::polytope_to_json(Polytope(2, {{0, 0}, {1, 0}, {0, 1}}))));
        const fs::path out = scratch_dir() / "triangle-slack.json";
        CHECK(run_cli("slack '" + path + "' --out '" + out.string() + "'").exit_code == 0);
        const io::json j = io::load_json_file(out.string());
        CHECK(j["rows"] == 3);
        CHECK(j["cols"] == 3);
        CHECK(j["facets"].size() == 3);
        // The output doubles as a matrix file.
        CHECK(io::rat_matrix_from_json(j).rows() == 3);

        const std::string flat = write_file(
            "flat.json", "{\"dimension\": 2, \"vertices\": [[\"0\",\"0\"],[\"1\",\"0\"],[\"2\",\"0\"]]}");
        CHECK(run_cli("slack '" + flat + "'").exit_code == 2);
    }

    TEST_CASE("slack output feeds bounds") {
        const fs::path slack_out = scratch_dir() / "cuboid-slack.json";
        CHECK(run_cli("slack builtin:cuboid --out '" + slack_out.string() + "'").exit_code == 0);
        const fs::path bounds_out = scratch_dir() / "cuboid-slack-bounds.json";
        CHECK(run_cli("bounds '" + slack_out.string() + "' --out '" + bounds_out.string() + "'")
                  .exit_code == 0);
        const io::json report = io::load_json_file(bounds_out.string());
        CHECK(report["lowerBound"] == 4);
        CHECK(report["upperBound"] == 4);
    }

    TEST_CASE("paper-example passes every claim") {
        const fs::path out = scratch_dir() / "reproduction.json";
        const CliResult r = run_cli("paper-example --out '" + out.string() + "'");
        CHECK(r.exit_code == 0);
        CHECK(r.output.find("PASS") != std::string::npos);
        CHECK(r.output.find("FAIL") == std::string::npos);

        const io::json j = io::load_json_file(out.string());
        CHECK(j["allPass"] == true);
        CHECK(j["bounds"]["tight"] == true);
        CHECK(j["certificate"]["size"] == 4);
        CHECK(j["slackMatch"]["colScales"].size() == 6);
        const auto cert = io::certificate_from_json(j["certificate"]);
        CHECK(validate_certificate(fixtures::cuboid_slack(), cert));
    }
}
