// Command-line front end: exact psd-rank bounds, factorization construction
// and verification, and machine-checkable irrationality certificates for
// nonnegative rational matrices.
//
// Exit codes: 0 proven / valid, 1 inconclusive or failed check, 2 usage,
// parse, or data errors.

#include "psdrank/fixtures.hpp"
#include "psdrank/json_io.hpp"
#include "psdrank/linalg.hpp"
#include "psdrank/reproduce.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

namespace {

using namespace psdrank;

constexpr int kExitProven = 0;
constexpr int kExitInconclusive = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    std::string input;
    std::string second_input;
    std::string out;
    unsigned exhaustive_bits = 20;
    unsigned restarts = 64;
    std::uint64_t factor_limit = 1'000'000;
    double tolerance = 1e-9;
    std::uint64_t seed = 0;

    SqrtRankBudget budget() const {
        SqrtRankBudget b;
        b.exhaustive_bits = exhaustive_bits;
        b.restarts = restarts;
        b.seed = seed;
        b.factor_limit = Integer(factor_limit);
        return b;
    }
};

void add_budget_flags(CLI::App* cmd, RunConfig& config) {
    cmd->add_option("--exhaustive-bits", config.exhaustive_bits,
                    "Exhaustive sign search up to this many free bits")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--restarts", config.restarts, "Hill-climbing restarts beyond the exhaustive budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--seed", config.seed, "Seed for the heuristic search")->capture_default_str();
}

void add_factor_limit_flag(CLI::App* cmd, RunConfig& config) {
    cmd->add_option("--factor-limit", config.factor_limit, "Trial-division bound for square classes")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

void add_out_flag(CLI::App* cmd, RunConfig& config) {
    cmd->add_option("--out", config.out, "Output file (stdout when omitted)");
}

void emit(const RunConfig& config, const io::json& j) {
    if (config.out.empty()) {
        std::cout << io::dump(j);
    } else {
        io::save_json_file(config.out, j);
    }
}

int cmd_bounds(const RunConfig& config) {
    const RatMatrix m = io::load_matrix(config.input);
    const BoundsReport report = psd_rank_bounds(m, config.budget());
    emit(config, io::bounds_report_to_json(report));
    return kExitProven;
}

int cmd_irrationality(const RunConfig& config) {
    const RatMatrix m = io::load_matrix(config.input);
    const auto certificate = no_rational_factorization_certificate(m, config.budget());
    if (!certificate) {
        std::cout << "inconclusive: no irrationality certificate for this matrix\n";
        return kExitInconclusive;
    }
    if (!validate_certificate(m, *certificate)) {
        throw Error("internal error: emitted certificate failed self-validation");
    }
    emit(config, io::certificate_to_json(*certificate));
    return kExitProven;
}

int cmd_verify(const RunConfig& config) {
    const RatMatrix m = io::load_matrix(config.input);
    const PsdFactorization f = io::factorization_from_json(io::load_json_file(config.second_input));
    const VerifyReport report = verify_factorization(m, f, config.tolerance);
    emit(config, io::verify_report_to_json(report));
    return report.valid ? kExitProven : kExitInconclusive;
}

int cmd_factorize(const RunConfig& config) {
    const RatMatrix m = io::load_matrix(config.input);
    const SqrtRankResult search = sqrt_rank_min(m, config.budget());
    const SqrtCandidate sqrt =
        SqrtCandidate::with_signs(m, search.pattern.signs, Integer(config.factor_limit));
    const PsdFactorization f = factorization_from_sqrt(sqrt);
    if (!verify_factorization(m, f, 0.0).valid) {
        throw Error("internal error: constructed factorization failed verification");
    }
    emit(config, io::factorization_to_json(f));
    return kExitProven;
}

int cmd_slack(const RunConfig& config) {
    const Polytope p = io::load_polytope(config.input);
    const std::vector<FacetInequality> facets = facets_bruteforce(p);
    const RatMatrix slack = slack_matrix(p, facets);
    io::json out = io::matrix_to_json(slack);
    out["facets"] = io::facets_to_json(facets);
    emit(config, out);
    return kExitProven;
}

int cmd_validate(const RunConfig& config) {
    const RatMatrix m = io::load_matrix(config.input);
    const IrrationalityCertificate cert =
        io::certificate_from_json(io::load_json_file(config.second_input));
    const bool valid = validate_certificate(m, cert);
    std::cout << (valid ? "valid\n" : "invalid\n");
    return valid ? kExitProven : kExitInconclusive;
}

int cmd_paper_example(const RunConfig& config) {
    const ReproductionReport report = reproduce_cuboid_example(config.budget());
    for (const LedgerItem& item : report.items) {
        std::cout << (item.pass ? "PASS  " : "FAIL  ") << item.claim;
        if (!item.detail.empty()) std::cout << "  [" << item.detail << "]";
        std::cout << "\n";
    }
    if (!config.out.empty()) {
        io::json items = io::json::array();
        for (const LedgerItem& item : report.items) {
            items.push_back({{"claim", item.claim}, {"pass", item.pass}, {"detail", item.detail}});
        }
        io::json out = {{"items", items}, {"allPass", report.all_pass()}};
        if (report.match) out["slackMatch"] = io::slack_match_to_json(*report.match);
        if (report.bounds) out["bounds"] = io::bounds_report_to_json(*report.bounds);
        if (report.certificate) out["certificate"] = io::certificate_to_json(*report.certificate);
        io::save_json_file(config.out, out);
    }
    return report.all_pass() ? kExitProven : kExitInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact psd-rank bounds, factorizations, and irrationality certificates "
        "for nonnegative rational matrices. Matrix and polytope arguments accept "
        "JSON files or builtin:cuboid."};
    app.require_subcommand(1);

    RunConfig config;

    CLI::App* bounds = app.add_subcommand("bounds", "Lower/upper psd-rank bounds with witnesses");
    bounds->add_option("matrix", config.input, "Matrix file")->required();
    add_budget_flags(bounds, config);
    add_factor_limit_flag(bounds, config);
    add_out_flag(bounds, config);

    CLI::App* irrationality =
        app.add_subcommand("irrationality", "Certificate that no rational psd factorization of "
                                            "minimal size exists");
    irrationality->add_option("matrix", config.input, "Matrix file")->required();
    add_budget_flags(irrationality, config);
    add_factor_limit_flag(irrationality, config);
    add_out_flag(irrationality, config);

    CLI::App* verify = app.add_subcommand("verify", "Check a psd factorization against a matrix");
    verify->add_option("matrix", config.input, "Matrix file")->required();
    verify->add_option("factorization", config.second_input, "Factorization file")->required();
    verify->add_option("--tol", config.tolerance, "Absolute tolerance for float64 factorizations")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_out_flag(verify, config);

    CLI::App* factorize =
        app.add_subcommand("factorize", "Construct an exact factorization from a minimum-rank "
                                        "entry-wise square root");
    factorize->add_option("matrix", config.input, "Matrix file")->required();
    add_budget_flags(factorize, config);
    add_factor_limit_flag(factorize, config);
    add_out_flag(factorize, config);

    CLI::App* slack = app.add_subcommand("slack", "Slack matrix of a polytope from its vertex list");
    slack->add_option("polytope", config.input, "Polytope file")->required();
    add_out_flag(slack, config);

    CLI::App* validate =
        app.add_subcommand("validate", "Re-check an irrationality certificate against a matrix");
    validate->add_option("matrix", config.input, "Matrix file")->required();
    validate->add_option("certificate", config.second_input, "Certificate file")->required();

    CLI::App* paper_example = app.add_subcommand(
        "paper-example", "Run the built-in cuboid example end to end and report every claim");
    add_budget_flags(paper_example, config);
    add_factor_limit_flag(paper_example, config);
    add_out_flag(paper_example, config);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (bounds->parsed()) return cmd_bounds(config);
        if (irrationality->parsed()) return cmd_irrationality(config);
        if (verify->parsed()) return cmd_verify(config);
        if (factorize->parsed()) return cmd_factorize(config);
        if (slack->parsed()) return cmd_slack(config);
        if (validate->parsed()) return cmd_validate(config);
        if (paper_example->parsed()) return cmd_paper_example(config);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
