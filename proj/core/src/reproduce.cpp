#include "psdrank/reproduce.hpp"

#include "psdrank/fixtures.hpp"
#include "psdrank/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace psdrank {

namespace {

// 0-based index sets of the showcase witnesses.
const std::vector<std::size_t> kWitnessRows = {0, 4, 6, 7};   // rows 1, 5, 7, 8
const std::vector<std::size_t> kWitnessCols = {0, 1, 4, 5};   // cols 1, 2, 5, 6
const std::vector<std::size_t> kCycleRows = {0, 1};           // rows 1, 2
const std::vector<std::size_t> kCycleCols = {3, 5};           // cols 4, 6

std::string join(const std::vector<std::size_t>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i] + 1;
    return out.str();
}

}  // namespace

bool ReproductionReport::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const LedgerItem& item) { return item.pass; });
}

ReproductionReport reproduce_cuboid_example(const SqrtRankBudget& budget) {
    ReproductionReport report;
    auto add = [&](std::string claim, bool pass, std::string detail) {
        report.items.push_back({std::move(claim), pass, std::move(detail)});
    };

    const Polytope polytope = fixtures::cuboid_polytope();
    const RatMatrix target = fixtures::cuboid_slack();

    const std::vector<FacetInequality> facets = facets_bruteforce(polytope);
    add("vertex list yields 6 facets", facets.size() == 6,
        "found " + std::to_string(facets.size()) + " facets");

    const RatMatrix computed = slack_matrix(polytope, facets);
    const std::optional<SlackMatch> match = match_up_to_scaling(computed, target);
    std::size_t scaled_columns = 0;
    bool scales_ok = false;
    if (match) {
        for (const Rational& s : match->col_scales) {
            if (s == 2) ++scaled_columns;
        }
        scales_ok = scaled_columns == 1 &&
                    std::count(match->col_scales.begin(), match->col_scales.end(), Rational(1)) ==
                        static_cast<long>(match->col_scales.size()) - 1;
    }
    add("slack matrix matches the stored matrix up to column scaling, one column scaled by 2",
        match && scales_ok && check_match(computed, target, *match),
        match ? std::to_string(scaled_columns) + " column(s) scaled by 2" : "no match found");
    if (!match) return report;
    report.match = match;

    // Everything below runs on the matched matrix: the computed slack matrix
    // carried onto the stored row/column order.
    RatMatrix matched(target.rows(), target.cols());
    for (std::size_t i = 0; i < computed.rows(); ++i)
        for (std::size_t j = 0; j < computed.cols(); ++j)
            matched(match->row_permutation[i], match->col_permutation[j]) =
                match->col_scales[j] * computed(i, j);
    add("matched matrix equals the stored matrix exactly", matched == target, "");

    const BoundsReport bounds = psd_rank_bounds(matched, budget);
    report.bounds = bounds;
    add("psd rank bounds are tight at 4",
        bounds.lower_bound == 4 && bounds.upper_bound == 4 && bounds.tight,
        "lower " + std::to_string(bounds.lower_bound) + ", upper " + std::to_string(bounds.upper_bound));

    const SqrtCandidate all_plus = SqrtCandidate::nonnegative(matched, budget.factor_limit);
    add("the all-nonnegative square root has rank 4", rad_rank(all_plus.entries) == 4,
        "rank " + std::to_string(rad_rank(all_plus.entries)));

    bool no_small_rank = bounds.exhaustive;
    if (bounds.exhaustive) {
        for (std::size_t r = 0; r < std::min<std::size_t>(4, bounds.patterns_by_rank.size()); ++r)
            no_small_rank = no_small_rank && bounds.patterns_by_rank[r] == 0;
    }
    add("no sign pattern reaches rank 3 or less (exhaustive over " +
            std::to_string(bounds.patterns_examined) + " classes)",
        no_small_rank, "");

    const std::vector<TriangularCertificate> witnesses = enumerate_triangular(matched, 4);
    const bool has_reference_witness =
        std::any_of(witnesses.begin(), witnesses.end(), [&](const TriangularCertificate& cert) {
            auto rows = cert.row_indices;
            auto cols = cert.col_indices;
            std::sort(rows.begin(), rows.end());
            std::sort(cols.begin(), cols.end());
            return rows == kWitnessRows && cols == kWitnessCols;
        });
    add("rows {1,5,7,8} x cols {1,2,5,6} form a triangular witness", has_reference_witness,
        std::to_string(witnesses.size()) + " triangular 4x4 submatrices in total");

    const ForcedSet forced = rank_one_forced(matched, 4);
    add("every row and column is forced to rank one",
        forced.covers_all(matched.rows(), matched.cols()),
        "forced rows {" + join({forced.forced_rows.begin(), forced.forced_rows.end()}) + "}, cols {" +
            join({forced.forced_cols.begin(), forced.forced_cols.end()}) + "}");

    const DiagonalRationality diag = diagonal_rationality_test(matched, budget.factor_limit);
    const bool cycle_ok = !diag.consistent && diag.obstruction &&
                          diag.obstruction->alternating_class == 2 &&
                          validate_cycle(matched, *diag.obstruction);
    add("diagonal rationality fails with an alternating class 2 cycle", cycle_ok,
        diag.obstruction ? "cycle rows {" + join(diag.obstruction->rows) + "} x cols {" +
                               join(diag.obstruction->cols) + "}"
                         : "no obstruction");

    add("the cycle rows {1,2} x cols {4,6} has alternating class 2",
        cycle_class(matched, kCycleRows, kCycleCols) == 2, "");

    const auto certificate = no_rational_factorization_certificate(matched, budget);
    report.certificate = certificate;
    add("irrationality certificate (no rational psd factorization of size 4) validates",
        certificate && validate_certificate(matched, *certificate), "");

    const PsdFactorization factorization = factorization_from_sqrt(all_plus);
    const std::vector<std::size_t> ranks = factor_ranks(factorization);
    const bool all_rank_one =
        std::all_of(ranks.begin(), ranks.end(), [](std::size_t r) { return r == 1; });
    add("constructive size-4 factorization verifies exactly with 14 rank-one factors",
        factorization.size == 4 && ranks.size() == 14 && all_rank_one &&
            verify_factorization(matched, factorization, 0.0).valid,
        std::to_string(ranks.size()) + " factors");

    return report;
}

}  // namespace psdrank
