#pragma once

#include "psdrank/bounds.hpp"
#include "psdrank/psdfact.hpp"
#include "psdrank/rationality.hpp"
#include "psdrank/slackgeom.hpp"

#include <optional>
#include <string>
#include <vector>

namespace psdrank {

struct LedgerItem {
    std::string claim;
    bool pass = false;
    std::string detail;
};

/// End-to-end run of the built-in cuboid example: facet enumeration, slack
/// matrix, matching against the stored matrix, psd-rank bounds, rank-one
/// forcing, the diagonal-rationality obstruction, the irrationality
/// certificate, and the constructive size-4 factorization. One ledger item
/// per claim; everything after the match is recomputed on the matched
/// matrix.
struct ReproductionReport {
    std::vector<LedgerItem> items;
    std::optional<SlackMatch> match;
    std::optional<BoundsReport> bounds;
    std::optional<IrrationalityCertificate> certificate;

    bool all_pass() const;
};

ReproductionReport reproduce_cuboid_example(const SqrtRankBudget& budget = {});

}  // namespace psdrank
