#pragma once

#include "psdrank/matrix.hpp"
#include "psdrank/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace psdrank {

/// Full-dimensional polytope given by its vertex list. The constructor
/// rejects duplicate vertices and vertex sets that do not affinely span the
/// stated dimension.
struct Polytope {
    std::size_t dimension = 0;
    std::vector<std::vector<Rational>> vertices;

    Polytope(std::size_t dimension, std::vector<std::vector<Rational>> vertices);
};

/// Facet inequality normal . x <= offset, valid for every vertex and tight
/// on at least `dimension` affinely independent ones. Normalized so the
/// first nonzero coefficient of the normal has absolute value 1.
struct FacetInequality {
    std::vector<Rational> normal;
    Rational offset;

    bool operator==(const FacetInequality&) const = default;
};

/// Brute-force facet enumeration over vertex d-subsets; restricted to
/// dimension <= 4 and at most 32 vertices.
std::vector<FacetInequality> facets_bruteforce(const Polytope& p);

/// Slack matrix: entry (i, j) = offset_j - normal_j . vertex_i. Throws
/// NegativeSlack when some facet is violated.
RatMatrix slack_matrix(const Polytope& p, const std::vector<FacetInequality>& facets);

/// Witness that `computed`, after permuting rows and columns and scaling
/// each column by a positive rational, equals `target` exactly:
/// target(row_permutation[i], col_permutation[j]) = col_scales[j] * computed(i, j).
struct SlackMatch {
    std::vector<std::size_t> row_permutation;
    std::vector<std::size_t> col_permutation;
    std::vector<Rational> col_scales;
};

/// First match in a deterministic backtracking order, or nullopt.
std::optional<SlackMatch> match_up_to_scaling(const RatMatrix& computed, const RatMatrix& target);

bool check_match(const RatMatrix& computed, const RatMatrix& target, const SlackMatch& match);

}  // namespace psdrank
