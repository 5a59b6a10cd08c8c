#include "psdrank/slackgeom.hpp"

#include "psdrank/errors.hpp"
#include "psdrank/linalg.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace psdrank {

namespace {

// Dimension of the affine hull.
std::size_t affine_rank(const std::vector<std::vector<Rational>>& points, std::size_t dim) {
    if (points.size() <= 1) return 0;
    RatMatrix diffs(points.size() - 1, dim);
    for (std::size_t i = 1; i < points.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) diffs(i - 1, j) = points[i][j] - points[0][j];
    return rat_rank(diffs);
}

bool next_combination(std::vector<std::size_t>& combo, std::size_t n) {
    const std::size_t k = combo.size();
    std::size_t i = k;
    while (i-- > 0) {
        if (combo[i] + 1 <= n - k + i) {
            ++combo[i];
            for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

Polytope::Polytope(std::size_t dim, std::vector<std::vector<Rational>> verts)
    : dimension(dim), vertices(std::move(verts)) {
    for (const auto& v : vertices) {
        if (v.size() != dimension) {
            throw DimensionMismatch("vertex has " + std::to_string(v.size()) + " coordinates, expected " +
                                    std::to_string(dimension));
        }
    }
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j]) {
                throw std::invalid_argument("duplicate vertex at positions " + std::to_string(i + 1) +
                                            " and " + std::to_string(j + 1));
            }
    if (affine_rank(vertices, dimension) != dimension) {
        throw NotFullDimensional("vertices do not affinely span dimension " + std::to_string(dimension));
    }
}

std::vector<FacetInequality> facets_bruteforce(const Polytope& p) {
    const std::size_t d = p.dimension;
    const std::size_t n = p.vertices.size();
    if (d > 4) throw std::invalid_argument("facets_bruteforce is limited to dimension <= 4");
    if (n > 32) throw std::invalid_argument("facets_bruteforce is limited to 32 vertices");

    std::vector<FacetInequality> facets;
    std::vector<std::size_t> subset(d);
    for (std::size_t i = 0; i < d; ++i) subset[i] = i;
    do {
        // Hyperplane a.x = b through the subset: nullspace of the d x (d+1)
        // system (v_i | -1).(a; b) = 0, kept only when it is unique.
        RatMatrix system(d, d + 1);
        for (std::size_t r = 0; r < d; ++r) {
            for (std::size_t c = 0; c < d; ++c) system(r, c) = p.vertices[subset[r]][c];
            system(r, d) = Rational(-1);
        }
        RatMatrix reduced = system;
        const std::vector<std::size_t> pivots = rref_in_place(reduced);
        if (pivots.size() != d) continue;

        std::vector<Rational> coeffs(d + 1);
        std::size_t free_col = 0;
        while (free_col <= d && std::find(pivots.begin(), pivots.end(), free_col) != pivots.end())
            ++free_col;
        coeffs[free_col] = Rational(1);
        for (std::size_t t = 0; t < d; ++t) coeffs[pivots[t]] = -reduced(t, free_col);

        std::vector<Rational> normal(coeffs.begin(), coeffs.begin() + d);
        Rational offset = coeffs[d];

        int valid_side = 0;  // +1: all slacks >= 0 as is, -1: flipped
        bool mixed = false;
        std::vector<std::size_t> tight;
        for (std::size_t v = 0; v < n && !mixed; ++v) {
            Rational slack = offset;
            for (std::size_t c = 0; c < d; ++c) slack -= normal[c] * p.vertices[v][c];
            const int s = sign_of(slack);
            if (s == 0) {
                tight.push_back(v);
            } else if (valid_side == 0) {
                valid_side = s;
            } else if (s != valid_side) {
                mixed = true;
            }
        }
        if (mixed || valid_side == 0) continue;
        if (valid_side < 0) {
            for (auto& c : normal) c = -c;
            offset = -offset;
        }

        std::vector<std::vector<Rational>> tight_points;
        tight_points.reserve(tight.size());
        for (std::size_t v : tight) tight_points.push_back(p.vertices[v]);
        if (tight_points.size() < d || affine_rank(tight_points, d) != d - 1) continue;

        std::size_t lead = 0;
        while (lead < d && normal[lead] == 0) ++lead;
        const Rational scale = Rational(1) / abs(normal[lead]);
        for (auto& c : normal) c *= scale;
        offset *= scale;

        FacetInequality facet{std::move(normal), std::move(offset)};
        if (std::find(facets.begin(), facets.end(), facet) == facets.end()) {
            facets.push_back(std::move(facet));
        }
    } while (next_combination(subset, n));
    return facets;
}

RatMatrix slack_matrix(const Polytope& p, const std::vector<FacetInequality>& facets) {
    RatMatrix slack(p.vertices.size(), facets.size());
    for (std::size_t j = 0; j < facets.size(); ++j) {
        if (facets[j].normal.size() != p.dimension) {
            throw DimensionMismatch("facet " + std::to_string(j + 1) + " has the wrong dimension");
        }
        for (std::size_t i = 0; i < p.vertices.size(); ++i) {
            Rational value = facets[j].offset;
            for (std::size_t c = 0; c < p.dimension; ++c) value -= facets[j].normal[c] * p.vertices[i][c];
            if (value < 0) {
                throw NegativeSlack("vertex " + std::to_string(i + 1) + " violates facet " +
                                    std::to_string(j + 1));
            }
            slack(i, j) = std::move(value);
        }
    }
    return slack;
}

namespace {

struct ColumnPairState {
    bool dead = false;
    std::optional<Rational> scale;
};

using ColumnStates = std::vector<std::vector<ColumnPairState>>;  // [computed col][target col]

bool columns_feasible(const ColumnStates& states) {
    const std::size_t q = states.size();
    for (std::size_t j = 0; j < q; ++j) {
        bool any = false;
        for (std::size_t c = 0; c < q && !any; ++c) any = !states[j][c].dead;
        if (!any) return false;
    }
    for (std::size_t c = 0; c < q; ++c) {
        bool any = false;
        for (std::size_t j = 0; j < q && !any; ++j) any = !states[j][c].dead;
        if (!any) return false;
    }
    return true;
}

bool match_columns(const ColumnStates& states, std::size_t j, std::vector<bool>& used,
                   std::vector<std::size_t>& col_perm, std::vector<Rational>& scales) {
    const std::size_t q = states.size();
    if (j == q) return true;
    for (std::size_t c = 0; c < q; ++c) {
        if (used[c] || states[j][c].dead) continue;
        used[c] = true;
        col_perm[j] = c;
        scales[j] = states[j][c].scale.value_or(Rational(1));
        if (match_columns(states, j + 1, used, col_perm, scales)) return true;
        used[c] = false;
    }
    return false;
}

struct MatchSearch {
    const RatMatrix& computed;
    const RatMatrix& target;
    std::vector<std::size_t> row_perm;
    std::vector<bool> target_row_used;
    std::optional<SlackMatch> result;

    bool assign(std::size_t i, const ColumnStates& states) {
        const std::size_t p = computed.rows();
        const std::size_t q = computed.cols();
        if (i == p) {
            std::vector<bool> used(q, false);
            std::vector<std::size_t> col_perm(q);
            std::vector<Rational> scales(q);
            if (!match_columns(states, 0, used, col_perm, scales)) return false;
            result = SlackMatch{row_perm, std::move(col_perm), std::move(scales)};
            return true;
        }
        for (std::size_t r = 0; r < p; ++r) {
            if (target_row_used[r]) continue;
            ColumnStates next = states;
            for (std::size_t j = 0; j < q; ++j) {
                for (std::size_t c = 0; c < q; ++c) {
                    ColumnPairState& st = next[j][c];
                    if (st.dead) continue;
                    const bool comp_zero = computed(i, j) == 0;
                    const bool targ_zero = target(r, c) == 0;
                    if (comp_zero != targ_zero) {
                        st.dead = true;
                        continue;
                    }
                    if (comp_zero) continue;
                    const Rational scale = target(r, c) / computed(i, j);
                    if (scale <= 0 || (st.scale && *st.scale != scale)) {
                        st.dead = true;
                    } else {
                        st.scale = scale;
                    }
                }
            }
            if (!columns_feasible(next)) continue;
            row_perm[i] = r;
            target_row_used[r] = true;
            if (assign(i + 1, next)) return true;
            target_row_used[r] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<SlackMatch> match_up_to_scaling(const RatMatrix& computed, const RatMatrix& target) {
    if (computed.rows() != target.rows() || computed.cols() != target.cols()) {
        throw DimensionMismatch("matrices must have the same shape");
    }
    MatchSearch search{computed, target, std::vector<std::size_t>(computed.rows()),
                       std::vector<bool>(computed.rows(), false), std::nullopt};
    search.assign(0, ColumnStates(computed.cols(), std::vector<ColumnPairState>(computed.cols())));
    return search.result;
}

bool check_match(const RatMatrix& computed, const RatMatrix& target, const SlackMatch& match) {
    const std::size_t p = computed.rows();
    const std::size_t q = computed.cols();
    if (target.rows() != p || target.cols() != q) return false;
    if (match.row_permutation.size() != p || match.col_permutation.size() != q ||
        match.col_scales.size() != q) {
        return false;
    }
    std::vector<bool> row_seen(p, false), col_seen(q, false);
    for (std::size_t r : match.row_permutation) {
        if (r >= p || row_seen[r]) return false;
        row_seen[r] = true;
    }
    for (std::size_t c : match.col_permutation) {
        if (c >= q || col_seen[c]) return false;
        col_seen[c] = true;
    }
    for (const Rational& s : match.col_scales)
        if (s <= 0) return false;
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < q; ++j)
            if (target(match.row_permutation[i], match.col_permutation[j]) !=
                match.col_scales[j] * computed(i, j)) {
                return false;
            }
    return true;
}

}  // namespace psdrank
