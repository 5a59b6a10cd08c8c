#pragma once

#include "psdrank/matrix.hpp"
#include "psdrank/radical.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace psdrank {

/// Orderings witnessing a triangular submatrix: position t uses row
/// row_indices[t] and column col_indices[t]; the permuted submatrix is lower
/// triangular with a nonzero diagonal.
struct TriangularCertificate {
    std::vector<std::size_t> row_indices;
    std::vector<std::size_t> col_indices;

    std::size_t size() const { return row_indices.size(); }
    bool operator==(const TriangularCertificate&) const = default;
};

/// Independent checker: verifies the stated orderings directly, sharing no
/// logic with the searches below.
bool validate_triangular(const RatMatrix& m, const TriangularCertificate& cert);

/// Orderings putting a square matrix in lower triangular form with nonzero
/// diagonal, or nullopt. Greedy single-nonzero-row elimination; throws
/// NotSquare.
std::optional<TriangularCertificate> is_triangular(const RatMatrix& t);

/// A largest triangular submatrix (possibly empty for a zero matrix).
/// Exhaustive in lexicographic order when min(p, q) <= 12; branch-and-bound
/// with greedy seeding beyond.
TriangularCertificate max_triangular_submatrix(const RatMatrix& m);

/// All k x k triangular submatrices, one certificate per (row set, column
/// set) pair, in lexicographic order of the index sets.
std::vector<TriangularCertificate> enumerate_triangular(const RatMatrix& m, std::size_t k);

/// Rows and columns forced to rank one in any size-k psd factorization: an
/// index is forced when some k x k triangular submatrix gives its line
/// exactly one nonzero entry. Witnesses keep the first certificate found in
/// lexicographic order.
struct ForcedSet {
    std::set<std::size_t> forced_rows, forced_cols;
    std::map<std::size_t, TriangularCertificate> row_witnesses, col_witnesses;

    bool covers_all(std::size_t rows, std::size_t cols) const {
        return forced_rows.size() == rows && forced_cols.size() == cols;
    }
};

/// Throws BoundMismatch when no k x k triangular submatrix exists.
ForcedSet rank_one_forced(const RatMatrix& m, std::size_t k);

/// +1/-1 on the support of the matrix, 0 elsewhere.
struct SignPattern {
    Matrix<int> signs;

    static SignPattern all_plus(const RatMatrix& m);
    bool operator==(const SignPattern&) const = default;
};

struct SqrtRankBudget {
    unsigned exhaustive_bits = 20;
    unsigned restarts = 64;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    Integer factor_limit = kDefaultFactorLimit;
};

struct SqrtRankResult {
    std::size_t rank = 0;
    SignPattern pattern;
    bool exhaustive = false;
    std::uint64_t patterns_examined = 0;
    /// Exhaustive search only: patterns_by_rank[r] counts sign classes whose
    /// square root has rank r.
    std::vector<std::uint64_t> patterns_by_rank;
};

/// Minimum rank over entry-wise square roots S(sigma), sigma ranging over
/// sign patterns on the support. Row/column sign flips preserve rank, so the
/// search fixes signs on a spanning forest of the support graph and
/// enumerates the remaining bits exhaustively when they fit the budget,
/// falling back to seeded hill-climbing otherwise. Deterministic for fixed
/// budget regardless of worker count.
SqrtRankResult sqrt_rank_min(const RatMatrix& m, const SqrtRankBudget& budget = {});

struct BoundsReport {
    std::size_t lower_bound = 0;
    TriangularCertificate lower_witness;
    std::size_t upper_bound = 0;
    SignPattern upper_witness;
    bool tight = false;
    bool exhaustive = false;
    std::uint64_t patterns_examined = 0;
    std::vector<std::uint64_t> patterns_by_rank;
};

/// Lower bound from the largest triangular submatrix, upper bound from the
/// square-root rank search. Requires a nonnegative matrix.
BoundsReport psd_rank_bounds(const RatMatrix& m, const SqrtRankBudget& budget = {});

}  // namespace psdrank
