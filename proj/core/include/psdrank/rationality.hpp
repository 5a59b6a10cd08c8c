#pragma once

#include "psdrank/bounds.hpp"
#include "psdrank/matrix.hpp"
#include "psdrank/radical.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace psdrank {

/// Positive rational modulo squares, represented by its square-free integer
/// part. The group has exponent two, so multiplication doubles as division.
using SquareClass = Integer;

SquareClass square_class(const Rational& r, const Integer& limit = kDefaultFactorLimit);
SquareClass class_product(const SquareClass& a, const SquareClass& b);

/// Alternating cycle (i_1, j_1, ..., i_m, j_m) in the support graph whose
/// alternating product prod M[i_t][j_t] / prod M[i_{t+1}][j_t] (indices
/// cyclic) has nontrivial square-free part. Such a cycle rules out a
/// diagonal rescaling of any entry-wise square root to a rational matrix.
struct CycleCertificate {
    std::vector<std::size_t> rows, cols;
    SquareClass alternating_class;

    bool operator==(const CycleCertificate&) const = default;
};

/// Alternating square class of a cycle, recomputed from the matrix entries.
/// Throws std::invalid_argument when the cycle is malformed or leaves the
/// support.
SquareClass cycle_class(const RatMatrix& m, const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols, const Integer& limit = kDefaultFactorLimit);

bool validate_cycle(const RatMatrix& m, const CycleCertificate& cert);

struct DiagonalRationality {
    bool consistent = false;
    /// Square classes chi_i / psi_j with class(M_ij) = chi_i * psi_j on the
    /// whole support (per connected component), when consistent.
    std::vector<SquareClass> row_classes, col_classes;
    std::optional<CycleCertificate> obstruction;
};

/// Decides whether some (equivalently, every) entry-wise square root of M is
/// diagonally equivalent to a rational matrix. Classes propagate along a
/// spanning forest of the support graph; the first failing non-tree edge
/// closes the returned certificate cycle. Signs never matter because square
/// classes erase them.
DiagonalRationality diagonal_rationality_test(const RatMatrix& m,
                                              const Integer& limit = kDefaultFactorLimit);

/// Certificate that no size-k psd factorization of M uses only rational
/// matrices: tight bounds at k, every row and column forced to rank one, and
/// a cycle obstruction to diagonal rationality.
struct IrrationalityCertificate {
    std::size_t size = 0;
    ForcedSet forced;
    CycleCertificate obstruction;
};

/// Assembles the certificate, or nullopt when any ingredient is missing
/// (inconclusive — it never claims a rational factorization exists). Throws
/// ZeroLine on an all-zero row or column.
std::optional<IrrationalityCertificate> no_rational_factorization_certificate(
    const RatMatrix& m, const SqrtRankBudget& budget = {});

/// Independent re-validation of every witness: triangular orderings, forcing
/// coverage, and the cycle's alternating class, without calling any of the
/// producing searches.
bool validate_certificate(const RatMatrix& m, const IrrationalityCertificate& cert);

}  // namespace psdrank
