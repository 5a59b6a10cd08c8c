#pragma once

#include "psdrank/matrix.hpp"

#include <cstddef>
#include <vector>

namespace psdrank {

/// Exact rank by fraction-free (Bareiss) elimination with full pivot search;
/// the pivot is the first nonzero entry of the remaining submatrix in
/// row-major order, so results are reproducible.
std::size_t rat_rank(const RatMatrix& m);

/// Exact rank over the multiquadratic field generated by the entries'
/// radicands. Same elimination and pivot rule as rat_rank.
std::size_t rad_rank(const RadMatrix& m);

/// Outcome of the exact LDL^T-style psd test. When psd, `pivots` lists the
/// elimination pivots (all >= 0; a zero pivot certifies an identically zero
/// row at elimination time). When not, `witness` holds x with
/// x^T A x = witness_value < 0.
template <typename T>
struct PsdCheck {
    bool psd = false;
    std::vector<T> pivots;
    std::vector<T> witness;
    T witness_value{};
};

/// Throws NotSymmetric when a != a^T.
PsdCheck<Rational> psd_check_rational(const RatMatrix& a);

/// Same test carried out exactly in the radical field (pivot signs decided
/// by RadScalar::sign).
PsdCheck<RadScalar> psd_check_radical(const RadMatrix& a);

/// Tolerant variant for float64 factors: |x| <= tol counts as zero.
PsdCheck<double> psd_check_float(const DoubleMatrix& a, double tol);

/// Reduced row echelon form over an exact field. Returns the pivot column
/// indices (ascending); `m` is reduced in place.
template <typename T>
std::vector<std::size_t> rref_in_place(Matrix<T>& m);

}  // namespace psdrank
