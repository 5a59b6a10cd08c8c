#pragma once

#include "psdrank/linalg.hpp"
#include "psdrank/matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace psdrank {

enum class Arithmetic { rational, radical, float64 };

std::string to_string(Arithmetic a);
Arithmetic arithmetic_from_string(const std::string& s);

/// A size-k psd factorization: symmetric psd factors A_1..A_p (rows) and
/// B_1..B_q (columns) with M_ij = <A_i, B_j> under the trace inner product.
/// Exact factors (rational or radical) are stored as radical matrices; the
/// declared arithmetic records whether every entry is in fact rational.
struct PsdFactorization {
    Arithmetic arithmetic = Arithmetic::rational;
    std::size_t size = 0;
    std::vector<RadMatrix> exact_row_factors;
    std::vector<RadMatrix> exact_col_factors;
    std::vector<DoubleMatrix> float_row_factors;
    std::vector<DoubleMatrix> float_col_factors;

    bool is_exact() const { return arithmetic != Arithmetic::float64; }
    std::size_t row_count() const {
        return is_exact() ? exact_row_factors.size() : float_row_factors.size();
    }
    std::size_t col_count() const {
        return is_exact() ? exact_col_factors.size() : float_col_factors.size();
    }
};

/// The rank-one map: v -> v v^T.
template <typename T>
Matrix<T> phi(const std::vector<T>& v) {
    Matrix<T> out(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out(i, j) = v[i] * v[j];
    return out;
}

/// A = scale * direction direction^T, exactly; direction has first nonzero
/// coordinate 1 and scale is the matching diagonal entry. The zero matrix
/// decomposes as (1, zero vector) by convention.
struct RankOneDecomposition {
    Rational scale;
    std::vector<Rational> direction;
};

/// Throws NotSymmetric / NotRankOne / NotPsd per the documented conditions.
RankOneDecomposition rational_direction(const RatMatrix& a);

struct CellViolation {
    std::size_t row, col;
    std::string expected, actual;
};

struct FactorViolation {
    bool row_side;
    std::size_t index;
    std::string reason;
};

struct VerifyReport {
    bool valid = false;
    std::vector<CellViolation> cell_violations;
    std::vector<FactorViolation> bad_factors;
};

/// Checks every factor symmetric psd and every inner product against M:
/// exact equality for exact arithmetic, |difference| <= tol for float64.
/// Throws DimensionMismatch when the shapes disagree.
VerifyReport verify_factorization(const RatMatrix& m, const PsdFactorization& f, double tol = 1e-9);

/// Exact rank of every factor, row factors then column factors. Exact
/// arithmetic only.
std::vector<std::size_t> factor_ranks(const PsdFactorization& f);

/// An entry-wise square root: every entry is a single term +-c*sqrt(s), and
/// the entry-wise square reproduces the source matrix exactly.
struct SqrtCandidate {
    RadMatrix entries;

    /// The all-nonnegative square root of a nonnegative matrix.
    static SqrtCandidate nonnegative(const RatMatrix& m, const Integer& factor_limit = kDefaultFactorLimit);

    /// Square root with the given signs (+1/-1 on the support of m; sign
    /// values off the support are ignored).
    static SqrtCandidate with_signs(const RatMatrix& m, const Matrix<int>& signs,
                                    const Integer& factor_limit = kDefaultFactorLimit);

    /// The nonnegative matrix this is a square root of.
    RatMatrix squared() const;
};

/// Size-r factorization built from a rank-r entry-wise square root S = U V^T:
/// A_i = phi(row i of U), B_j = phi(row j of V). The decomposition picks the
/// lowest-index independent columns of S as the basis, so certificates are
/// reproducible.
PsdFactorization factorization_from_sqrt(const SqrtCandidate& s);

}  // namespace psdrank
