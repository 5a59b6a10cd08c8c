#include "psdrank/rationality.hpp"

#include "psdrank/errors.hpp"
#include "psdrank/support_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace psdrank {

SquareClass square_class(const Rational& r, const Integer& limit) {
    return squarefree_part(r, limit).radicand;
}

SquareClass class_product(const SquareClass& a, const SquareClass& b) {
    const Integer g = gcd(a, b);
    return (a / g) * (b / g);
}

SquareClass cycle_class(const RatMatrix& m, const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols, const Integer& limit) {
    const std::size_t length = rows.size();
    if (length < 2 || cols.size() != length) {
        throw std::invalid_argument("cycle needs at least two rows and matching columns");
    }
    auto distinct = [](std::vector<std::size_t> v) {
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) == v.end();
    };
    if (!distinct(rows) || !distinct(cols)) {
        throw std::invalid_argument("cycle repeats a row or column");
    }
    Rational numerator_product(1), denominator_product(1);
    for (std::size_t t = 0; t < length; ++t) {
        const std::size_t i = rows[t];
        const std::size_t i_next = rows[(t + 1) % length];
        const std::size_t j = cols[t];
        if (i >= m.rows() || i_next >= m.rows() || j >= m.cols()) {
            throw std::invalid_argument("cycle index out of range");
        }
        if (m(i, j) == 0 || m(i_next, j) == 0) {
            throw std::invalid_argument("cycle leaves the support");
        }
        numerator_product *= m(i, j);
        denominator_product *= m(i_next, j);
    }
    return square_class(abs(numerator_product / denominator_product), limit);
}

bool validate_cycle(const RatMatrix& m, const CycleCertificate& cert) {
    try {
        const SquareClass computed = cycle_class(m, cert.rows, cert.cols);
        return computed == cert.alternating_class && computed != 1;
    } catch (const std::invalid_argument&) {
        return false;
    } catch (const FactorizationLimitExceeded&) {
        return false;
    }
}

namespace {

// Deterministic presentation: rotate the cycle so it starts at the smallest
// row, then keep the lexicographically smaller of the two directions. Both
// operations preserve the alternating class (the class group has exponent
// two).
void canonicalize_cycle(std::vector<std::size_t>& rows, std::vector<std::size_t>& cols) {
    const std::size_t m = rows.size();
    const std::size_t start =
        std::min_element(rows.begin(), rows.end()) - rows.begin();

    std::vector<std::size_t> fwd_rows(m), fwd_cols(m), rev_rows(m), rev_cols(m);
    for (std::size_t t = 0; t < m; ++t) {
        fwd_rows[t] = rows[(start + t) % m];
        fwd_cols[t] = cols[(start + t) % m];
    }
    // Reversed traversal from the same start: (i_1, j_m, i_m, j_{m-1}, ...).
    for (std::size_t t = 0; t < m; ++t) {
        rev_rows[t] = rows[(start + m - t) % m];
        rev_cols[t] = cols[(start + m - 1 - t) % m];
    }
    if (std::make_pair(rev_rows, rev_cols) < std::make_pair(fwd_rows, fwd_cols)) {
        rows = std::move(rev_rows);
        cols = std::move(rev_cols);
    } else {
        rows = std::move(fwd_rows);
        cols = std::move(fwd_cols);
    }
}

}  // namespace

DiagonalRationality diagonal_rationality_test(const RatMatrix& m, const Integer& limit) {
    const SupportGraph graph = SupportGraph::build(m);

    std::vector<SquareClass> cell_class(graph.edges.size());
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        cell_class[e] = square_class(abs(m(graph.edges[e].row, graph.edges[e].col)), limit);
    }

    DiagonalRationality result;
    result.row_classes.assign(m.rows(), Integer(1));
    result.col_classes.assign(m.cols(), Integer(1));

    // chi_i * psi_j = class(M_ij) propagates uniquely along the forest once
    // each root is pinned to class 1.
    for (const auto& [is_row, idx] : graph.bfs_order) {
        const auto& parent = is_row ? graph.row_parent[idx] : graph.col_parent[idx];
        if (!parent) continue;
        const SupportEdge pe = graph.edges[*parent];
        if (is_row) {
            result.row_classes[idx] = class_product(result.col_classes[pe.col], cell_class[*parent]);
        } else {
            result.col_classes[idx] = class_product(result.row_classes[pe.row], cell_class[*parent]);
        }
    }

    for (std::size_t e : graph.non_tree_edges) {
        const SupportEdge edge = graph.edges[e];
        if (class_product(result.row_classes[edge.row], result.col_classes[edge.col]) == cell_class[e]) {
            continue;
        }
        auto [rows, cols] = graph.fundamental_cycle(e);
        canonicalize_cycle(rows, cols);
        CycleCertificate cert;
        cert.alternating_class = cycle_class(m, rows, cols, limit);
        cert.rows = std::move(rows);
        cert.cols = std::move(cols);
        result.consistent = false;
        result.row_classes.clear();
        result.col_classes.clear();
        result.obstruction = std::move(cert);
        return result;
    }
    result.consistent = true;
    return result;
}

std::optional<IrrationalityCertificate> no_rational_factorization_certificate(
    const RatMatrix& m, const SqrtRankBudget& budget) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        bool all_zero = true;
        for (std::size_t j = 0; j < m.cols() && all_zero; ++j) all_zero = m(i, j) == 0;
        if (all_zero) throw ZeroLine("row " + std::to_string(i + 1) + " is zero");
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
        bool all_zero = true;
        for (std::size_t i = 0; i < m.rows() && all_zero; ++i) all_zero = m(i, j) == 0;
        if (all_zero) throw ZeroLine("column " + std::to_string(j + 1) + " is zero");
    }

    const BoundsReport bounds = psd_rank_bounds(m, budget);
    if (!bounds.tight || bounds.lower_bound == 0) return std::nullopt;
    const std::size_t k = bounds.lower_bound;

    const ForcedSet forced = rank_one_forced(m, k);
    if (!forced.covers_all(m.rows(), m.cols())) return std::nullopt;

    const DiagonalRationality diag = diagonal_rationality_test(m, budget.factor_limit);
    if (diag.consistent) return std::nullopt;

    IrrationalityCertificate cert;
    cert.size = k;
    cert.forced = forced;
    cert.obstruction = *diag.obstruction;
    return cert;
}

bool validate_certificate(const RatMatrix& m, const IrrationalityCertificate& cert) {
    if (cert.size == 0) return false;

    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!cert.forced.forced_rows.contains(i)) return false;
        const auto witness = cert.forced.row_witnesses.find(i);
        if (witness == cert.forced.row_witnesses.end()) return false;
        const TriangularCertificate& tri = witness->second;
        if (tri.size() != cert.size || !validate_triangular(m, tri)) return false;
        // The forced row must sit in the witness with exactly one nonzero.
        const auto pos = std::find(tri.row_indices.begin(), tri.row_indices.end(), i);
        if (pos == tri.row_indices.end()) return false;
        std::size_t nonzeros = 0;
        for (std::size_t c : tri.col_indices)
            if (m(i, c) != 0) ++nonzeros;
        if (nonzeros != 1) return false;
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (!cert.forced.forced_cols.contains(j)) return false;
        const auto witness = cert.forced.col_witnesses.find(j);
        if (witness == cert.forced.col_witnesses.end()) return false;
        const TriangularCertificate& tri = witness->second;
        if (tri.size() != cert.size || !validate_triangular(m, tri)) return false;
        const auto pos = std::find(tri.col_indices.begin(), tri.col_indices.end(), j);
        if (pos == tri.col_indices.end()) return false;
        std::size_t nonzeros = 0;
        for (std::size_t r : tri.row_indices)
            if (m(r, j) != 0) ++nonzeros;
        if (nonzeros != 1) return false;
    }

    return validate_cycle(m, cert.obstruction);
}

}  // namespace psdrank
