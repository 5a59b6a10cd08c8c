#include "psdrank/linalg.hpp"

#include "psdrank/errors.hpp"

#include <cmath>
#include <cstddef>
#include <utility>

namespace psdrank {

namespace {

bool entry_is_zero(const Rational& x) { return x == 0; }
bool entry_is_zero(const RadScalar& x) { return x.is_zero(); }

template <typename T>
std::size_t bareiss_rank(Matrix<T> m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t rank = 0;
    T prev = T(1);
    while (rank < rows && rank < cols) {
        // Full pivot search: first nonzero of the remaining submatrix in
        // row-major order (lowest row, then lowest column).
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = rank; i < rows && pi == rows; ++i) {
            for (std::size_t j = rank; j < cols; ++j) {
                if (!entry_is_zero(m(i, j))) {
                    pi = i;
                    pj = j;
                    break;
                }
            }
        }
        if (pi == rows) break;
        if (pi != rank) m.swap_rows(pi, rank);
        if (pj != rank) m.swap_cols(pj, rank);

        const T pivot = m(rank, rank);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = rank + 1; j < cols; ++j) {
                m(i, j) = (m(i, j) * pivot - m(i, rank) * m(rank, j)) / prev;
            }
            m(i, rank) = T(0);
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

template <typename T, typename SignFn>
PsdCheck<T> psd_check_impl(Matrix<T> a, SignFn sign) {
    if (!a.is_symmetric()) throw NotSymmetric{};
    const std::size_t n = a.rows();
    PsdCheck<T> out;
    out.pivots.reserve(n);

    // Congruence bookkeeping: at all times current = E * A * E^T, so a bad
    // direction y for the current matrix maps back as x = E^T y.
    Matrix<T> eliminator = Matrix<T>::identity(n);
    auto fail_with = [&](const std::vector<T>& y, const T& value) {
        std::vector<T> x(n, T(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) x[j] += eliminator(i, j) * y[i];
        out.psd = false;
        out.witness = std::move(x);
        out.witness_value = value;
    };

    for (std::size_t k = 0; k < n; ++k) {
        const T diag = a(k, k);
        const int s = sign(diag);
        if (s < 0) {
            std::vector<T> y(n, T(0));
            y[k] = T(1);
            fail_with(y, diag);
            return out;
        }
        if (s == 0) {
            std::size_t j = k + 1;
            while (j < n && sign(a(k, j)) == 0) ++j;
            if (j < n) {
                // Zero diagonal with a live off-diagonal entry b: on the 2x2
                // block [[0, b], [b, c]] the vector t*e_k + e_j evaluates to
                // 2bt + c, made equal to -1 by t = -(c+1)/(2b).
                const T b = a(k, j);
                const T c = a(j, j);
                const T t = -(c + T(1)) / (b * T(2));
                std::vector<T> y(n, T(0));
                y[k] = t;
                y[j] = T(1);
                fail_with(y, t * b * T(2) + c);
                return out;
            }
            out.pivots.push_back(T(0));
            continue;
        }
        out.pivots.push_back(diag);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sign(a(i, k)) == 0) continue;
            const T factor = a(i, k) / diag;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = a(i, j) - factor * a(k, j);
            for (std::size_t j = 0; j < n; ++j) eliminator(i, j) = eliminator(i, j) - factor * eliminator(k, j);
        }
    }
    out.psd = true;
    return out;
}

}  // namespace

std::size_t rat_rank(const RatMatrix& m) { return bareiss_rank(m); }

std::size_t rad_rank(const RadMatrix& m) { return bareiss_rank(m); }

PsdCheck<Rational> psd_check_rational(const RatMatrix& a) {
    return psd_check_impl(a, [](const Rational& x) { return sign_of(x); });
}

PsdCheck<RadScalar> psd_check_radical(const RadMatrix& a) {
    return psd_check_impl(a, [](const RadScalar& x) { return x.sign(); });
}

PsdCheck<double> psd_check_float(const DoubleMatrix& a, double tol) {
    return psd_check_impl(a, [tol](double x) { return std::abs(x) <= tol ? 0 : (x < 0 ? -1 : 1); });
}

template <typename T>
std::vector<std::size_t> rref_in_place(Matrix<T>& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::size_t> pivot_cols;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t pivot = lead;
        while (pivot < rows && entry_is_zero(m(pivot, col))) ++pivot;
        if (pivot == rows) continue;
        if (pivot != lead) m.swap_rows(pivot, lead);
        const T inv = T(1) / m(lead, col);
        for (std::size_t j = col; j < cols; ++j) m(lead, j) = m(lead, j) * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == lead || entry_is_zero(m(i, col))) continue;
            const T factor = m(i, col);
            for (std::size_t j = col; j < cols; ++j) m(i, j) = m(i, j) - factor * m(lead, j);
        }
        pivot_cols.push_back(col);
        ++lead;
    }
    return pivot_cols;
}

template std::vector<std::size_t> rref_in_place<Rational>(Matrix<Rational>&);
template std::vector<std::size_t> rref_in_place<RadScalar>(Matrix<RadScalar>&);

RadMatrix to_radical(const RatMatrix& m) {
    RadMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = RadScalar(m(i, j));
    return out;
}

std::optional<RatMatrix> to_rational(const RadMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_rational()) return std::nullopt;
            out(i, j) = m(i, j).rational_value();
        }
    return out;
}

DoubleMatrix to_double(const RadMatrix& m) {
    DoubleMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).approx();
    return out;
}

bool is_nonnegative(const RatMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) < 0) return false;
    return true;
}

}  // namespace psdrank
