#include "psdrank/psdfact.hpp"

#include "psdrank/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace psdrank {

std::string to_string(Arithmetic a) {
    switch (a) {
        case Arithmetic::rational: return "rational";
        case Arithmetic::radical: return "radical";
        case Arithmetic::float64: return "float64";
    }
    throw std::logic_error("unreachable");
}

Arithmetic arithmetic_from_string(const std::string& s) {
    if (s == "rational") return Arithmetic::rational;
    if (s == "radical") return Arithmetic::radical;
    if (s == "float64") return Arithmetic::float64;
    throw ParseError("unknown arithmetic '" + s + "'");
}

RankOneDecomposition rational_direction(const RatMatrix& a) {
    if (!a.is_symmetric()) throw NotSymmetric{};
    const std::size_t n = a.rows();

    bool zero = true;
    for (std::size_t i = 0; i < n && zero; ++i)
        for (std::size_t j = 0; j < n && zero; ++j)
            if (a(i, j) != 0) zero = false;
    if (zero) return RankOneDecomposition{Rational(1), std::vector<Rational>(n, Rational(0))};

    if (rat_rank(a) > 1) throw NotRankOne{};
    for (std::size_t i = 0; i < n; ++i) {
        if (a(i, i) < 0) throw NotPsd{"negative diagonal entry"};
    }

    std::size_t lead = 0;
    while (lead < n && a(lead, lead) == 0) ++lead;
    if (lead == n) throw NotPsd{"rank-one symmetric matrix with zero diagonal"};

    const Rational scale = a(lead, lead);
    std::vector<Rational> q(n);
    for (std::size_t j = 0; j < n; ++j) q[j] = a(lead, j) / scale;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a(i, j) != scale * q[i] * q[j]) throw NotPsd{"reconstruction failed"};

    return RankOneDecomposition{scale, std::move(q)};
}

namespace {

RadScalar trace_inner(const RadMatrix& x, const RadMatrix& y) {
    RadScalar total;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) total += x(i, j) * y(i, j);
    return total;
}

double trace_inner(const DoubleMatrix& x, const DoubleMatrix& y) {
    double total = 0;
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) total += x(i, j) * y(i, j);
    return total;
}

void require_shapes(const RatMatrix& m, const PsdFactorization& f) {
    if (f.row_count() != m.rows() || f.col_count() != m.cols()) {
        throw DimensionMismatch("factorization is " + std::to_string(f.row_count()) + "x" +
                                std::to_string(f.col_count()) + " against a " + std::to_string(m.rows()) +
                                "x" + std::to_string(m.cols()) + " matrix");
    }
    auto check_factor = [&](std::size_t rows, std::size_t cols, bool row_side, std::size_t idx) {
        if (rows != f.size || cols != f.size) {
            throw DimensionMismatch(std::string(row_side ? "row" : "column") + " factor " +
                                    std::to_string(idx + 1) + " is not " + std::to_string(f.size) + "x" +
                                    std::to_string(f.size));
        }
    };
    if (f.is_exact()) {
        for (std::size_t i = 0; i < f.exact_row_factors.size(); ++i)
            check_factor(f.exact_row_factors[i].rows(), f.exact_row_factors[i].cols(), true, i);
        for (std::size_t j = 0; j < f.exact_col_factors.size(); ++j)
            check_factor(f.exact_col_factors[j].rows(), f.exact_col_factors[j].cols(), false, j);
    } else {
        for (std::size_t i = 0; i < f.float_row_factors.size(); ++i)
            check_factor(f.float_row_factors[i].rows(), f.float_row_factors[i].cols(), true, i);
        for (std::size_t j = 0; j < f.float_col_factors.size(); ++j)
            check_factor(f.float_col_factors[j].rows(), f.float_col_factors[j].cols(), false, j);
    }
}

}  // namespace

VerifyReport verify_factorization(const RatMatrix& m, const PsdFactorization& f, double tol) {
    require_shapes(m, f);
    VerifyReport report;

    auto check_exact_factor = [&](const RadMatrix& factor, bool row_side, std::size_t idx) {
        if (!factor.is_symmetric()) {
            report.bad_factors.push_back({row_side, idx, "not symmetric"});
            return;
        }
        if (!psd_check_radical(factor).psd) {
            report.bad_factors.push_back({row_side, idx, "not psd"});
        }
    };
    auto check_float_factor = [&](const DoubleMatrix& factor, bool row_side, std::size_t idx) {
        bool symmetric = factor.is_square();
        for (std::size_t i = 0; symmetric && i < factor.rows(); ++i)
            for (std::size_t j = i + 1; j < factor.cols(); ++j)
                if (std::abs(factor(i, j) - factor(j, i)) > tol) {
                    symmetric = false;
                    break;
                }
        if (!symmetric) {
            report.bad_factors.push_back({row_side, idx, "not symmetric"});
            return;
        }
        DoubleMatrix sym = factor;
        for (std::size_t i = 0; i < sym.rows(); ++i)
            for (std::size_t j = 0; j < sym.cols(); ++j) sym(i, j) = (factor(i, j) + factor(j, i)) / 2;
        if (!psd_check_float(sym, tol).psd) {
            report.bad_factors.push_back({row_side, idx, "not psd"});
        }
    };

    if (f.is_exact()) {
        for (std::size_t i = 0; i < f.exact_row_factors.size(); ++i)
            check_exact_factor(f.exact_row_factors[i], true, i);
        for (std::size_t j = 0; j < f.exact_col_factors.size(); ++j)
            check_exact_factor(f.exact_col_factors[j], false, j);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const RadScalar inner = trace_inner(f.exact_row_factors[i], f.exact_col_factors[j]);
                if (!(inner == RadScalar(m(i, j)))) {
                    report.cell_violations.push_back({i, j, to_string(m(i, j)), inner.str()});
                }
            }
        }
    } else {
        for (std::size_t i = 0; i < f.float_row_factors.size(); ++i)
            check_float_factor(f.float_row_factors[i], true, i);
        for (std::size_t j = 0; j < f.float_col_factors.size(); ++j)
            check_float_factor(f.float_col_factors[j], false, j);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                const double inner = trace_inner(f.float_row_factors[i], f.float_col_factors[j]);
                const double target = static_cast<double>(m(i, j));
                if (std::abs(inner - target) > tol) {
                    report.cell_violations.push_back({i, j, to_string(m(i, j)), std::to_string(inner)});
                }
            }
        }
    }

    report.valid = report.cell_violations.empty() && report.bad_factors.empty();
    return report;
}

std::vector<std::size_t> factor_ranks(const PsdFactorization& f) {
    if (!f.is_exact()) throw Error("factor_ranks requires exact arithmetic");
    std::vector<std::size_t> ranks;
    ranks.reserve(f.exact_row_factors.size() + f.exact_col_factors.size());
    for (const RadMatrix& a : f.exact_row_factors) ranks.push_back(rad_rank(a));
    for (const RadMatrix& b : f.exact_col_factors) ranks.push_back(rad_rank(b));
    return ranks;
}

SqrtCandidate SqrtCandidate::nonnegative(const RatMatrix& m, const Integer& factor_limit) {
    RadMatrix entries(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j) < 0) throw std::invalid_argument("matrix has a negative entry");
            entries(i, j) = RadScalar::sqrt_of(m(i, j), factor_limit);
        }
    }
    return SqrtCandidate{std::move(entries)};
}

SqrtCandidate SqrtCandidate::with_signs(const RatMatrix& m, const Matrix<int>& signs,
                                        const Integer& factor_limit) {
    if (signs.rows() != m.rows() || signs.cols() != m.cols()) {
        throw DimensionMismatch("sign pattern shape differs from the matrix");
    }
    SqrtCandidate out = nonnegative(m, factor_limit);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0 && signs(i, j) < 0) out.entries(i, j) = -out.entries(i, j);
    return out;
}

RatMatrix SqrtCandidate::squared() const {
    RatMatrix out(entries.rows(), entries.cols());
    for (std::size_t i = 0; i < entries.rows(); ++i)
        for (std::size_t j = 0; j < entries.cols(); ++j) {
            const RadScalar sq = entries(i, j) * entries(i, j);
            out(i, j) = sq.rational_value();
        }
    return out;
}

PsdFactorization factorization_from_sqrt(const SqrtCandidate& s) {
    const RadMatrix& sqrt = s.entries;
    const std::size_t p = sqrt.rows();
    const std::size_t q = sqrt.cols();

    // Reduced echelon form hands us both the lowest-index independent
    // columns (the basis U) and the coefficients expressing every column of
    // S in that basis (the rows of V). Each basis column is normalized to a
    // leading 1, the scale moving into V, so [4] factors as A = [1], B = [4].
    RadMatrix reduced = sqrt;
    const std::vector<std::size_t> basis = rref_in_place(reduced);
    const std::size_t r = basis.size();

    std::vector<RadScalar> leading(r);
    for (std::size_t t = 0; t < r; ++t) {
        std::size_t i = 0;
        while (sqrt(i, basis[t]).is_zero()) ++i;
        leading[t] = sqrt(i, basis[t]);
    }

    RadMatrix u(p, r);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t t = 0; t < r; ++t) u(i, t) = sqrt(i, basis[t]) / leading[t];

    RadMatrix v(q, r);
    for (std::size_t j = 0; j < q; ++j)
        for (std::size_t t = 0; t < r; ++t) v(j, t) = reduced(t, j) * leading[t];

    PsdFactorization f;
    f.size = r;
    bool all_rational = true;
    auto push = [&](std::vector<RadMatrix>& dst, const RadMatrix& src, std::size_t row) {
        std::vector<RadScalar> vec(r);
        for (std::size_t t = 0; t < r; ++t) vec[t] = src(row, t);
        dst.push_back(phi(vec));
        for (std::size_t a = 0; a < r && all_rational; ++a)
            for (std::size_t b = 0; b < r; ++b)
                if (!dst.back()(a, b).is_rational()) {
                    all_rational = false;
                    break;
                }
    };
    for (std::size_t i = 0; i < p; ++i) push(f.exact_row_factors, u, i);
    for (std::size_t j = 0; j < q; ++j) push(f.exact_col_factors, v, j);
    f.arithmetic = all_rational ? Arithmetic::rational : Arithmetic::radical;
    return f;
}

}  // namespace psdrank
