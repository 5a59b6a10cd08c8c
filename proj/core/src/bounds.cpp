#include "psdrank/bounds.hpp"

#include "psdrank/errors.hpp"
#include "psdrank/linalg.hpp"
#include "psdrank/psdfact.hpp"
#include "psdrank/support_graph.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <future>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace psdrank {

namespace {

using Support = std::vector<std::vector<char>>;

Support support_of(const RatMatrix& m) {
    Support s(m.rows(), std::vector<char>(m.cols(), 0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) s[i][j] = m(i, j) != 0;
    return s;
}

// Greedy triangularization on an index selection: repeatedly removes a row
// with exactly one live nonzero together with that entry's column. Two
// single-nonzero rows sharing a column are already infeasible, and otherwise
// the removal order is interchangeable, so first-by-index removal is both
// sound and deterministic.
std::optional<TriangularCertificate> greedy_triangular(const Support& support,
                                                       const std::vector<std::size_t>& rows,
                                                       const std::vector<std::size_t>& cols) {
    const std::size_t k = rows.size();
    std::vector<char> row_active(k, 1), col_active(k, 1);
    TriangularCertificate cert;
    cert.row_indices.reserve(k);
    cert.col_indices.reserve(k);
    for (std::size_t step = 0; step < k; ++step) {
        bool found = false;
        for (std::size_t a = 0; a < k && !found; ++a) {
            if (!row_active[a]) continue;
            std::size_t nonzeros = 0, hit = 0;
            for (std::size_t b = 0; b < k; ++b) {
                if (col_active[b] && support[rows[a]][cols[b]]) {
                    ++nonzeros;
                    hit = b;
                    if (nonzeros > 1) break;
                }
            }
            if (nonzeros == 1) {
                row_active[a] = 0;
                col_active[hit] = 0;
                cert.row_indices.push_back(rows[a]);
                cert.col_indices.push_back(cols[hit]);
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    return cert;
}

std::vector<std::size_t> iota_vec(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

// Lexicographic k-subset enumeration; returns false once exhausted.
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

std::vector<std::size_t> first_combination(std::size_t k) { return iota_vec(k); }

struct MaskPairHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
        return std::hash<std::uint64_t>{}(p.first * 0x9e3779b97f4a7c15ULL ^ p.second);
    }
};

// Bottom-up search for an exact-size triangular submatrix: positions are
// chosen from the last triangular row upward, so a candidate row must vanish
// on every column already chosen and contribute one fresh diagonal column.
class ExactSizeSearch {
public:
    ExactSizeSearch(const Support& support, std::size_t rows, std::size_t cols, std::size_t k)
        : support_(support), rows_(rows), cols_(cols), k_(k) {}

    std::optional<TriangularCertificate> run() {
        picked_rows_.clear();
        picked_cols_.clear();
        failed_.clear();
        if (dfs(0, 0, 0)) {
            TriangularCertificate cert;
            cert.row_indices.assign(picked_rows_.rbegin(), picked_rows_.rend());
            cert.col_indices.assign(picked_cols_.rbegin(), picked_cols_.rend());
            return cert;
        }
        return std::nullopt;
    }

private:
    bool dfs(std::uint64_t used_rows, std::uint64_t used_cols, std::size_t depth) {
        if (depth == k_) return true;
        if (failed_.contains({used_rows, used_cols})) return false;

        std::vector<std::size_t> candidates;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (used_rows >> r & 1) continue;
            bool clear = true;
            for (std::size_t t = 0; t < picked_cols_.size() && clear; ++t)
                clear = !support_[r][picked_cols_[t]];
            if (clear) candidates.push_back(r);
        }
        if (depth + candidates.size() < k_ || cols_ - picked_cols_.size() < k_ - depth) {
            failed_.insert({used_rows, used_cols});
            return false;
        }
        for (std::size_t r : candidates) {
            for (std::size_t c = 0; c < cols_; ++c) {
                if ((used_cols >> c & 1) || !support_[r][c]) continue;
                picked_rows_.push_back(r);
                picked_cols_.push_back(c);
                if (dfs(used_rows | (1ULL << r), used_cols | (1ULL << c), depth + 1)) return true;
                picked_rows_.pop_back();
                picked_cols_.pop_back();
            }
        }
        failed_.insert({used_rows, used_cols});
        return false;
    }

    const Support& support_;
    std::size_t rows_, cols_, k_;
    std::vector<std::size_t> picked_rows_, picked_cols_;
    std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, MaskPairHash> failed_;
};

TriangularCertificate greedy_seed(const Support& support, std::size_t rows, std::size_t cols) {
    std::vector<std::size_t> r_sel, c_sel;
    TriangularCertificate best;
    for (;;) {
        bool extended = false;
        for (std::size_t r = 0; r < rows && !extended; ++r) {
            if (std::find(r_sel.begin(), r_sel.end(), r) != r_sel.end()) continue;
            for (std::size_t c = 0; c < cols && !extended; ++c) {
                if (!support[r][c]) continue;
                if (std::find(c_sel.begin(), c_sel.end(), c) != c_sel.end()) continue;
                auto rows_try = r_sel;
                auto cols_try = c_sel;
                rows_try.push_back(r);
                cols_try.push_back(c);
                std::sort(rows_try.begin(), rows_try.end());
                std::sort(cols_try.begin(), cols_try.end());
                if (auto cert = greedy_triangular(support, rows_try, cols_try)) {
                    r_sel = std::move(rows_try);
                    c_sel = std::move(cols_try);
                    best = std::move(*cert);
                    extended = true;
                }
            }
        }
        if (!extended) return best;
    }
}

}  // namespace

bool validate_triangular(const RatMatrix& m, const TriangularCertificate& cert) {
    const std::size_t k = cert.row_indices.size();
    if (cert.col_indices.size() != k) return false;
    std::vector<char> row_used(m.rows(), 0), col_used(m.cols(), 0);
    for (std::size_t t = 0; t < k; ++t) {
        const std::size_t r = cert.row_indices[t], c = cert.col_indices[t];
        if (r >= m.rows() || c >= m.cols()) return false;
        if (row_used[r] || col_used[c]) return false;
        row_used[r] = col_used[c] = 1;
    }
    for (std::size_t t = 0; t < k; ++t) {
        if (m(cert.row_indices[t], cert.col_indices[t]) == 0) return false;
        for (std::size_t u = t + 1; u < k; ++u) {
            if (m(cert.row_indices[t], cert.col_indices[u]) != 0) return false;
        }
    }
    return true;
}

std::optional<TriangularCertificate> is_triangular(const RatMatrix& t) {
    if (!t.is_square()) throw NotSquare{};
    const Support support = support_of(t);
    return greedy_triangular(support, iota_vec(t.rows()), iota_vec(t.cols()));
}

TriangularCertificate max_triangular_submatrix(const RatMatrix& m) {
    const std::size_t p = m.rows(), q = m.cols();
    const std::size_t n = std::min(p, q);
    if (n == 0) return {};
    const Support support = support_of(m);

    if (n <= 12) {
        for (std::size_t k = n; k >= 1; --k) {
            std::vector<std::size_t> rows = first_combination(k);
            do {
                std::vector<std::size_t> cols = first_combination(k);
                do {
                    if (auto cert = greedy_triangular(support, rows, cols)) return *cert;
                } while (next_combination(cols, q));
            } while (next_combination(rows, p));
        }
        return {};
    }

    if (p > 64 || q > 64) {
        throw Error("branch-and-bound triangular search supports at most 64 rows and columns");
    }
    const TriangularCertificate seed = greedy_seed(support, p, q);
    TriangularCertificate best = seed;
    for (std::size_t k = n; k > seed.size(); --k) {
        if (auto cert = ExactSizeSearch(support, p, q, k).run()) {
            best = *cert;
            break;
        }
    }
    return best;
}

std::vector<TriangularCertificate> enumerate_triangular(const RatMatrix& m, std::size_t k) {
    if (k == 0 || k > std::min(m.rows(), m.cols())) {
        throw std::invalid_argument("k must satisfy 1 <= k <= min(rows, cols)");
    }
    const Support support = support_of(m);
    std::vector<TriangularCertificate> out;
    std::vector<std::size_t> rows = first_combination(k);
    do {
        std::vector<std::size_t> cols = first_combination(k);
        do {
            if (auto cert = greedy_triangular(support, rows, cols)) out.push_back(std::move(*cert));
        } while (next_combination(cols, m.cols()));
    } while (next_combination(rows, m.rows()));
    return out;
}

ForcedSet rank_one_forced(const RatMatrix& m, std::size_t k) {
    const std::vector<TriangularCertificate> certs = enumerate_triangular(m, k);
    if (certs.empty()) {
        throw BoundMismatch("no " + std::to_string(k) + "x" + std::to_string(k) +
                            " triangular submatrix exists");
    }
    ForcedSet forced;
    for (const TriangularCertificate& cert : certs) {
        for (std::size_t t = 0; t < k; ++t) {
            std::size_t row_nonzeros = 0, col_nonzeros = 0;
            for (std::size_t u = 0; u < k; ++u) {
                if (m(cert.row_indices[t], cert.col_indices[u]) != 0) ++row_nonzeros;
                if (m(cert.row_indices[u], cert.col_indices[t]) != 0) ++col_nonzeros;
            }
            if (row_nonzeros == 1) {
                forced.forced_rows.insert(cert.row_indices[t]);
                forced.row_witnesses.try_emplace(cert.row_indices[t], cert);
            }
            if (col_nonzeros == 1) {
                forced.forced_cols.insert(cert.col_indices[t]);
                forced.col_witnesses.try_emplace(cert.col_indices[t], cert);
            }
        }
    }
    return forced;
}

SignPattern SignPattern::all_plus(const RatMatrix& m) {
    Matrix<int> signs(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) signs(i, j) = m(i, j) != 0 ? 1 : 0;
    return SignPattern{std::move(signs)};
}

namespace {

using FlipVector = std::vector<char>;  // one entry per non-tree support edge

bool lex_less(const FlipVector& a, const FlipVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct SearchContext {
    const SupportGraph* graph;
    const RadMatrix* base;
    std::size_t max_rank;
};

std::size_t evaluate(const SearchContext& ctx, const FlipVector& flips) {
    RadMatrix s = *ctx.base;
    for (std::size_t t = 0; t < flips.size(); ++t) {
        if (!flips[t]) continue;
        const SupportEdge e = ctx.graph->edges[ctx.graph->non_tree_edges[t]];
        s(e.row, e.col) = -s(e.row, e.col);
    }
    return rad_rank(s);
}

SignPattern pattern_from_flips(const RatMatrix& m, const SupportGraph& graph, const FlipVector& flips) {
    SignPattern pattern = SignPattern::all_plus(m);
    for (std::size_t t = 0; t < flips.size(); ++t) {
        if (!flips[t]) continue;
        const SupportEdge e = graph.edges[graph.non_tree_edges[t]];
        pattern.signs(e.row, e.col) = -1;
    }
    return pattern;
}

struct BlockBest {
    std::size_t rank;
    FlipVector flips;
    std::vector<std::uint64_t> by_rank;
    std::uint64_t examined = 0;
};

BlockBest exhaustive_block(const SearchContext& ctx, std::uint64_t lo, std::uint64_t hi, std::size_t bits) {
    BlockBest best{ctx.max_rank + 1, {}, std::vector<std::uint64_t>(ctx.max_rank + 1, 0), 0};
    FlipVector flips(bits, 0);
    for (std::uint64_t a = lo; a < hi; ++a) {
        for (std::size_t t = 0; t < bits; ++t) flips[t] = (a >> t) & 1;
        const std::size_t rank = evaluate(ctx, flips);
        ++best.by_rank[rank];
        ++best.examined;
        if (rank < best.rank || (rank == best.rank && lex_less(flips, best.flips))) {
            best.rank = rank;
            best.flips = flips;
        }
    }
    return best;
}

}  // namespace

SqrtRankResult sqrt_rank_min(const RatMatrix& m, const SqrtRankBudget& budget) {
    if (!is_nonnegative(m)) throw std::invalid_argument("sqrt_rank_min requires a nonnegative matrix");
    const SupportGraph graph = SupportGraph::build(m);
    const RadMatrix base = SqrtCandidate::nonnegative(m, budget.factor_limit).entries;
    const std::size_t bits = graph.non_tree_edges.size();
    const SearchContext ctx{&graph, &base, std::min(m.rows(), m.cols())};

    SqrtRankResult result;
    if (bits <= budget.exhaustive_bits && bits < 63) {
        const std::uint64_t total = 1ULL << bits;
        const unsigned workers = std::max(1u, budget.workers);
        std::vector<std::future<BlockBest>> futures;
        const std::uint64_t chunk = (total + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t lo = std::min<std::uint64_t>(total, w * chunk);
            const std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
            futures.push_back(std::async(workers == 1 ? std::launch::deferred : std::launch::async,
                                         exhaustive_block, ctx, lo, hi, bits));
        }
        BlockBest merged{ctx.max_rank + 1, {}, std::vector<std::uint64_t>(ctx.max_rank + 1, 0), 0};
        for (auto& fut : futures) {
            const BlockBest block = fut.get();
            merged.examined += block.examined;
            for (std::size_t r = 0; r <= ctx.max_rank; ++r) merged.by_rank[r] += block.by_rank[r];
            if (block.rank < merged.rank ||
                (block.rank == merged.rank && lex_less(block.flips, merged.flips))) {
                merged.rank = block.rank;
                merged.flips = block.flips;
            }
        }
        result.rank = merged.rank;
        result.pattern = pattern_from_flips(m, graph, merged.flips);
        result.exhaustive = true;
        result.patterns_examined = merged.examined;
        result.patterns_by_rank = std::move(merged.by_rank);
        return result;
    }

    // Randomized hill-climbing over single sign flips, seeded per restart so
    // the trajectory is a pure function of the budget seed.
    std::mt19937_64 master(budget.seed);
    std::size_t best_rank = ctx.max_rank + 1;
    FlipVector best_flips;
    std::uint64_t examined = 0;
    for (unsigned restart = 0; restart < std::max(1u, budget.restarts); ++restart) {
        std::mt19937_64 rng(master());
        FlipVector flips(bits, 0);
        for (std::size_t t = 0; t < bits; ++t) flips[t] = rng() & 1;
        std::size_t rank = evaluate(ctx, flips);
        ++examined;
        bool improved = true;
        while (improved) {
            improved = false;
            std::vector<std::size_t> order = iota_vec(bits);
            for (std::size_t t = bits; t > 1; --t) std::swap(order[t - 1], order[rng() % t]);
            for (std::size_t t : order) {
                flips[t] ^= 1;
                const std::size_t candidate = evaluate(ctx, flips);
                ++examined;
                if (candidate < rank) {
                    rank = candidate;
                    improved = true;
                } else {
                    flips[t] ^= 1;
                }
            }
        }
        if (rank < best_rank || (rank == best_rank && lex_less(flips, best_flips))) {
            best_rank = rank;
            best_flips = flips;
        }
    }
    result.rank = best_rank;
    result.pattern = pattern_from_flips(m, graph, best_flips);
    result.exhaustive = false;
    result.patterns_examined = examined;
    return result;
}

BoundsReport psd_rank_bounds(const RatMatrix& m, const SqrtRankBudget& budget) {
    if (!is_nonnegative(m)) throw std::invalid_argument("psd_rank_bounds requires a nonnegative matrix");
    BoundsReport report;
    report.lower_witness = max_triangular_submatrix(m);
    report.lower_bound = report.lower_witness.size();
    SqrtRankResult upper = sqrt_rank_min(m, budget);
    report.upper_bound = upper.rank;
    report.upper_witness = std::move(upper.pattern);
    report.tight = report.lower_bound == report.upper_bound;
    report.exhaustive = upper.exhaustive;
    report.patterns_examined = upper.patterns_examined;
    report.patterns_by_rank = std::move(upper.patterns_by_rank);
    if (report.lower_bound > report.upper_bound) {
        throw Error("internal inconsistency: triangular bound exceeds square-root rank");
    }
    return report;
}

}  // namespace psdrank
