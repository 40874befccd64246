#include "tropcanon/matching.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

#include "tropcanon/canon.hpp"

namespace tropcanon {

BitMatrix BitMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    if (rows.empty() || rows.front().empty())
        throw DimensionError("matrix dimensions must be positive");
    BitMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw DimensionError("ragged rows in matrix literal");
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (rows[i][j] != 0 && rows[i][j] != 1)
                throw InvalidArgument("bit matrix entries must be 0 or 1");
            m.set(i, j, rows[i][j] == 1);
        }
    }
    return m;
}

MatchResult match_naive(const BitMatrix& a) { return detail::max_matching(a); }

namespace {

struct Adjacency {
    std::vector<std::vector<std::size_t>> row_cols; // ones per row, ascending
    std::vector<std::vector<std::size_t>> col_rows; // ones per column, ascending
};

Adjacency build_adjacency(const BitMatrix& a) {
    Adjacency adj;
    adj.row_cols.resize(a.rows());
    adj.col_rows.resize(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.one(i, j)) {
                adj.row_cols[i].push_back(j);
                adj.col_rows[j].push_back(i);
            }
    return adj;
}

struct HkState {
    const Adjacency& adj;
    RowToCol& r2c;
    RowToCol& c2r;
    const std::vector<std::size_t>& layer_of;
    std::vector<std::uint8_t>& avail;
    std::size_t gamma;

    // Depth-first search for a path through consecutive layers ending at an
    // unmatched row in layer gamma. Tried rows are consumed for the phase.
    bool dfs(std::size_t u, std::size_t depth, std::vector<std::size_t>& path) {
        const auto col = static_cast<std::size_t>(r2c[u]);
        for (auto v : adj.col_rows[col]) {
            if (!avail[v] || layer_of[v] != depth + 1) continue;
            avail[v] = 0;
            if (depth + 1 == gamma) {
                if (r2c[v] == kUnmatched) {
                    path.push_back(v);
                    return true;
                }
                continue;
            }
            if (dfs(v, depth + 1, path)) {
                path.push_back(v);
                return true;
            }
        }
        return false;
    }
};

} // namespace

MatchResult match_hk(const BitMatrix& a, HkStats* stats) {
    const std::size_t s = a.rows(), n = a.cols();
    const auto adj = build_adjacency(a);
    RowToCol r2c(s, kUnmatched), c2r(n, kUnmatched);

    // Greedy pass over lower right ones: each row grabs its first free column.
    for (std::size_t i = 0; i < s; ++i)
        for (auto j : adj.row_cols[i])
            if (c2r[j] == kUnmatched) {
                r2c[i] = static_cast<std::ptrdiff_t>(j);
                c2r[j] = static_cast<std::ptrdiff_t>(i);
                break;
            }
    if (stats) {
        stats->greedy_size = 0;
        for (auto v : r2c)
            if (v != kUnmatched) ++stats->greedy_size;
        stats->phase_lengths.clear();
    }

    constexpr std::size_t kNoLayer = static_cast<std::size_t>(-1);
    for (;;) {
        // Layered search from matched rows owning a one in a free column.
        std::vector<std::size_t> layer_of(s, kNoLayer);
        std::vector<std::size_t> l0;
        for (std::size_t i = 0; i < s; ++i) {
            if (r2c[i] == kUnmatched) continue;
            for (auto j : adj.row_cols[i])
                if (c2r[j] == kUnmatched) {
                    layer_of[i] = 0;
                    l0.push_back(i);
                    break;
                }
        }
        std::deque<std::size_t> frontier(l0.begin(), l0.end());
        std::size_t gamma = kNoLayer;
        std::size_t depth = 0;
        while (!frontier.empty() && gamma == kNoLayer) {
            std::deque<std::size_t> next;
            for (auto u : frontier) {
                const auto col = static_cast<std::size_t>(r2c[u]);
                for (auto v : adj.col_rows[col]) {
                    if (layer_of[v] != kNoLayer) continue;
                    layer_of[v] = depth + 1;
                    if (r2c[v] == kUnmatched) gamma = depth + 1;
                    next.push_back(v);
                }
            }
            frontier = std::move(next);
            ++depth;
        }
        if (gamma == kNoLayer) break; // maximum reached
        if (stats) stats->phase_lengths.push_back(gamma);

        // A maximal set of disjoint shortest paths, applied as found.
        std::vector<std::uint8_t> avail(s, 1);
        for (auto i : l0) avail[i] = 0;
        HkState hk{adj, r2c, c2r, layer_of, avail, gamma};
        for (auto i0 : l0) {
            std::ptrdiff_t h = kUnmatched;
            for (auto j : adj.row_cols[i0])
                if (c2r[j] == kUnmatched) {
                    h = static_cast<std::ptrdiff_t>(j);
                    break;
                }
            if (h == kUnmatched) continue; // free column consumed by an earlier path
            std::vector<std::size_t> rpath;
            if (!hk.dfs(i0, 0, rpath)) continue;
            std::reverse(rpath.begin(), rpath.end()); // rows after i0, layers 1..gamma
            std::vector<std::size_t> rows{i0};
            rows.insert(rows.end(), rpath.begin(), rpath.end());
            std::vector<std::size_t> old_cols(gamma);
            for (std::size_t k = 0; k < gamma; ++k)
                old_cols[k] = static_cast<std::size_t>(r2c[rows[k]]);
            for (std::size_t k = gamma; k >= 1; --k) {
                r2c[rows[k]] = static_cast<std::ptrdiff_t>(old_cols[k - 1]);
                c2r[old_cols[k - 1]] = static_cast<std::ptrdiff_t>(rows[k]);
            }
            r2c[i0] = h;
            c2r[h] = static_cast<std::ptrdiff_t>(i0);
        }
    }

    MatchResult r;
    r.matching = std::move(r2c);
    for (auto c : r.matching)
        if (c != kUnmatched) ++r.size;
    return r;
}

KoenigResult koenig(const BitMatrix& a) {
    KoenigResult kr;
    kr.match = match_hk(a);
    const std::size_t s = a.rows(), n = a.cols();
    const auto& r2c = kr.match.matching;
    std::vector<std::ptrdiff_t> c2r(n, kUnmatched);
    for (std::size_t i = 0; i < s; ++i)
        if (r2c[i] != kUnmatched) c2r[r2c[i]] = static_cast<std::ptrdiff_t>(i);

    // First class: matched rows with a one in a free column, closed under the
    // path relation on starred ones.
    std::vector<std::uint8_t> fc(s, 0);
    std::deque<std::size_t> q;
    for (std::size_t i = 0; i < s; ++i) {
        if (r2c[i] == kUnmatched) continue;
        for (std::size_t j = 0; j < n && !fc[i]; ++j)
            if (c2r[j] == kUnmatched && a.one(i, j)) {
                fc[i] = 1;
                q.push_back(i);
            }
    }
    while (!q.empty()) {
        const auto u = q.front();
        q.pop_front();
        const auto col = static_cast<std::size_t>(r2c[u]);
        for (std::size_t v = 0; v < s; ++v)
            if (!fc[v] && a.one(v, col)) {
                assert(r2c[v] != kUnmatched); // else an augmenting path existed
                fc[v] = 1;
                q.push_back(v);
            }
    }
    for (std::size_t i = 0; i < s; ++i) {
        if (fc[i])
            kr.row_cover.push_back(i);
        else if (r2c[i] != kUnmatched)
            kr.col_cover.push_back(static_cast<std::size_t>(r2c[i]));
    }
    std::sort(kr.col_cover.begin(), kr.col_cover.end());
    return kr;
}

namespace {

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> row_maximal_cover(
    const BitMatrix& a) {
    const std::size_t s = a.rows(), n = a.cols();
    const auto mr = match_hk(a);
    if (mr.size == s) {
        std::vector<std::size_t> all(s);
        for (std::size_t i = 0; i < s; ++i) all[i] = i;
        return {all, {}};
    }
    // Augmented square matrix: pad to m x m, append a zero column and then a
    // row of ones; rows of the original with zero minimal-canon increment form
    // the inclusion-maximal row set.
    const std::size_t m = s > n ? s : n;
    OrderMatrix big(m + 1, m + 1, OrderValue(0));
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a.one(i, j)) big.at(i, j) = OrderValue(1);
    for (std::size_t j = 0; j <= m; ++j) big.at(m, j) = OrderValue(1);
    const auto lam = minimal_canon(big);
    std::vector<std::size_t> rows, cols;
    std::vector<std::uint8_t> in_r(s, 0);
    for (std::size_t i = 0; i < s; ++i)
        if (lam.ell[i] == 0) {
            rows.push_back(i);
            in_r[i] = 1;
        }
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < s; ++i)
            if (!in_r[i] && a.one(i, j)) {
                cols.push_back(j);
                break;
            }
    return {rows, cols};
}

} // namespace

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> extremal_cover(const BitMatrix& a,
                                                                             ExtremalMode mode) {
    if (mode == ExtremalMode::row_maximal) return row_maximal_cover(a);
    auto [r, c] = row_maximal_cover(a.transpose());
    return {c, r};
}

} // namespace tropcanon
