#include "tropcanon/analysis.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>
#include <random>

#include "tropcanon/matching.hpp"
#include "tropcanon/tropdet.hpp"

namespace tropcanon {

SystemProfile profile(const std::vector<DiffPoly>& system, BoundMode mode) {
    if (system.empty()) throw InvalidArgument("empty system");
    int n = 0;
    for (const auto& p : system) n = std::max(n, p.max_var());
    if (n == 0) throw InvalidArgument("system involves no variables");
    OrderMatrix a(system.size(), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < system.size(); ++i)
        for (int j = 1; j <= n; ++j) {
            OrderValue o = system[i].order_in(j);
            if (mode == BoundMode::weak && o.is_neg_inf()) o = OrderValue(0);
            a.at(i, static_cast<std::size_t>(j - 1)) = o;
        }
    return {std::move(a), mode, system.size(), static_cast<std::size_t>(n)};
}

OrderValue jacobi_bound(const SystemProfile& p) { return tropdet(p.order_matrix).value; }

NormalizedCover system_cover(const SystemProfile& p) {
    const auto& a = p.order_matrix;
    if (jacobi_bound(p).is_neg_inf())
        throw InfeasibleCanon("Jacobi bound is -inf; no cover exists");
    const std::size_t s = p.s, n = p.n;
    const auto lam_sq = minimal_canon(square_complete(a)).ell;

    NormalizedCover c;
    c.lambda_sq.resize(s);
    const auto mn = *std::min_element(lam_sq.begin(), lam_sq.begin() + static_cast<long>(s));
    for (std::size_t i = 0; i < s; ++i) c.lambda_sq[i] = lam_sq[i] - mn;
    const auto mx = *std::max_element(c.lambda_sq.begin(), c.lambda_sq.end());
    c.alpha.resize(s);
    for (std::size_t i = 0; i < s; ++i) c.alpha[i] = mx - c.lambda_sq[i];
    c.beta.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        OrderValue best = OrderValue::neg_inf();
        for (std::size_t i = 0; i < s; ++i) best = max(best, a.at(i, j) - c.alpha[i]);
        if (best.is_neg_inf())
            throw InvalidArgument("variable x" + std::to_string(j + 1) +
                                  " appears in no equation");
        c.beta[j] = best.value();
    }
    return c;
}

TruncatedJacobian truncated_jacobian(const std::vector<DiffPoly>& system, const SystemProfile& p,
                                     const std::vector<std::int64_t>& alpha,
                                     const std::vector<std::int64_t>& beta) {
    if (system.size() != p.s) throw DimensionError("system/profile size mismatch");
    if (alpha.size() != p.s || beta.size() != p.n) throw DimensionError("cover size mismatch");
    TruncatedJacobian tj;
    tj.s = p.s;
    tj.n = p.n;
    tj.cover.alpha = alpha;
    tj.cover.beta = beta;
    for (std::size_t i = 0; i < p.s; ++i)
        for (std::size_t j = 0; j < p.n; ++j) {
            const auto ov = p.order_matrix.at(i, j);
            if (ov.is_finite() && ov.value() > alpha[i] + beta[j])
                throw NotACover("alpha, beta do not cover the order matrix");
            if (!ov.is_finite() || ov.value() != alpha[i] + beta[j]) continue;
            tj.support.push_back({i, j});
            tj.entries[{i, j}] =
                system[i].partial({static_cast<int>(j + 1), static_cast<int>(ov.value())});
        }
    return tj;
}

TruncatedJacobian truncated_jacobian(const std::vector<DiffPoly>& system,
                                     const SystemProfile& p) {
    const auto cover = system_cover(p);
    auto tj = truncated_jacobian(system, p, cover.alpha, cover.beta);
    tj.cover = cover;
    return tj;
}

namespace {

// Rank of an s x n matrix mod p by Gaussian elimination.
std::size_t rank_mod(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        const std::uint64_t inv = modarith::inv(m[rank][c], p);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            const std::uint64_t f = modarith::mul(m[r][c], inv, p);
            for (std::size_t k = c; k < cols; ++k)
                m[r][k] = modarith::sub(m[r][k], modarith::mul(f, m[rank][k], p), p);
        }
        ++rank;
    }
    return rank;
}

// Symbolic determinant by expansion over the first row; meant for <= 5 x 5.
DiffPoly det_by_minors(const TruncatedJacobian& tj, std::vector<std::size_t> rows,
                       std::vector<std::size_t> cols) {
    if (rows.empty()) return DiffPoly::constant(1);
    DiffPoly det;
    const auto r0 = rows.front();
    const std::vector<std::size_t> rest(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const auto it = tj.entries.find({r0, cols[k]});
        if (it == tj.entries.end() || it->second.is_zero()) continue;
        auto sub = cols;
        sub.erase(sub.begin() + static_cast<long>(k));
        DiffPoly contrib = it->second * det_by_minors(tj, rest, sub);
        det = (k % 2 == 0) ? det + contrib : det - contrib;
    }
    return det;
}

bool symbolic_nonzero(const TruncatedJacobian& tj) {
    std::vector<std::size_t> rows(tj.s), cols(tj.n);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    if (tj.s == tj.n) return !det_by_minors(tj, rows, cols).is_zero();
    // Rectangular: some maximal minor must be non-zero.
    const bool wide = tj.n > tj.s;
    const std::size_t big = wide ? tj.n : tj.s, small = wide ? tj.s : tj.n;
    std::vector<std::size_t> comb(small);
    std::iota(comb.begin(), comb.end(), 0);
    for (;;) {
        const auto& sel_rows = wide ? rows : comb;
        const auto& sel_cols = wide ? comb : cols;
        if (!det_by_minors(tj, {sel_rows.begin(), sel_rows.begin() + static_cast<long>(small)},
                           {sel_cols.begin(), sel_cols.begin() + static_cast<long>(small)})
                 .is_zero())
            return true;
        std::size_t t = small;
        bool more = false;
        while (t > 0) {
            --t;
            if (comb[t] != big - small + t) {
                ++comb[t];
                for (std::size_t u = t + 1; u < small; ++u) comb[u] = comb[u - 1] + 1;
                more = true;
                break;
            }
        }
        if (!more) return false;
    }
}

} // namespace

NablaReport nabla_nonzero(const TruncatedJacobian& tj, int trials, std::uint64_t prime,
                          std::uint64_t seed) {
    if (trials < 1) throw InvalidArgument("trials must be positive");
    NablaReport rep;
    rep.prime = prime;
    std::set<DerivVar> vars;
    for (const auto& [key, p] : tj.entries)
        for (auto v : p.variables()) vars.insert(v);

    // Schwartz-Zippel degree bound of the determinant polynomial.
    std::int64_t deg_bound = 0;
    for (std::size_t i = 0; i < tj.s; ++i) {
        int row_deg = 0;
        for (std::size_t j = 0; j < tj.n; ++j) {
            const auto it = tj.entries.find({i, j});
            if (it != tj.entries.end()) row_deg = std::max(row_deg, it->second.total_degree());
        }
        deg_bound += row_deg;
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, prime - 1);
    const std::size_t want = std::min(tj.s, tj.n);
    auto one_trial = [&](std::map<DerivVar, std::uint64_t>& point) {
        point.clear();
        for (auto v : vars) point[v] = dist(rng);
        std::vector<std::vector<std::uint64_t>> m(tj.s,
                                                  std::vector<std::uint64_t>(tj.n, 0));
        for (const auto& [key, p] : tj.entries)
            m[key.first][key.second] = p.eval_mod(point, prime);
        return rank_mod(std::move(m), prime) == want;
    };

    std::map<DerivVar, std::uint64_t> point;
    for (int t = 1; t <= trials; ++t) {
        rep.trials = t;
        if (one_trial(point)) {
            rep.status = NablaReport::Status::nonzero_witness;
            rep.witness_point = point;
            return rep;
        }
    }
    if (std::min(tj.s, tj.n) <= 5) {
        if (!symbolic_nonzero(tj)) {
            rep.status = NablaReport::Status::certainly_zero;
            return rep;
        }
        // Symbolically non-zero but every sample vanished: keep sampling for a
        // witness point.
        for (int t = 0; t < 200; ++t) {
            ++rep.trials;
            if (one_trial(point)) {
                rep.status = NablaReport::Status::nonzero_witness;
                rep.witness_point = point;
                return rep;
            }
        }
    }
    rep.status = NablaReport::Status::probably_zero;
    double r = 1.0;
    for (int t = 0; t < rep.trials; ++t)
        r *= static_cast<double>(deg_bound) / static_cast<double>(prime);
    rep.failure_bound = r;
    return rep;
}

ReductionPlan reduction_plan(const SystemProfile& p) {
    if (p.s > p.n)
        throw DimensionError("reduction plans require at most as many equations as variables");
    ReductionPlan plan;
    plan.jacobi_order = jacobi_bound(p);
    if (plan.jacobi_order.is_neg_inf()) throw InfeasibleCanon("Jacobi bound is -inf");
    plan.lambda = minimal_canon(p.order_matrix);
    plan.cover = system_cover(p);
    const auto mx = *std::max_element(plan.cover.alpha.begin(), plan.cover.alpha.end());
    for (std::int64_t k = 0; k <= mx; ++k) {
        std::vector<std::size_t> fk;
        for (std::size_t i = 0; i < p.s; ++i)
            if (plan.cover.alpha[i] <= k) fk.push_back(i);
        plan.stages.push_back(std::move(fk));
    }
    return plan;
}

namespace {

struct ColumnLayout {
    std::vector<std::int64_t> r;               // per variable: max order (>= 0)
    std::vector<std::pair<int, int>> var_map;  // column -> (variable 1-based, order)
    std::vector<std::size_t> col_of_base;      // index of column (j, 0) per variable
    std::size_t cols = 0;

    std::size_t col(std::size_t j, std::int64_t k) const {
        // Columns of variable j run k = r_j - 1, ..., 0.
        return col_of_base[j] - static_cast<std::size_t>(k);
    }
};

ColumnLayout column_layout(const OrderMatrix& a) {
    const std::size_t n = a.cols();
    ColumnLayout lay;
    lay.r.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        OrderValue m = OrderValue::neg_inf();
        for (std::size_t i = 0; i < a.rows(); ++i) m = max(m, a.at(i, j));
        if (m.is_finite() && m.value() < 0)
            throw InvalidArgument("first-order reduction needs non-negative orders");
        lay.r[j] = m.is_finite() ? m.value() : 0;
    }
    lay.col_of_base.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::int64_t top = lay.r[j] > 0 ? lay.r[j] - 1 : 0;
        for (std::int64_t k = top; k >= 0; --k)
            lay.var_map.push_back({static_cast<int>(j + 1), static_cast<int>(k)});
        lay.col_of_base[j] = lay.var_map.size() - 1;
    }
    lay.cols = lay.var_map.size();
    return lay;
}

// The W_{j,k} rows shared by both reduction variants: u_{j,k} - u'_{j,k-1}.
void append_w_rows(const ColumnLayout& lay, OrderMatrix& b, std::size_t first_row) {
    std::size_t row = first_row;
    for (std::size_t j = 0; j < lay.r.size(); ++j)
        for (std::int64_t k = lay.r[j] - 1; k >= 1; --k) {
            b.at(row, lay.col(j, k)) = OrderValue(0);
            b.at(row, lay.col(j, k - 1)) = OrderValue(1);
            ++row;
        }
}

std::size_t w_row_count(const ColumnLayout& lay) {
    std::size_t c = 0;
    for (auto r : lay.r) c += static_cast<std::size_t>(std::max<std::int64_t>(r - 1, 0));
    return c;
}

} // namespace

FirstOrderReduction first_order_reduce(const SystemProfile& p) {
    if (p.s != p.n) throw DimensionError("first-order reduction requires a square system");
    const auto& a = p.order_matrix;
    const auto lay = column_layout(a);
    const std::size_t rows = p.s + w_row_count(lay);
    OrderMatrix b(rows, lay.cols);
    for (std::size_t i = 0; i < p.s; ++i)
        for (std::size_t j = 0; j < p.n; ++j) {
            const auto ov = a.at(i, j);
            if (!ov.is_finite()) continue;
            const std::int64_t aij = ov.value();
            if (lay.r[j] == 0) {
                b.at(i, lay.col(j, 0)) = OrderValue(aij); // order-0 variable kept as is
                continue;
            }
            // Dense support: every derivative up to a(i,j) appears.
            for (std::int64_t k = 0; k <= std::min(aij, lay.r[j] - 1); ++k)
                b.at(i, lay.col(j, k)) = OrderValue(0);
            if (aij == lay.r[j]) b.at(i, lay.col(j, lay.r[j] - 1)) = OrderValue(1);
        }
    append_w_rows(lay, b, p.s);
    return {std::move(b), lay.var_map};
}

FirstOrderReduction first_order_reduce(const std::vector<DiffPoly>& system) {
    const auto p = profile(system, BoundMode::strong);
    if (p.s != p.n) throw DimensionError("first-order reduction requires a square system");
    const auto lay = column_layout(p.order_matrix);
    const std::size_t rows = p.s + w_row_count(lay);
    OrderMatrix b(rows, lay.cols);
    for (std::size_t i = 0; i < p.s; ++i) {
        // Substitute u_{j,k} for x_j^(k) and u'_{j,r_j-1} for x_j^(r_j).
        DiffPoly q;
        for (const auto& [m, c] : system[i].terms()) {
            Monomial nm = Monomial::one();
            for (const auto& [v, e] : m.factors()) {
                const std::size_t j = static_cast<std::size_t>(v.var - 1);
                DerivVar sub{0, 0};
                if (lay.r[j] == 0 || v.order < lay.r[j])
                    sub = {static_cast<int>(lay.col(j, v.order) + 1), 0};
                else
                    sub = {static_cast<int>(lay.col(j, lay.r[j] - 1) + 1), 1};
                nm = nm * Monomial::var(sub, e);
            }
            q.add_term(nm, c);
        }
        for (std::size_t col = 0; col < lay.cols; ++col)
            b.at(i, col) = q.order_in(static_cast<int>(col + 1));
    }
    append_w_rows(lay, b, p.s);
    return {std::move(b), lay.var_map};
}

namespace {

// Tarjan strongly connected components of the row digraph, deterministic.
struct Scc {
    const std::vector<std::vector<std::size_t>>& adj;
    std::vector<int> index, low, comp;
    std::vector<std::uint8_t> onstack;
    std::vector<std::size_t> stack;
    int counter = 0, ncomp = 0;

    explicit Scc(const std::vector<std::vector<std::size_t>>& a)
        : adj(a), index(a.size(), -1), low(a.size(), 0), comp(a.size(), -1),
          onstack(a.size(), 0) {
        for (std::size_t v = 0; v < a.size(); ++v)
            if (index[v] < 0) dfs(v);
    }

    void dfs(std::size_t v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        onstack[v] = 1;
        for (auto w : adj[v]) {
            if (index[w] < 0) {
                dfs(w);
                low[v] = std::min(low[v], low[w]);
            } else if (onstack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            for (;;) {
                const auto w = stack.back();
                stack.pop_back();
                onstack[w] = 0;
                comp[w] = ncomp;
                if (w == v) break;
            }
            ++ncomp;
        }
    }
};

} // namespace

std::vector<Block> block_decompose(const SystemProfile& p, BlockMode mode) {
    if (p.s != p.n) throw DimensionError("block decomposition requires a square system");
    const auto& a = p.order_matrix;
    const std::size_t n = p.n;

    if (mode == BlockMode::diagonal) {
        // Connected components of the bipartite dependency graph.
        std::vector<std::size_t> parent(2 * n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (a.at(i, j).is_finite()) parent[find(i)] = find(n + j);
        std::map<std::size_t, Block> comps;
        for (std::size_t i = 0; i < n; ++i) comps[find(i)].rows.push_back(i);
        for (std::size_t j = 0; j < n; ++j) comps[find(n + j)].cols.push_back(j);
        std::vector<Block> out;
        for (auto& [root, blk] : comps)
            if (!blk.rows.empty() || !blk.cols.empty()) out.push_back(std::move(blk));
        std::sort(out.begin(), out.end(), [](const Block& x, const Block& y) {
            const auto kx = x.rows.empty() ? x.cols.front() + 1000000 : x.rows.front();
            const auto ky = y.rows.empty() ? y.cols.front() + 1000000 : y.rows.front();
            return kx < ky;
        });
        return out;
    }

    const auto mr = detail::max_matching(detail::FinitePattern{a});
    if (mr.size < n) throw InfeasibleCanon("no full transversal of finite entries");
    const auto& sigma = mr.matching;
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto c = static_cast<std::size_t>(sigma[i]);
        for (std::size_t i2 = 0; i2 < n; ++i2)
            if (i2 != i && a.at(i2, c).is_finite()) adj[i].push_back(i2);
    }
    Scc scc(adj);
    const std::size_t nc = static_cast<std::size_t>(scc.ncomp);
    std::vector<std::vector<std::size_t>> cadj(nc);
    std::vector<std::size_t> indeg(nc, 0);
    for (std::size_t v = 0; v < n; ++v)
        for (auto w : adj[v])
            if (scc.comp[v] != scc.comp[w]) cadj[scc.comp[v]].push_back(scc.comp[w]);
    for (auto& lst : cadj) {
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
        for (auto w : lst) ++indeg[w];
    }
    std::vector<std::vector<std::size_t>> comp_rows(nc);
    for (std::size_t v = 0; v < n; ++v) comp_rows[scc.comp[v]].push_back(v);
    // Kahn with smallest-leading-row tie-break for deterministic output.
    auto cmp = [&](std::size_t x, std::size_t y) {
        return comp_rows[x].front() > comp_rows[y].front();
    };
    std::vector<std::size_t> heap;
    for (std::size_t c = 0; c < nc; ++c)
        if (indeg[c] == 0) heap.push_back(c);
    std::make_heap(heap.begin(), heap.end(), cmp);
    std::vector<Block> out;
    while (!heap.empty()) {
        std::pop_heap(heap.begin(), heap.end(), cmp);
        const auto c = heap.back();
        heap.pop_back();
        Block blk;
        blk.rows = comp_rows[c];
        for (auto i : blk.rows) blk.cols.push_back(static_cast<std::size_t>(sigma[i]));
        std::sort(blk.cols.begin(), blk.cols.end());
        out.push_back(std::move(blk));
        for (auto w : cadj[c])
            if (--indeg[w] == 0) {
                heap.push_back(w);
                std::push_heap(heap.begin(), heap.end(), cmp);
            }
    }
    return out;
}

Canon ordering_change_bound(const SystemProfile& p, const std::vector<std::int64_t>& e,
                            const std::vector<std::int64_t>& f) {
    if (p.s != p.n) throw DimensionError("ordering-change bounds require a square system");
    const auto& a = p.order_matrix;
    const std::size_t n = p.n;
    if (e.size() != n || f.size() != n) throw DimensionError("order vector size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (!a.at(i, i).is_finite() || a.at(i, i).value() != e[i])
            throw InvalidArgument("e must equal the diagonal (main-variable) orders");
        if (f[i] < 0) throw InvalidArgument("target orders must be non-negative");
    }
    std::vector<std::int64_t> ell(n);
    for (std::size_t i = 0; i < n; ++i) ell[i] = std::max<std::int64_t>(f[i] - e[i], 0);
    // Minimal diagonal-prescribed canon above the lower bounds, by synchronous
    // sweeps; stabilizes within n sweeps iff such a canon exists.
    for (std::size_t sweep = 0; sweep <= n; ++sweep) {
        bool changed = false;
        auto next = ell;
        for (std::size_t j = 0; j < n; ++j) {
            OrderValue cm = OrderValue::neg_inf();
            for (std::size_t i = 0; i < n; ++i) cm = max(cm, a.at(i, j) + OrderValue(ell[i]));
            const std::int64_t need = cm.value() - a.at(j, j).value();
            if (need > next[j]) {
                next[j] = need;
                changed = true;
            }
        }
        if (!changed) return Canon{std::move(ell)};
        ell = std::move(next);
    }
    throw NoSuchCanon("no canon keeps the diagonal maximal above the requested bounds");
}

ResolventBounds resolvent_bounds(const SystemProfile& p, std::size_t j0, std::int64_t d) {
    if (p.s != p.n) throw DimensionError("resolvent bounds require a square system");
    const std::size_t n = p.n;
    if (j0 >= n) throw InvalidArgument("pivot out of range");
    if (d < 0) throw InvalidArgument("D must be non-negative");
    const auto& a = p.order_matrix;
    const auto det = tropdet(a);
    if (det.value.is_neg_inf()) throw InfeasibleCanon("Jacobi bound is -inf");

    // Permute rows so that the diagonal realizes the maximal transversal sum.
    std::vector<std::size_t> perm(n); // B row r holds equation perm[r]
    for (std::size_t i = 0; i < n; ++i) perm[static_cast<std::size_t>(det.witness[i])] = i;
    OrderMatrix b(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) b.at(r, k) = a.at(perm[r], k);

    auto constrained = [&](std::int64_t dd) {
        std::vector<std::int64_t> c(n, 0);
        c[j0] = std::max<std::int64_t>(0, det.value.value() + dd - b.at(j0, j0).value());
        return constrained_canon(b, c);
    };

    const auto ell_user = constrained(d);
    const auto mxv = a.max_entry();
    const std::int64_t dbig =
        (static_cast<std::int64_t>(n) - 1) * std::max<std::int64_t>(0, mxv.value()) + 1;
    const auto ell_big = constrained(dbig);

    // Rows with a path to row j0 in the large-D canon (diagonal starred).
    std::vector<std::uint8_t> reach(n, 0);
    std::deque<std::size_t> q{j0};
    reach[j0] = 1;
    auto val = [&](std::size_t i, std::size_t j) {
        return b.at(i, j) + OrderValue(ell_big.ell[i]);
    };
    while (!q.empty()) {
        const auto f = q.front();
        q.pop_front();
        for (std::size_t x = 0; x < n; ++x)
            if (!reach[x] && b.at(f, x).is_finite() && val(f, x) == val(x, x)) {
                reach[x] = 1; // elementary path x -> f
                q.push_back(x);
            }
    }

    ResolventBounds rb;
    rb.pivot = j0;
    rb.per_row.assign(n, OrderValue::neg_inf());
    rb.ell.ell.assign(n, 0);
    const OrderValue o_pivot = subdet(b, {j0}, {j0});
    assert(o_pivot == det.value - b.at(j0, j0).value());
    std::vector<std::size_t> unreachable_rows;
    for (std::size_t r = 0; r < n; ++r) {
        rb.ell.ell[perm[r]] = ell_user.ell[r];
        if (reach[r]) {
            rb.per_row[perm[r]] = o_pivot + OrderValue(ell_big.ell[r] - ell_big.ell[j0]);
            rb.reachable.push_back(perm[r]);
        } else {
            rb.per_row[perm[r]] = subdet(b, {r}, {j0});
            rb.unreachable.push_back(perm[r]);
            unreachable_rows.push_back(r);
        }
    }
    std::sort(rb.reachable.begin(), rb.reachable.end());
    std::sort(rb.unreachable.begin(), rb.unreachable.end());
    std::vector<std::size_t> reach_rows;
    for (std::size_t r = 0; r < n; ++r)
        if (reach[r]) reach_rows.push_back(r);
    rb.unreachable_tropdet = subdet(b, reach_rows, reach_rows);
    return rb;
}

bool resolvent_identity_check(const OrderMatrix& a, std::size_t j0) {
    if (a.rows() != a.cols()) throw DimensionError("square matrix required");
    const std::size_t n = a.rows();
    if (j0 >= n) throw InvalidArgument("pivot out of range");
    std::vector<OrderValue> minors(n);
    for (std::size_t i = 0; i < n; ++i) minors[i] = subdet(a, {i}, {j0});
    OrderValue lhs(0);
    for (std::size_t i = 0; i < n; ++i) lhs += minors[i];
    OrderValue rhs(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (j == j0) continue;
        OrderValue best = OrderValue::neg_inf();
        for (std::size_t i = 0; i < n; ++i) best = max(best, minors[i] + a.at(i, j));
        rhs += best;
    }
    return lhs == rhs;
}

} // namespace tropcanon
