#include "tropcanon/canon.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>
#include <map>
#include <set>

#include "tropcanon/tropdet.hpp"

namespace tropcanon {

namespace {

constexpr std::int64_t kNoDist = std::numeric_limits<std::int64_t>::max();

// Working state of the canon algorithm: current increments, the matching on
// the is-column-maximal pattern of A + ell, and cached column maxima.
struct CanonEngine {
    const OrderMatrix& a;
    std::size_t s, n;
    std::vector<std::int64_t> ell;
    RowToCol r2c, c2r;
    std::vector<OrderValue> colmax;

    explicit CanonEngine(const OrderMatrix& m)
        : a(m), s(m.rows()), n(m.cols()), ell(s, 0), r2c(s, kUnmatched), c2r(n, kUnmatched),
          colmax(n) {}

    OrderValue val(std::size_t i, std::size_t j) const {
        return a.at(i, j) + OrderValue(ell[i]);
    }

    bool admissible(std::size_t i, std::size_t j) const {
        return a.at(i, j).is_finite() && val(i, j) == colmax[j];
    }

    void recompute_colmax() {
        for (std::size_t j = 0; j < n; ++j) {
            OrderValue m = OrderValue::neg_inf();
            for (std::size_t i = 0; i < s; ++i) m = max(m, val(i, j));
            colmax[j] = m;
        }
    }

    std::size_t matched_count() const {
        std::size_t c = 0;
        for (auto v : r2c)
            if (v != kUnmatched) ++c;
        return c;
    }

    // One multi-source alternating search from all unmatched rows over the
    // admissible pattern; O(s n) whether it augments or proves none exists.
    bool augment_once() {
        std::vector<std::ptrdiff_t> pred(s, -2), via_col(s, kUnmatched);
        std::deque<std::size_t> q;
        for (std::size_t i = 0; i < s; ++i)
            if (r2c[i] == kUnmatched) {
                pred[i] = -1;
                q.push_back(i);
            }
        while (!q.empty()) {
            const std::size_t u = q.front();
            q.pop_front();
            for (std::size_t j = 0; j < n; ++j) {
                if (!admissible(u, j)) continue;
                if (c2r[j] == kUnmatched) {
                    // Flip the alternating path back to its root.
                    std::size_t row = u;
                    std::ptrdiff_t col = static_cast<std::ptrdiff_t>(j);
                    for (;;) {
                        const auto prev_col = via_col[row];
                        r2c[row] = col;
                        c2r[col] = static_cast<std::ptrdiff_t>(row);
                        if (pred[row] == -1) break;
                        col = prev_col;
                        row = static_cast<std::size_t>(pred[row]);
                    }
                    return true;
                }
                const auto v = static_cast<std::size_t>(c2r[j]);
                if (pred[v] == -2) {
                    pred[v] = static_cast<std::ptrdiff_t>(u);
                    via_col[v] = static_cast<std::ptrdiff_t>(j);
                    q.push_back(v);
                }
            }
        }
        return false;
    }

    void extend_matching() {
        while (matched_count() < s && augment_once()) {
        }
    }

    // Rows from which an elementary path leads to an unmatched row
    // (unmatched rows included). Edge i -> i' exists when row i' ties the
    // starred maximum of row i in column r2c[i].
    std::vector<std::uint8_t> third_class() const {
        std::vector<std::uint8_t> third(s, 0);
        std::deque<std::size_t> q;
        for (std::size_t i = 0; i < s; ++i)
            if (r2c[i] == kUnmatched) {
                third[i] = 1;
                q.push_back(i);
            }
        while (!q.empty()) {
            const std::size_t f = q.front();
            q.pop_front();
            for (std::size_t i = 0; i < s; ++i) {
                if (third[i] || r2c[i] == kUnmatched) continue;
                const auto c = static_cast<std::size_t>(r2c[i]);
                if (admissible(f, c)) { // edge i -> f
                    third[i] = 1;
                    q.push_back(i);
                }
            }
        }
        return third;
    }

    // Rows with a column-maximal entry in an unmatched column, closed under
    // elementary paths. pred records the BFS tree.
    void first_class(std::vector<std::uint8_t>& first, std::vector<std::ptrdiff_t>& pred) const {
        first.assign(s, 0);
        pred.assign(s, kUnmatched);
        std::deque<std::size_t> q;
        for (std::size_t i = 0; i < s; ++i) {
            if (r2c[i] == kUnmatched) continue;
            for (std::size_t j = 0; j < n && !first[i]; ++j)
                if (c2r[j] == kUnmatched && admissible(i, j)) {
                    first[i] = 1;
                    q.push_back(i);
                }
        }
        while (!q.empty()) {
            const std::size_t u = q.front();
            q.pop_front();
            const auto c = static_cast<std::size_t>(r2c[u]);
            for (std::size_t v = 0; v < s; ++v) {
                if (first[v] || v == u || !admissible(v, c)) continue;
                first[v] = 1;
                pred[v] = static_cast<std::ptrdiff_t>(u);
                q.push_back(v);
            }
        }
    }

    // Smallest raise of the third-class rows creating a tie at a free-column
    // maximum or at a starred maximum of a non-third row.
    std::int64_t min_raise(const std::vector<std::uint8_t>& third) const {
        std::int64_t d = kNoDist;
        for (std::size_t i = 0; i < s; ++i) {
            if (third[i]) continue;
            const auto c = static_cast<std::size_t>(r2c[i]);
            const std::int64_t star = colmax[c].value();
            for (std::size_t t = 0; t < s; ++t)
                if (third[t] && a.at(t, c).is_finite())
                    d = std::min(d, star - val(t, c).value());
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (c2r[j] != kUnmatched || colmax[j].is_neg_inf()) continue;
            const std::int64_t m = colmax[j].value();
            for (std::size_t t = 0; t < s; ++t)
                if (third[t] && a.at(t, j).is_finite()) d = std::min(d, m - val(t, j).value());
        }
        return d;
    }

    void raise(const std::vector<std::uint8_t>& third, std::int64_t d) {
        for (std::size_t t = 0; t < s; ++t)
            if (third[t]) ell[t] += d;
    }
};

void require_no_empty_row(const OrderMatrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        bool finite = false;
        for (std::size_t j = 0; j < a.cols() && !finite; ++j) finite = a.at(i, j).is_finite();
        if (!finite)
            throw InfeasibleCanon("row " + std::to_string(i + 1) + " has no finite entry");
    }
}

void require_feasible(const OrderMatrix& a) {
    require_no_empty_row(a);
    const auto m = detail::max_matching(detail::FinitePattern{a});
    if (m.size < a.rows())
        throw InfeasibleCanon("no transversal family of finite entries exists");
}

// Preparation step: raise every row until it owns a column-maximal entry.
void prepare(CanonEngine& e) {
    std::vector<OrderValue> cm(e.n, OrderValue::neg_inf());
    for (std::size_t j = 0; j < e.n; ++j)
        for (std::size_t i = 0; i < e.s; ++i) cm[j] = max(cm[j], e.a.at(i, j));
    for (std::size_t i = 0; i < e.s; ++i) {
        std::int64_t best = kNoDist;
        for (std::size_t j = 0; j < e.n; ++j)
            if (e.a.at(i, j).is_finite())
                best = std::min(best, cm[j].value() - e.a.at(i, j).value());
        assert(best != kNoDist);
        e.ell[i] = best;
    }
}

// Improved raising loop: raise until an augmentation becomes possible,
// maintaining the candidate distances incrementally.
void raise_until_augmentable(CanonEngine& e) {
    auto third = e.third_class();
    std::vector<std::size_t> third_rows;
    for (std::size_t i = 0; i < e.s; ++i)
        if (third[i]) third_rows.push_back(i);

    std::vector<std::uint8_t> first;
    std::vector<std::ptrdiff_t> pred;
    e.first_class(first, pred);

    // di[i]: slack from the starred maximum of non-third row i down to the
    // best third-class entry in its column. d0: same toward free-column maxima.
    std::vector<std::int64_t> di(e.s, kNoDist);
    std::int64_t d0 = kNoDist;
    for (std::size_t i = 0; i < e.s; ++i) {
        if (third[i]) continue;
        const auto c = static_cast<std::size_t>(e.r2c[i]);
        const std::int64_t star = e.colmax[c].value();
        for (auto t : third_rows)
            if (e.a.at(t, c).is_finite()) di[i] = std::min(di[i], star - e.val(t, c).value());
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < e.n; ++j)
        if (e.c2r[j] == kUnmatched && e.colmax[j].is_finite()) free_cols.push_back(j);
    for (auto j : free_cols) {
        const std::int64_t m = e.colmax[j].value();
        for (auto t : third_rows)
            if (e.a.at(t, j).is_finite()) d0 = std::min(d0, m - e.val(t, j).value());
    }

    for (;;) {
        std::int64_t d = d0;
        for (std::size_t i = 0; i < e.s; ++i)
            if (!third[i]) d = std::min(d, di[i]);
        if (d == kNoDist)
            throw Error("internal: no raise candidate for a feasible instance");

        if (d > 0) {
            for (auto t : third_rows) e.ell[t] += d;
            for (auto t : third_rows)
                if (e.r2c[t] != kUnmatched) {
                    const auto c = static_cast<std::size_t>(e.r2c[t]);
                    e.colmax[c] = e.colmax[c] + OrderValue(d);
                }
            if (d0 != kNoDist) d0 -= d;
            for (std::size_t i = 0; i < e.s; ++i)
                if (!third[i] && di[i] != kNoDist) di[i] -= d;
        }

        if (d0 == 0) return; // a third-class row ties a free-column maximum
        std::vector<std::size_t> to_move;
        bool hit_first = false;
        for (std::size_t i = 0; i < e.s; ++i) {
            if (third[i] || di[i] != 0) continue;
            if (first[i])
                hit_first = true;
            else
                to_move.push_back(i);
        }
        if (hit_first) return; // a lower row joined the first class
        assert(!to_move.empty());
        for (auto m : to_move) {
            third[m] = 1;
            third_rows.push_back(m);
            di[m] = kNoDist;
            for (std::size_t i = 0; i < e.s; ++i) {
                if (third[i]) continue;
                const auto c = static_cast<std::size_t>(e.r2c[i]);
                if (e.a.at(m, c).is_finite())
                    di[i] = std::min(di[i], e.colmax[c].value() - e.val(m, c).value());
            }
            for (auto j : free_cols)
                if (e.a.at(m, j).is_finite())
                    d0 = std::min(d0, e.colmax[j].value() - e.val(m, j).value());
        }
    }
}

} // namespace

CanonVariant default_canon_variant() {
#ifdef TROPCANON_CANON_ORIGINAL_STEP
    return CanonVariant::original;
#else
    return CanonVariant::improved;
#endif
}

Canon minimal_canon(const OrderMatrix& a, CanonVariant variant) {
    if (a.rows() > a.cols()) return minimal_canon(a.transpose(), variant);
    require_feasible(a);

    CanonEngine e(a);
    prepare(e);
    for (;;) {
        e.recompute_colmax();
        e.extend_matching();
        if (e.matched_count() == e.s) break;
        if (variant == CanonVariant::original) {
            const auto third = e.third_class();
            const std::int64_t d = e.min_raise(third);
            if (d == kNoDist) throw Error("internal: no raise candidate for a feasible instance");
            e.raise(third, d);
        } else {
            raise_until_augmentable(e);
        }
    }
    assert(*std::min_element(e.ell.begin(), e.ell.end()) == 0);
    return Canon{std::move(e.ell)};
}

RowToCol transversal_maxima(const OrderMatrix& a, const Canon& ell) {
    if (ell.ell.size() != a.rows()) throw DimensionError("canon size mismatch");
    if (a.rows() > a.cols()) throw DimensionError("canon requires rows <= cols");
    for (auto v : ell.ell)
        if (v < 0) throw InvalidArgument("canon increments must be non-negative");
    CanonEngine e(a);
    e.ell = ell.ell;
    e.recompute_colmax();
    e.extend_matching();
    if (e.matched_count() != e.s) throw InvalidArgument("not a canon: no full transversal family");
    return e.r2c;
}

bool is_canon(const OrderMatrix& a, const Canon& ell) {
    try {
        transversal_maxima(a, ell);
        return true;
    } catch (const Error&) {
        return false;
    }
}

ClassPartition classify_rows(const OrderMatrix& a, const std::vector<std::int64_t>& ell,
                             const RowToCol& matching) {
    if (ell.size() != a.rows() || matching.size() != a.rows())
        throw DimensionError("size mismatch");
    CanonEngine e(a);
    e.ell = ell;
    e.recompute_colmax();
    e.r2c = matching;
    for (std::size_t i = 0; i < e.s; ++i)
        if (matching[i] != kUnmatched) {
            const auto c = static_cast<std::size_t>(matching[i]);
            if (!e.admissible(i, c))
                throw InvalidArgument("matching entry is not column-maximal");
            e.c2r[c] = static_cast<std::ptrdiff_t>(i);
        }
    ClassPartition p;
    const auto third = e.third_class();
    std::vector<std::uint8_t> first;
    e.first_class(first, p.pred);
    for (std::size_t i = 0; i < e.s; ++i) {
        if (third[i])
            p.third.push_back(i);
        else if (first[i])
            p.first.push_back(i);
        else
            p.second.push_back(i);
    }
    return p;
}

namespace {

// Shared validation for the minimal-canon-from-canon algorithms. These run on
// square matrices: with spare columns, canons can realize their maxima in
// different column sets and a descent along one fixed family may stall.
void check_canon_with_maxima(const OrderMatrix& a, const Canon& ell, const RowToCol& maxima) {
    if (ell.ell.size() != a.rows() || maxima.size() != a.rows())
        throw DimensionError("size mismatch");
    if (a.rows() != a.cols()) throw DimensionError("square matrix required");
    std::vector<std::uint8_t> used(a.cols(), 0);
    CanonEngine e(a);
    for (auto v : ell.ell)
        if (v < 0) throw InvalidArgument("canon increments must be non-negative");
    e.ell = ell.ell;
    e.recompute_colmax();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (maxima[i] == kUnmatched) throw InvalidArgument("maxima must match every row");
        const auto c = static_cast<std::size_t>(maxima[i]);
        if (c >= a.cols() || used[c]) throw InvalidArgument("maxima is not an injection");
        used[c] = 1;
        if (!e.admissible(i, c))
            throw InvalidArgument("input is not a canon with the given transversal maxima");
    }
}

Canon minimize_canon_path_rebuild(const OrderMatrix& a, std::vector<std::int64_t> ell,
                                  const RowToCol& maxima) {
    const std::size_t s = a.rows();
    const auto shift = *std::min_element(ell.begin(), ell.end());
    for (auto& v : ell) v -= shift;
    auto starred_col = [&](std::size_t i) { return static_cast<std::size_t>(maxima[i]); };
    auto val = [&](std::size_t i, std::size_t j) { return a.at(i, j) + OrderValue(ell[i]); };
    for (;;) {
        // L1: rows at zero or with a path to a zero row.
        std::vector<std::uint8_t> in_l1(s, 0);
        std::deque<std::size_t> q;
        for (std::size_t i = 0; i < s; ++i)
            if (ell[i] == 0) {
                in_l1[i] = 1;
                q.push_back(i);
            }
        while (!q.empty()) {
            const auto f = q.front();
            q.pop_front();
            for (std::size_t i = 0; i < s; ++i) {
                if (in_l1[i]) continue;
                const auto c = starred_col(i);
                if (a.at(f, c).is_finite() && val(f, c) == val(i, c)) { // edge i -> f
                    in_l1[i] = 1;
                    q.push_back(i);
                }
            }
        }
        std::int64_t b = kNoDist;
        bool any_l2 = false;
        for (std::size_t i = 0; i < s; ++i) {
            if (in_l1[i]) continue;
            any_l2 = true;
            b = std::min(b, ell[i]);
            const auto c = starred_col(i);
            for (std::size_t i2 = 0; i2 < s; ++i2)
                if (in_l1[i2] && a.at(i2, c).is_finite())
                    b = std::min(b, val(i, c).value() - val(i2, c).value());
        }
        if (!any_l2) return Canon{std::move(ell)};
        assert(b > 0 && b != kNoDist);
        for (std::size_t i = 0; i < s; ++i)
            if (!in_l1[i]) ell[i] -= b;
    }
}

Canon minimize_canon_ordered(const OrderMatrix& a, std::vector<std::int64_t> ell,
                             const RowToCol& maxima) {
    const std::size_t s = a.rows();
    const auto shift = *std::min_element(ell.begin(), ell.end());
    for (auto& v : ell) v -= shift;
    auto starred_col = [&](std::size_t i) { return static_cast<std::size_t>(maxima[i]); };

    // ell0: increments before any round; rows in L2 currently hold
    // ell0[i] - acc. For i in L2, tree[i] keys are
    // a(i, sigma(i)) - a(i2, sigma(i)) - ell_final[i2] over settled rows i2.
    std::vector<std::int64_t> ell0 = ell;
    std::vector<std::multiset<std::int64_t>> tree(s);
    std::vector<std::uint8_t> settled(s, 0);
    std::vector<std::size_t> pending;

    auto key_of = [&](std::size_t i) {
        const std::int64_t own = ell0[i];
        if (tree[i].empty()) return own;
        return std::min(own, *tree[i].begin() + ell0[i]);
    };

    std::vector<std::size_t> l1;
    for (std::size_t i = 0; i < s; ++i) {
        if (ell[i] == 0) {
            settled[i] = 1;
            l1.push_back(i);
        } else {
            pending.push_back(i);
        }
    }
    for (auto i : pending)
        for (auto i2 : l1) {
            const auto c = starred_col(i);
            if (a.at(i2, c).is_finite())
                tree[i].insert(a.at(i, c).value() - a.at(i2, c).value() - ell[i2]);
        }

    using HeapItem = std::pair<std::int64_t, std::size_t>; // (key, row)
    std::multiset<HeapItem> heap;
    for (auto i : pending) heap.insert({key_of(i), i});

    std::int64_t acc = 0;
    std::size_t remaining = pending.size();
    while (remaining > 0) {
        // Pop the valid minimum (lazy deletion).
        auto it = heap.begin();
        while (it != heap.end() && (settled[it->second] || it->first != key_of(it->second))) {
            it = heap.erase(it);
        }
        assert(it != heap.end());
        const std::int64_t kmin = it->first;
        const std::int64_t b = kmin - acc;
        assert(b >= 0);
        acc += b;
        // Settle every row whose slack hit zero.
        std::vector<std::size_t> l3;
        for (auto jt = heap.begin(); jt != heap.end() && jt->first == kmin;) {
            const auto i = jt->second;
            if (!settled[i] && key_of(i) == jt->first) {
                ell[i] = ell0[i] - acc;
                settled[i] = 1;
                l3.push_back(i);
                --remaining;
            }
            jt = heap.erase(jt);
        }
        for (auto m : l3)
            for (std::size_t i = 0; i < s; ++i) {
                if (settled[i]) continue;
                const auto c = starred_col(i);
                if (a.at(m, c).is_finite()) {
                    tree[i].insert(a.at(i, c).value() - a.at(m, c).value() - ell[m]);
                    heap.insert({key_of(i), i});
                }
            }
    }
    return Canon{std::move(ell)};
}

} // namespace

Canon minimize_canon(const OrderMatrix& a, const Canon& ell, const RowToCol& maxima,
                     MinimizeVariant variant) {
    check_canon_with_maxima(a, ell, maxima);
    if (variant == MinimizeVariant::path_rebuild)
        return minimize_canon_path_rebuild(a, ell.ell, maxima);
    return minimize_canon_ordered(a, ell.ell, maxima);
}

namespace {

// Synchronous sweeps raising rows until the required entries are
// column-maximal. Bellman-Ford style: stabilizes within rows() sweeps iff the
// requested canon exists.
Canon sweep_to_canon(const OrderMatrix& a, const RowToCol& maxima,
                     const std::vector<std::pair<std::size_t, std::size_t>>& prescribed,
                     std::vector<std::int64_t> ell, const char* fail_msg, bool prescribed_mode) {
    const std::size_t n = a.rows();
    if (a.rows() != a.cols()) throw DimensionError("square matrix required");
    if (maxima.size() != n) throw DimensionError("maxima size mismatch");
    std::vector<std::uint8_t> used(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (maxima[i] == kUnmatched || static_cast<std::size_t>(maxima[i]) >= n ||
            used[maxima[i]])
            throw InvalidArgument("maxima must be a bijection on rows");
        used[maxima[i]] = 1;
        if (!a.at(i, static_cast<std::size_t>(maxima[i])).is_finite()) {
            if (prescribed_mode) throw NoSuchCanon(fail_msg);
            throw NotMaximalFamily(fail_msg);
        }
    }
    for (const auto& [r, c] : prescribed) {
        if (r >= n || c >= n) throw InvalidArgument("prescribed entry out of range");
        if (!a.at(r, c).is_finite()) throw NoSuchCanon("prescribed entry is -inf");
    }

    for (std::size_t sweep = 0; sweep <= n; ++sweep) {
        std::vector<OrderValue> colmax(n, OrderValue::neg_inf());
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                colmax[j] = max(colmax[j], a.at(i, j) + OrderValue(ell[i]));
        auto next = ell;
        bool changed = false;
        auto lift = [&](std::size_t row, std::size_t col) {
            const std::int64_t need =
                colmax[col].value() - (a.at(row, col).value() + ell[row]);
            if (need > next[row] - ell[row]) {
                next[row] = ell[row] + need;
                changed = true;
            }
        };
        for (std::size_t i = 0; i < n; ++i) lift(i, static_cast<std::size_t>(maxima[i]));
        for (const auto& [r, c] : prescribed) lift(r, c);
        if (!changed) return Canon{std::move(ell)};
        ell = std::move(next);
    }
    if (prescribed_mode) throw NoSuchCanon(fail_msg);
    throw NotMaximalFamily(fail_msg);
}

} // namespace

Canon canon_from_maxima(const OrderMatrix& a, const RowToCol& maxima) {
    return sweep_to_canon(a, maxima, {}, std::vector<std::int64_t>(a.rows(), 0),
                          "transversal family does not realize a maximal sum", false);
}

Canon canon_with_prescribed(const OrderMatrix& a, const RowToCol& maxima,
                            const std::vector<std::pair<std::size_t, std::size_t>>& prescribed) {
    if (prescribed.empty()) return canon_from_maxima(a, maxima);
    return sweep_to_canon(a, maxima, prescribed, std::vector<std::int64_t>(a.rows(), 0),
                          "no canon realizes the prescribed maxima", true);
}

Canon constrained_canon(const OrderMatrix& a, const std::vector<std::int64_t>& lower_bounds) {
    if (lower_bounds.size() != a.rows()) throw DimensionError("lower bound size mismatch");
    for (auto c : lower_bounds)
        if (c < 0) throw InvalidArgument("lower bounds must be non-negative");
    auto lam = minimal_canon(a.add_to_rows(lower_bounds));
    for (std::size_t i = 0; i < lam.ell.size(); ++i) lam.ell[i] += lower_bounds[i];
    return lam;
}

Cover cover_of_canon(const OrderMatrix& a, const Canon& ell) {
    if (a.rows() != a.cols()) throw DimensionError("covers are defined for square matrices");
    transversal_maxima(a, ell); // validates
    const std::size_t n = a.rows();
    const auto big = *std::max_element(ell.ell.begin(), ell.ell.end());
    Cover c;
    c.mu.resize(n);
    c.nu.resize(n);
    for (std::size_t i = 0; i < n; ++i) c.mu[i] = big - ell.ell[i];
    for (std::size_t j = 0; j < n; ++j) {
        OrderValue best = OrderValue::neg_inf();
        for (std::size_t i = 0; i < n; ++i) best = max(best, a.at(i, j) - c.mu[i]);
        c.nu[j] = best.value();
    }
    return c;
}

namespace {

void check_cover(const OrderMatrix& a, const Cover& cover) {
    if (a.rows() != a.cols()) throw DimensionError("covers are defined for square matrices");
    const std::size_t n = a.rows();
    if (cover.mu.size() != n || cover.nu.size() != n) throw DimensionError("cover size mismatch");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (a.at(i, j).is_finite() && a.at(i, j).value() > cover.mu[i] + cover.nu[j])
                throw NotACover("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                ") exceeds mu_i + nu_j");
}

void check_minimal_cover(const OrderMatrix& a, const Cover& cover) {
    check_cover(a, cover);
    const auto det = tropdet(a).value;
    if (det.is_neg_inf()) throw NotMinimalCover("tropical determinant is -inf");
    std::int64_t total = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) total += cover.mu[i] + cover.nu[i];
    if (total != det.value())
        throw NotMinimalCover("cover sum " + std::to_string(total) + " exceeds determinant " +
                              std::to_string(det.value()));
}

} // namespace

Canon canon_of_cover(const OrderMatrix& a, const Cover& cover) {
    check_minimal_cover(a, cover);
    const auto big = *std::max_element(cover.mu.begin(), cover.mu.end());
    Canon ell;
    ell.ell.resize(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) ell.ell[i] = big - cover.mu[i];
    return ell;
}

Cover jacobi_cover(const OrderMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("covers are defined for square matrices");
    return cover_of_canon(a, minimal_canon(a));
}

namespace {

void check_diagonal_maximal(const OrderMatrix& a) {
    OrderValue diag(0);
    for (std::size_t i = 0; i < a.rows(); ++i) diag += a.at(i, i);
    const auto det = tropdet(a).value;
    if (diag.is_neg_inf() || diag != det)
        throw InvalidArgument("diagonal is not a maximal transversal family");
}

// Reflexive-transitive closure of the elementary cover relation from `pivot`.
// transposed = false: x -> y when a(y,x) = mu_y + nu_x;
// transposed = true:  x -> y when a(x,y) = mu_x + nu_y.
std::vector<std::uint8_t> cover_closure(const OrderMatrix& a, const Cover& c, std::size_t pivot,
                                        bool transposed) {
    const std::size_t n = a.rows();
    std::vector<std::uint8_t> in(n, 0);
    std::deque<std::size_t> q{pivot};
    in[pivot] = 1;
    while (!q.empty()) {
        const auto x = q.front();
        q.pop_front();
        for (std::size_t y = 0; y < n; ++y) {
            if (in[y]) continue;
            const OrderValue v = transposed ? a.at(x, y) : a.at(y, x);
            const std::int64_t bound = transposed ? c.mu[x] + c.nu[y] : c.mu[y] + c.nu[x];
            if (v.is_finite() && v.value() == bound) {
                in[y] = 1;
                q.push_back(y);
            }
        }
    }
    return in;
}

std::int64_t shift_bound(const OrderMatrix& a, const Cover& c,
                         const std::vector<std::uint8_t>& in, bool transposed) {
    std::int64_t bound = kNoDist;
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i) {
        if (!in[i]) continue;
        for (std::size_t i2 = 0; i2 < n; ++i2) {
            if (in[i2]) continue;
            const OrderValue v = transposed ? a.at(i, i2) : a.at(i2, i);
            if (v.is_finite()) {
                const std::int64_t slack =
                    transposed ? c.mu[i] + c.nu[i2] - v.value() : c.mu[i2] + c.nu[i] - v.value();
                bound = std::min(bound, slack);
            }
        }
    }
    return bound;
}

Cover apply_shift(Cover c, const std::vector<std::uint8_t>& in, std::int64_t e, bool transposed) {
    for (std::size_t i = 0; i < c.mu.size(); ++i)
        if (in[i]) {
            c.mu[i] += transposed ? -e : e;
            c.nu[i] += transposed ? e : -e;
        }
    return c;
}

} // namespace

Cover cover_shift(const OrderMatrix& a, const Cover& cover, std::size_t pivot_row,
                  std::int64_t amount) {
    check_minimal_cover(a, cover);
    check_diagonal_maximal(a);
    if (pivot_row >= a.rows()) throw InvalidArgument("pivot row out of range");
    if (amount < 0) throw InvalidArgument("shift amount must be non-negative");
    if (amount == 0) return cover;
    const auto in = cover_closure(a, cover, pivot_row, false);
    if (amount > shift_bound(a, cover, in, false))
        throw InvalidArgument("shift amount exceeds the admissible bound");
    return apply_shift(cover, in, amount, false);
}

std::vector<Cover> enumerate_nonneg_minimal_covers(const OrderMatrix& a, std::size_t limit) {
    if (a.rows() != a.cols()) throw DimensionError("covers are defined for square matrices");
    check_diagonal_maximal(a);
    const std::size_t n = a.rows();

    auto nonneg = [](const Cover& c) {
        for (auto v : c.mu)
            if (v < 0) return false;
        for (auto v : c.nu)
            if (v < 0) return false;
        return true;
    };

    std::set<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> seen;
    std::deque<Cover> queue;
    std::vector<Cover> out;
    auto push = [&](const Cover& c) {
        if (!nonneg(c)) return;
        if (seen.insert({c.mu, c.nu}).second) {
            if (seen.size() > limit) throw Error("cover enumeration limit exceeded");
            queue.push_back(c);
            out.push_back(c);
        }
    };

    // Seeds: the canonical cover plus its non-negative translations.
    const auto base = jacobi_cover(a);
    const auto lo = -*std::min_element(base.mu.begin(), base.mu.end());
    const auto hi = *std::min_element(base.nu.begin(), base.nu.end());
    for (std::int64_t g = lo; g <= hi; ++g) {
        Cover c = base;
        for (auto& v : c.mu) v += g;
        for (auto& v : c.nu) v -= g;
        push(c);
    }

    while (!queue.empty()) {
        const Cover c = queue.front();
        queue.pop_front();
        for (int transposed = 0; transposed < 2; ++transposed) {
            for (std::size_t pivot = 0; pivot < n; ++pivot) {
                const auto in = cover_closure(a, c, pivot, transposed != 0);
                std::int64_t cap = shift_bound(a, c, in, transposed != 0);
                // Stay inside the non-negative orthant.
                for (std::size_t i = 0; i < n; ++i)
                    if (in[i]) cap = std::min(cap, transposed ? c.mu[i] : c.nu[i]);
                if (cap == kNoDist) continue;
                for (std::int64_t e = 1; e <= cap; ++e)
                    push(apply_shift(c, in, e, transposed != 0));
            }
        }
    }
    return out;
}

PathRelation path_relation(const OrderMatrix& a) {
    const auto lam = minimal_canon(a);
    const auto sigma = transversal_maxima(a, lam);
    const std::size_t s = a.rows();
    PathRelation rel;
    rel.succ.resize(s);
    auto val = [&](std::size_t i, std::size_t j) { return a.at(i, j) + OrderValue(lam.ell[i]); };
    for (std::size_t i = 0; i < s; ++i) {
        const auto c = static_cast<std::size_t>(sigma[i]);
        for (std::size_t i2 = 0; i2 < s; ++i2)
            if (i2 != i && a.at(i2, c).is_finite() && val(i2, c) == val(i, c))
                rel.succ[i].push_back(i2);
    }
    return rel;
}

} // namespace tropcanon
