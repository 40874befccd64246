#include "tropcanon/graph.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <queue>

#include "tropcanon/tropdet.hpp"

namespace tropcanon {

namespace {

void check_square_diag_finite(const OrderMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("square matrix required");
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (!a.at(i, i).is_finite()) throw InvalidArgument("diagonal entry is -inf");
}

} // namespace

WeightedDigraph canon_to_graph(const OrderMatrix& a, const Canon& ell) {
    check_square_diag_finite(a);
    const std::size_t n = a.rows();
    if (ell.ell.size() != n) throw DimensionError("canon size mismatch");
    for (auto v : ell.ell)
        if (v < 0) throw InvalidArgument("canon increments must be non-negative");
    // The diagonal must be column-maximal in A + ell.
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            if (a.at(i, j).is_finite() &&
                a.at(i, j).value() + ell.ell[i] > a.at(j, j).value() + ell.ell[j])
                throw InvalidArgument("diagonal is not a maximal transversal family of the canon");

    WeightedDigraph g;
    g.n = n;
    for (std::size_t i = 0; i < n; ++i) {
        g.edges.push_back({i + 1, 0, ell.ell[i]});
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || !a.at(j, i).is_finite()) continue;
            const std::int64_t w =
                a.at(i, i).value() + ell.ell[i] - a.at(j, i).value() - ell.ell[j];
            assert(w >= 0);
            g.edges.push_back({i + 1, j + 1, w});
        }
    }
    return g;
}

WeightedDigraph matrix_to_graph(const OrderMatrix& a) {
    check_square_diag_finite(a);
    const std::size_t n = a.rows();
    WeightedDigraph g;
    g.n = n;
    for (std::size_t i = 0; i < n; ++i) {
        g.edges.push_back({i + 1, 0, 0});
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || !a.at(j, i).is_finite()) continue;
            g.edges.push_back({i + 1, j + 1, a.at(i, i).value() - a.at(j, i).value()});
        }
    }
    return g;
}

namespace {

std::int64_t scale_constant(const WeightedDigraph& g) {
    std::int64_t m = 0;
    for (const auto& e : g.edges) m = std::max(m, std::abs(e.weight));
    return 2 * m; // max(0, 2 max|w|)
}

void check_graph(const WeightedDigraph& g) {
    for (const auto& e : g.edges) {
        if (e.from > g.n || e.to > g.n) throw InvalidArgument("edge endpoint out of range");
        if (e.from == 0) throw InvalidArgument("vertex 0 is a pure sink");
        if (e.from == e.to) throw InvalidArgument("self-loops are not allowed");
    }
}

} // namespace

std::pair<OrderMatrix, Canon> graph_to_canon_matrix(const WeightedDigraph& g) {
    check_graph(g);
    const std::size_t n = g.n;
    if (n == 0) throw DimensionError("graph has no non-sink vertex");
    Canon ell;
    ell.ell.assign(n, -1);
    const std::int64_t c = scale_constant(g);
    OrderMatrix a(n, n, OrderValue::neg_inf());
    for (std::size_t i = 0; i < n; ++i) a.at(i, i) = OrderValue(c);
    for (const auto& e : g.edges) {
        if (e.weight < 0) throw InvalidArgument("canon graphs carry non-negative weights");
        if (e.to == 0) ell.ell[e.from - 1] = e.weight;
    }
    for (auto v : ell.ell)
        if (v < 0) throw InvalidArgument("every vertex needs a sink edge");
    for (const auto& e : g.edges)
        if (e.to != 0)
            a.at(e.to - 1, e.from - 1) =
                OrderValue(c - e.weight + ell.ell[e.from - 1] - ell.ell[e.to - 1]);
    return {a, ell};
}

OrderMatrix graph_to_matrix(const WeightedDigraph& g) {
    check_graph(g);
    const std::size_t n = g.n;
    if (n == 0) throw DimensionError("graph has no non-sink vertex");
    const std::int64_t c = scale_constant(g);
    OrderMatrix a(n, n, OrderValue::neg_inf());
    for (std::size_t i = 0; i < n; ++i) a.at(i, i) = OrderValue(c);
    for (const auto& e : g.edges)
        if (e.to != 0) a.at(e.to - 1, e.from - 1) = OrderValue(c - e.weight);
    return a;
}

ShortestPaths shortest_paths(const WeightedDigraph& g, std::size_t target) {
    check_graph(g);
    if (target > g.n) throw InvalidArgument("target out of range");
    const std::size_t nv = g.n + 1;
    // Work on the reversed graph from `target`.
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> radj(nv);
    bool nonneg = true;
    for (const auto& e : g.edges) {
        radj[e.to].push_back({e.from, e.weight});
        if (e.weight < 0) nonneg = false;
    }

    ShortestPaths sp;
    sp.dist.assign(nv, std::nullopt);
    if (nonneg) {
        using Item = std::pair<std::int64_t, std::size_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        sp.dist[target] = 0;
        pq.push({0, target});
        while (!pq.empty()) {
            auto [d, u] = pq.top();
            pq.pop();
            if (!sp.dist[u] || *sp.dist[u] != d) continue;
            for (auto [v, w] : radj[u])
                if (!sp.dist[v] || *sp.dist[v] > d + w) {
                    sp.dist[v] = d + w;
                    pq.push({d + w, v});
                }
        }
        return sp;
    }

    // Bellman-Ford with a witness cycle on detection.
    std::vector<std::ptrdiff_t> pred(nv, -1);
    sp.dist[target] = 0;
    std::size_t relaxed_at = nv;
    for (std::size_t round = 0; round < nv; ++round) {
        bool any = false;
        for (std::size_t u = 0; u < nv; ++u) {
            if (!sp.dist[u]) continue;
            for (auto [v, w] : radj[u])
                if (!sp.dist[v] || *sp.dist[v] > *sp.dist[u] + w) {
                    sp.dist[v] = *sp.dist[u] + w;
                    pred[v] = static_cast<std::ptrdiff_t>(u);
                    any = true;
                    relaxed_at = v;
                }
        }
        if (!any) return sp;
        if (round + 1 == nv) {
            // A relaxation in round nv: walk predecessors into the cycle.
            sp.negative_cycle = true;
            std::size_t v = relaxed_at;
            for (std::size_t k = 0; k < nv; ++k) v = static_cast<std::size_t>(pred[v]);
            std::vector<std::size_t> cyc{v};
            for (std::size_t u = static_cast<std::size_t>(pred[v]); u != v;
                 u = static_cast<std::size_t>(pred[u]))
                cyc.push_back(u);
            // pred chains run opposite to the original edge direction.
            sp.cycle.assign(cyc.begin(), cyc.end());
            sp.dist.clear();
            return sp;
        }
    }
    return sp;
}

bool graph_roundtrip_check(const OrderMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("square matrix required");
    const auto det = tropdet(a);
    if (det.value.is_neg_inf()) throw InfeasibleCanon("tropical determinant is -inf");
    // Permute rows so the diagonal is the witness family.
    const std::size_t n = a.rows();
    OrderMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto j = static_cast<std::size_t>(det.witness[i]);
        for (std::size_t k = 0; k < n; ++k) b.at(j, k) = a.at(i, k);
    }
    const auto lam = minimal_canon(b);
    const auto sp = shortest_paths(matrix_to_graph(b), 0);
    if (sp.negative_cycle) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (!sp.dist[i + 1]) return false;
        if (*sp.dist[i + 1] != -lam.ell[i]) return false;
    }
    return true;
}

} // namespace tropcanon
