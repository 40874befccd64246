#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "tropcanon/graph.hpp"
#include "tropcanon/matrix_io.hpp"
#include "tropcanon/tropdet.hpp"

using namespace tropcanon;

namespace {

const OrderValue NI = OrderValue::neg_inf();

OrderMatrix mat(const std::vector<std::vector<OrderValue>>& rows) {
    return OrderMatrix::from_rows(rows);
}

OrderMatrix ex122() { return mat({{2, NI, NI}, {0, 2, NI}, {NI, 0, 2}}); }

OrderMatrix to_diagonal_witness(const OrderMatrix& a) {
    const auto w = tropdet(a).witness;
    OrderMatrix d(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            d.at(static_cast<std::size_t>(w[i]), k) = a.at(i, k);
    return d;
}

// Exhaustive single-target distances for small graphs without cycles reached,
// by depth-first enumeration of simple paths.
std::optional<std::int64_t> dist_bruteforce(const WeightedDigraph& g, std::size_t from,
                                            std::size_t target) {
    std::optional<std::int64_t> best;
    std::vector<std::uint8_t> onpath(g.n + 1, 0);
    auto rec = [&](auto&& self, std::size_t v, std::int64_t acc) -> void {
        if (v == target) {
            if (!best || acc < *best) best = acc;
            return;
        }
        onpath[v] = 1;
        for (const auto& e : g.edges)
            if (e.from == v && !onpath[e.to]) self(self, e.to, acc + e.weight);
        onpath[v] = 0;
    };
    rec(rec, from, 0);
    return best;
}

} // namespace

TEST_CASE("canon_to_graph: shortest paths measure the excess over the minimal canon") {
    const auto a = ex122();
    const Canon ell{{0, 2, 4}};
    const auto g = canon_to_graph(a, ell);
    for (const auto& e : g.edges) CHECK(e.weight >= 0);
    const auto sp = shortest_paths(g, 0);
    REQUIRE(!sp.negative_cycle);
    CHECK(*sp.dist[1] == 0);
    CHECK(*sp.dist[2] == 2);
    CHECK(*sp.dist[3] == 4); // ell_i - lambda_i with lambda = 0

    // With the minimal canon every distance is zero.
    const auto g0 = canon_to_graph(a, Canon{{0, 0, 0}});
    const auto sp0 = shortest_paths(g0, 0);
    for (std::size_t i = 1; i <= 3; ++i) CHECK(*sp0.dist[i] == 0);

    CHECK_THROWS_AS(canon_to_graph(mat({{0, 5}, {0, 0}}), Canon{{0, 0}}), InvalidArgument);
}

TEST_CASE("canon_to_graph: random instances verify dist = ell - lambda") {
    std::mt19937_64 rng(79);
    std::uniform_int_distribution<std::int64_t> off(0, 5);
    for (int t = 0; t < 80; ++t) {
        const auto d = to_diagonal_witness(oracle::random_feasible_matrix(rng, 5, 5, 0, 9, 20));
        std::vector<std::int64_t> c(5);
        for (auto& v : c) v = off(rng);
        const auto ell = constrained_canon(d, c);
        const auto lam = minimal_canon(d);
        const auto sp = shortest_paths(canon_to_graph(d, ell), 0);
        REQUIRE(!sp.negative_cycle);
        for (std::size_t i = 0; i < 5; ++i)
            CHECK(*sp.dist[i + 1] == ell.ell[i] - lam.ell[i]);
    }
}

TEST_CASE("matrix_to_graph: negative cycles flag non-maximal diagonals") {
    // Diagonal dominant: all weights non-negative, no cycle.
    const auto dom = mat({{9, 1, 2}, {0, 8, 1}, {3, 0, 9}});
    const auto spd = shortest_paths(matrix_to_graph(dom), 0);
    CHECK(!spd.negative_cycle);

    // Off-diagonal transversal beats the diagonal: a strictly negative cycle.
    const auto bad = mat({{0, 5}, {5, 0}});
    const auto spb = shortest_paths(matrix_to_graph(bad), 0);
    REQUIRE(spb.negative_cycle);
    // The witness cycle must exist in the graph with negative total weight.
    const auto g = matrix_to_graph(bad);
    std::int64_t total = 0;
    for (std::size_t k = 0; k < spb.cycle.size(); ++k) {
        const auto u = spb.cycle[k], v = spb.cycle[(k + 1) % spb.cycle.size()];
        bool found = false;
        for (const auto& e : g.edges)
            if (e.from == u && e.to == v) {
                total += e.weight;
                found = true;
                break;
            }
        CHECK(found);
    }
    CHECK(total < 0);

    const auto sp122 = shortest_paths(matrix_to_graph(ex122()), 0);
    REQUIRE(!sp122.negative_cycle);
    for (std::size_t i = 1; i <= 3; ++i) CHECK(*sp122.dist[i] == 0); // -lambda_i

    // Cycle presence <-> diagonal transversal sum not maximal, on randoms.
    std::mt19937_64 rng(83);
    for (int t = 0; t < 100; ++t) {
        auto a = oracle::random_feasible_matrix(rng, 4, 4, 0, 9, 20);
        for (std::size_t i = 0; i < 4; ++i)
            if (!a.at(i, i).is_finite()) a.at(i, i) = OrderValue(0);
        OrderValue diag(0);
        for (std::size_t i = 0; i < 4; ++i) diag += a.at(i, i);
        const bool diag_maximal = diag == oracle::tropdet_bruteforce(a);
        CHECK(shortest_paths(matrix_to_graph(a), 0).negative_cycle == !diag_maximal);
    }
}

TEST_CASE("shortest_paths: label-setting agrees with enumeration on random DAGs") {
    std::mt19937_64 rng(89);
    std::uniform_int_distribution<std::int64_t> w(0, 9);
    std::uniform_int_distribution<int> pct(0, 99);
    for (int t = 0; t < 60; ++t) {
        WeightedDigraph g;
        g.n = 6;
        for (std::size_t u = 1; u <= 6; ++u)
            for (std::size_t v = 0; v < u; ++v) // edges point downward: acyclic
                if (pct(rng) < 55) g.edges.push_back({u, v, w(rng)});
        const auto sp = shortest_paths(g, 0);
        REQUIRE(!sp.negative_cycle);
        for (std::size_t v = 1; v <= 6; ++v) {
            const auto expect = dist_bruteforce(g, v, 0);
            CHECK(sp.dist[v].has_value() == expect.has_value());
            if (expect) CHECK(*sp.dist[v] == *expect);
        }
        // Negative weights force the label-correcting route; same answers.
        WeightedDigraph gneg = g;
        for (auto& e : gneg.edges) e.weight -= 3;
        const auto spn = shortest_paths(gneg, 0);
        REQUIRE(!spn.negative_cycle);
        for (std::size_t v = 1; v <= 6; ++v) {
            const auto expect = dist_bruteforce(gneg, v, 0);
            if (expect) CHECK(*spn.dist[v] == *expect);
        }
    }
}

TEST_CASE("reverse constructions round-trip the weights") {
    std::mt19937_64 rng(97);
    std::uniform_int_distribution<std::int64_t> w(0, 9);
    std::uniform_int_distribution<int> pct(0, 99);
    for (int t = 0; t < 40; ++t) {
        WeightedDigraph g;
        g.n = 5;
        for (std::size_t u = 1; u <= 5; ++u) {
            g.edges.push_back({u, 0, w(rng)});
            for (std::size_t v = 1; v <= 5; ++v)
                if (u != v && pct(rng) < 40) g.edges.push_back({u, v, w(rng)});
        }
        const auto [a, ell] = graph_to_canon_matrix(g);
        const auto g2 = canon_to_graph(a, ell);
        auto weight_of = [](const WeightedDigraph& gg, std::size_t u, std::size_t v) {
            for (const auto& e : gg.edges)
                if (e.from == u && e.to == v) return std::optional<std::int64_t>(e.weight);
            return std::optional<std::int64_t>();
        };
        for (const auto& e : g.edges) {
            const auto back = weight_of(g2, e.from, e.to);
            REQUIRE(back.has_value());
            CHECK(*back == e.weight);
        }

        // General-weight variant.
        WeightedDigraph h = g;
        for (auto& e : h.edges) e.weight -= 4;
        for (auto& e : h.edges)
            if (e.to == 0) e.weight = 0;
        const auto b = graph_to_matrix(h);
        const auto h2 = matrix_to_graph(b);
        for (const auto& e : h.edges) {
            const auto back = weight_of(h2, e.from, e.to);
            REQUIRE(back.has_value());
            CHECK(*back == e.weight);
        }
    }
}

TEST_CASE("graph edge-list text round-trips") {
    WeightedDigraph g;
    g.n = 3;
    g.edges = {{1, 0, 4}, {2, 1, -3}, {3, 0, 0}, {2, 0, 7}};
    std::ostringstream os;
    write_graph(os, g);
    std::istringstream is(os.str() + "# trailing comment\n");
    const auto back = read_graph(is);
    CHECK(back.n == 3);
    REQUIRE(back.edges.size() == 4);
    CHECK(back.edges[1].weight == -3);
    CHECK(back.edges[1].from == 2);
}

TEST_CASE("graph_roundtrip_check") {
    CHECK(graph_roundtrip_check(mat({{OrderValue(3)}})));
    OrderMatrix rem15(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            rem15.at(i, j) = OrderValue(9 - static_cast<std::int64_t>(i * j));
    CHECK(graph_roundtrip_check(rem15));
    std::mt19937_64 rng(101);
    for (int t = 0; t < 100; ++t)
        CHECK(graph_roundtrip_check(oracle::random_feasible_matrix(rng, 6, 6, 0, 9, 20)));
}
