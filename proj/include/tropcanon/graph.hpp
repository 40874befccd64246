#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tropcanon/canon.hpp"
#include "tropcanon/order_matrix.hpp"

namespace tropcanon {

/// Weighted digraph on vertices {0, 1, ..., n}; 0 is the sink. No self-loop
/// on 0; weights are finite integers.
struct WeightedDigraph {
    std::size_t n = 0; // highest vertex index
    struct Edge {
        std::size_t from, to;
        std::int64_t weight;
    };
    std::vector<Edge> edges;
};

/// Canon-excess translation: w(i,j) = a(i,i) + ell_i - a(j,i) - ell_j >= 0
/// for finite a(j,i), and w(i,0) = ell_i. The diagonal must be a maximal
/// transversal family of the canon A + ell; shortest paths to the sink then
/// measure how far each increment sits above the minimal canon.
WeightedDigraph canon_to_graph(const OrderMatrix& a, const Canon& ell);

/// General-weight translation: w(i,0) = 0, w(i,j) = a(i,i) - a(j,i) for
/// finite a(j,i). Negative cycles flag a non-maximal diagonal; otherwise
/// shortest paths to the sink are the negated minimal canon.
WeightedDigraph matrix_to_graph(const OrderMatrix& a);

/// Reverse of canon_to_graph with a(i,i) = C = max(0, 2 max|w|); returns the
/// matrix together with the canon read off the sink edges.
std::pair<OrderMatrix, Canon> graph_to_canon_matrix(const WeightedDigraph& g);

/// Reverse of matrix_to_graph with a(i,i) = C = max(0, 2 max|w|).
OrderMatrix graph_to_matrix(const WeightedDigraph& g);

struct ShortestPaths {
    bool negative_cycle = false;
    std::vector<std::size_t> cycle; // witness, in edge direction, when negative_cycle
    // dist[v] = length of a shortest path v -> target; empty optional when
    // target is unreachable from v. Meaningless when negative_cycle.
    std::vector<std::optional<std::int64_t>> dist;
};

/// Exact single-target shortest paths. Label-setting when all weights are
/// non-negative, label-correcting with cycle detection otherwise.
ShortestPaths shortest_paths(const WeightedDigraph& g, std::size_t target);

/// Self-test: the minimal canon of A equals the negated shortest-path lengths
/// in matrix_to_graph after permuting rows to a maximal transversal diagonal.
bool graph_roundtrip_check(const OrderMatrix& a);

} // namespace tropcanon
