#pragma once

#include <iosfwd>
#include <string>

#include "tropcanon/graph.hpp"
#include "tropcanon/matching.hpp"
#include "tropcanon/order_matrix.hpp"

namespace tropcanon {

/// Shared matrix text format: one row per line, whitespace-separated tokens,
/// integer or `-inf`, `#` starts a comment.
OrderMatrix read_order_matrix(std::istream& in);
OrderMatrix read_order_matrix(const std::string& text);
void write_order_matrix(std::ostream& out, const OrderMatrix& a);
std::string matrix_str(const OrderMatrix& a);

/// Same format restricted to 0/1 entries.
BitMatrix read_bit_matrix(std::istream& in);
BitMatrix read_bit_matrix(const std::string& text);

/// Edge-list text: `from to weight` per line; vertex 0 reserved as sink.
WeightedDigraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const WeightedDigraph& g);

} // namespace tropcanon
