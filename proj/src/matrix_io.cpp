#include "tropcanon/matrix_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace tropcanon {

namespace {

std::vector<std::vector<std::string>> tokenize_lines(std::istream& in) {
    std::vector<std::vector<std::string>> lines;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    return lines;
}

OrderValue parse_entry(const std::string& t, int line) {
    if (t == "-inf") return OrderValue::neg_inf();
    try {
        std::size_t used = 0;
        const long long v = std::stoll(t, &used);
        if (used != t.size()) throw std::invalid_argument(t);
        return OrderValue(v);
    } catch (const std::exception&) {
        throw ParseError("invalid matrix entry '" + t + "'", line, 1);
    }
}

} // namespace

OrderMatrix read_order_matrix(std::istream& in) {
    const auto lines = tokenize_lines(in);
    if (lines.empty()) throw ParseError("empty matrix", 1, 1);
    std::vector<std::vector<OrderValue>> rows;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::vector<OrderValue> row;
        for (const auto& t : lines[i]) row.push_back(parse_entry(t, static_cast<int>(i + 1)));
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError("ragged matrix rows", static_cast<int>(i + 1), 1);
        rows.push_back(std::move(row));
    }
    return OrderMatrix::from_rows(rows);
}

OrderMatrix read_order_matrix(const std::string& text) {
    std::istringstream in(text);
    return read_order_matrix(in);
}

void write_order_matrix(std::ostream& out, const OrderMatrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) out << ' ';
            out << a.at(i, j).str();
        }
        out << '\n';
    }
}

std::string matrix_str(const OrderMatrix& a) {
    std::ostringstream os;
    write_order_matrix(os, a);
    return os.str();
}

BitMatrix read_bit_matrix(std::istream& in) {
    const OrderMatrix m = read_order_matrix(in);
    BitMatrix b(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto v = m.at(i, j);
            if (!v.is_finite() || (v.value() != 0 && v.value() != 1))
                throw ParseError("bit matrix entries must be 0 or 1", static_cast<int>(i + 1),
                                 static_cast<int>(j + 1));
            b.set(i, j, v.value() == 1);
        }
    return b;
}

BitMatrix read_bit_matrix(const std::string& text) {
    std::istringstream in(text);
    return read_bit_matrix(in);
}

WeightedDigraph read_graph(std::istream& in) {
    WeightedDigraph g;
    for (const auto& toks : tokenize_lines(in)) {
        if (toks.size() != 3) throw ParseError("graph lines are 'from to weight'", 1, 1);
        try {
            const unsigned long from = std::stoul(toks[0]);
            const unsigned long to = std::stoul(toks[1]);
            const long long w = std::stoll(toks[2]);
            g.edges.push_back({from, to, w});
            g.n = std::max({g.n, static_cast<std::size_t>(from), static_cast<std::size_t>(to)});
        } catch (const std::exception&) {
            throw ParseError("invalid graph edge", 1, 1);
        }
    }
    return g;
}

void write_graph(std::ostream& out, const WeightedDigraph& g) {
    for (const auto& e : g.edges) out << e.from << ' ' << e.to << ' ' << e.weight << '\n';
}

} // namespace tropcanon
