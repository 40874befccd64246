#include "tropcanon/tropdet.hpp"

#include <algorithm>
#include <set>

#include "tropcanon/canon.hpp"
#include "tropcanon/matching.hpp"

namespace tropcanon {

TropdetResult tropdet(const OrderMatrix& a) {
    if (a.rows() > a.cols()) {
        auto t = tropdet(a.transpose());
        TropdetResult r;
        r.value = t.value;
        if (r.value.is_finite()) {
            r.witness.assign(a.rows(), kUnmatched);
            for (std::size_t j = 0; j < t.witness.size(); ++j)
                if (t.witness[j] != kUnmatched)
                    r.witness[t.witness[j]] = static_cast<std::ptrdiff_t>(j);
        }
        return r;
    }
    const std::size_t s = a.rows();
    if (detail::max_matching(detail::FinitePattern{a}).size < s)
        return {OrderValue::neg_inf(), {}};
    // Transversal maxima of the minimal canon of the completed square matrix
    // realize a maximal transversal sum; restricting to the real rows gives
    // the witness.
    const OrderMatrix sq = square_complete(a);
    const auto lam = minimal_canon(sq);
    const auto sigma = transversal_maxima(sq, lam);
    TropdetResult r;
    r.witness.assign(s, kUnmatched);
    OrderValue total(0);
    for (std::size_t i = 0; i < s; ++i) {
        r.witness[i] = sigma[i];
        total += a.at(i, static_cast<std::size_t>(sigma[i]));
    }
    r.value = total;
    return r;
}

OrderMatrix trop_mul(const OrderMatrix& a, const OrderMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("inner dimensions disagree");
    OrderMatrix c(a.rows(), b.cols(), OrderValue::neg_inf());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            OrderValue acc = OrderValue::neg_inf();
            for (std::size_t k = 0; k < a.cols(); ++k) acc = max(acc, a.at(i, k) + b.at(k, j));
            c.at(i, j) = acc;
        }
    return c;
}

namespace {

std::vector<std::size_t> complement(std::size_t total, const std::set<std::size_t>& removed) {
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < total; ++k)
        if (!removed.count(k)) keep.push_back(k);
    return keep;
}

OrderValue tropdet_of_selection(const OrderMatrix& a, const std::vector<std::size_t>& rows,
                                const std::vector<std::size_t>& cols) {
    if (rows.empty() && cols.empty()) return OrderValue(0); // single empty transversal
    if (rows.empty() || cols.empty())
        throw InvalidArgument("minor with all rows or all columns deleted");
    OrderMatrix sub(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) sub.at(i, j) = a.at(rows[i], cols[j]);
    return tropdet(sub).value;
}

} // namespace

OrderValue subdet(const OrderMatrix& a, const std::vector<std::size_t>& delete_rows,
                  const std::vector<std::size_t>& delete_cols) {
    std::set<std::size_t> dr(delete_rows.begin(), delete_rows.end());
    std::set<std::size_t> dc(delete_cols.begin(), delete_cols.end());
    for (auto r : dr)
        if (r >= a.rows()) throw InvalidArgument("row index out of range");
    for (auto c : dc)
        if (c >= a.cols()) throw InvalidArgument("column index out of range");
    return tropdet_of_selection(a, complement(a.rows(), dr), complement(a.cols(), dc));
}

bool partition_identity_check(const OrderMatrix& a, const std::vector<std::size_t>& rows_i) {
    if (a.rows() != a.cols()) throw DimensionError("square matrix required");
    const std::size_t n = a.rows();
    std::set<std::size_t> iset(rows_i.begin(), rows_i.end());
    for (auto r : iset)
        if (r >= n) throw InvalidArgument("row index out of range");
    const std::vector<std::size_t> ri(iset.begin(), iset.end());
    const auto rc = complement(n, iset);
    const std::size_t k = ri.size();

    const OrderValue lhs = tropdet(a).value;
    OrderValue rhs = OrderValue::neg_inf();
    // All J with #J = #I.
    std::vector<std::size_t> comb(k);
    for (std::size_t t = 0; t < k; ++t) comb[t] = t;
    auto advance = [&]() {
        if (k == 0) return false;
        std::size_t t = k;
        while (t > 0) {
            --t;
            if (comb[t] != n - k + t) {
                ++comb[t];
                for (std::size_t u = t + 1; u < k; ++u) comb[u] = comb[u - 1] + 1;
                return true;
            }
        }
        return false;
    };
    do {
        std::set<std::size_t> jset(comb.begin(), comb.end());
        const std::vector<std::size_t> cj(jset.begin(), jset.end());
        const auto cjc = complement(n, jset);
        rhs = max(rhs, tropdet_of_selection(a, ri, cj) + tropdet_of_selection(a, rc, cjc));
    } while (advance());
    return lhs == rhs;
}

} // namespace tropcanon
