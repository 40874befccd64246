#pragma once

#include <cstddef>
#include <vector>

#include "tropcanon/order_value.hpp"

namespace tropcanon {

/// Dense s x n matrix over Z u {-inf}. Immutable in spirit: all algorithms
/// take it by const reference and return fresh data.
class OrderMatrix {
  public:
    OrderMatrix(std::size_t rows, std::size_t cols, OrderValue fill = OrderValue::neg_inf())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {
        if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
    }

    static OrderMatrix from_rows(const std::vector<std::vector<OrderValue>>& rows) {
        if (rows.empty() || rows.front().empty())
            throw DimensionError("matrix dimensions must be positive");
        OrderMatrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_)
                throw DimensionError("ragged rows in matrix literal");
            for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    OrderValue& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    OrderValue at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    OrderValue operator()(std::size_t i, std::size_t j) const { return at(i, j); }

    OrderMatrix transpose() const {
        OrderMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    /// Matrix with ell[i] added to every entry of row i.
    OrderMatrix add_to_rows(const std::vector<std::int64_t>& ell) const {
        if (ell.size() != rows_) throw DimensionError("row increment size mismatch");
        OrderMatrix r(*this);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) += OrderValue(ell[i]);
        return r;
    }

    /// Largest finite entry, or -inf if there is none.
    OrderValue max_entry() const {
        OrderValue m = OrderValue::neg_inf();
        for (const auto& v : data_) m = max(m, v);
        return m;
    }

    bool operator==(const OrderMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<OrderValue> data_;
};

/// Pads A with |rows-cols| zero rows (rows < cols) or zero columns
/// (rows > cols) to the enclosing square; the tropical determinant is
/// unchanged. Square input is returned as is.
inline OrderMatrix square_complete(const OrderMatrix& a) {
    const std::size_t m = a.rows() > a.cols() ? a.rows() : a.cols();
    if (a.rows() == a.cols()) return a;
    OrderMatrix r(m, m, OrderValue(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            r.at(i, j) = (i < a.rows() && j < a.cols()) ? a.at(i, j) : OrderValue(0);
    return r;
}

} // namespace tropcanon
