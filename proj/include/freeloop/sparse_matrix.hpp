#pragma once

#include <map>
#include <utility>
#include <vector>

#include "freeloop/errors.hpp"
#include "freeloop/intmath.hpp"

namespace freeloop {

/// Sparse integer matrix.  Rows index the target basis, columns the source
/// basis, so a differential C^n -> C^{n+1} has cols = dim C^n.
class SparseIntMatrix {
  public:
    SparseIntMatrix() = default;
    SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols)
    {
        if (rows < 0 || cols < 0)
            throw validation_error("matrix dimensions must be nonnegative");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void add(int r, int c, const Int& v)
    {
        check_index(r, c);
        if (v == 0)
            return;
        auto key = std::make_pair(r, c);
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            entries_.emplace(key, v);
            return;
        }
        it->second += v;
        if (it->second == 0)
            entries_.erase(it);
    }

    void set(int r, int c, const Int& v)
    {
        check_index(r, c);
        if (v == 0)
            entries_.erase(std::make_pair(r, c));
        else
            entries_[std::make_pair(r, c)] = v;
    }

    Int get(int r, int c) const
    {
        check_index(r, c);
        auto it = entries_.find(std::make_pair(r, c));
        return it == entries_.end() ? Int(0) : it->second;
    }

    const std::map<std::pair<int, int>, Int>& entries() const { return entries_; }

    bool is_zero() const { return entries_.empty(); }

    SparseIntMatrix multiply(const SparseIntMatrix& rhs) const
    {
        if (cols_ != rhs.rows_)
            throw validation_error("matrix product dimension mismatch");
        // column views give the product in one sparse pass
        std::vector<std::vector<std::pair<int, Int>>> rhs_cols(rhs.cols_);
        for (const auto& [rc, v] : rhs.entries_)
            rhs_cols[rc.second].emplace_back(rc.first, v);
        std::vector<std::vector<std::pair<int, Int>>> lhs_cols(cols_);
        for (const auto& [rc, v] : entries_)
            lhs_cols[rc.second].emplace_back(rc.first, v);
        SparseIntMatrix out(rows_, rhs.cols_);
        for (int c = 0; c < rhs.cols_; ++c)
            for (const auto& [mid, v] : rhs_cols[c])
                for (const auto& [r, w] : lhs_cols[mid])
                    out.add(r, c, w * v);
        return out;
    }

    SparseIntMatrix mod(const Int& p) const
    {
        SparseIntMatrix out(rows_, cols_);
        for (const auto& [rc, v] : entries_)
            out.set(rc.first, rc.second, mod_reduce(v, p));
        return out;
    }

    std::vector<std::vector<Int>> to_dense() const
    {
        std::vector<std::vector<Int>> m(rows_, std::vector<Int>(cols_, Int(0)));
        for (const auto& [rc, v] : entries_)
            m[rc.first][rc.second] = v;
        return m;
    }

    bool operator==(const SparseIntMatrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

  private:
    void check_index(int r, int c) const
    {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw validation_error("matrix index out of range");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::map<std::pair<int, int>, Int> entries_;
};

/// Rank of the matrix over F_p by Gaussian elimination.
inline int rank_mod_p(const SparseIntMatrix& m, const Int& p)
{
    auto a = m.to_dense();
    int rows = m.rows(), cols = m.cols();
    for (auto& row : a)
        for (auto& x : row)
            x = mod_reduce(x, p);
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(a[rank], a[pivot]);
        Int inv = mod_inverse(a[rank][c], p);
        for (int j = c; j < cols; ++j)
            a[rank][j] = mod_reduce(a[rank][j] * inv, p);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0)
                continue;
            Int f = a[r][c];
            for (int j = c; j < cols; ++j)
                a[r][j] = mod_reduce(a[r][j] - f * a[rank][j], p);
        }
        ++rank;
    }
    return rank;
}

} // namespace freeloop
