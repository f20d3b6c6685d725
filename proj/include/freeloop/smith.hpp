#pragma once

#include <vector>

#include "freeloop/sparse_matrix.hpp"

namespace freeloop {

struct SmithResult {
    std::vector<Int> invariant_factors; // d_1 | d_2 | ... | d_r, all > 0
    int rank = 0;
};

/// Smith normal form over Z.  Pivot choice: smallest nonzero magnitude with
/// row/column swaps, then full row+column elimination.  Returns the invariant
/// factors and the rank; the unimodular transforms are not kept.
inline SmithResult smith_normal_form(const SparseIntMatrix& input)
{
    auto a = input.to_dense();
    int rows = input.rows(), cols = input.cols();
    SmithResult res;
    int t = 0; // current pivot slot

    auto find_pivot = [&](int& pr, int& pc) -> bool {
        pr = pc = -1;
        Int best = 0;
        for (int r = t; r < rows; ++r)
            for (int c = t; c < cols; ++c)
                if (a[r][c] != 0) {
                    Int m = int_abs(a[r][c]);
                    if (pr < 0 || m < best) {
                        best = m;
                        pr = r;
                        pc = c;
                    }
                }
        return pr >= 0;
    };

    while (t < rows && t < cols) {
        int pr, pc;
        if (!find_pivot(pr, pc))
            break;
        std::swap(a[t], a[pr]);
        for (int r = 0; r < rows; ++r)
            std::swap(a[r][t], a[r][pc]);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            // row elimination below, re-pivoting on smaller remainders
            for (int r = t + 1; r < rows; ++r) {
                if (a[r][t] == 0)
                    continue;
                Int q = a[r][t] / a[t][t];
                for (int c = t; c < cols; ++c)
                    a[r][c] -= q * a[t][c];
                if (a[r][t] != 0) {
                    std::swap(a[t], a[r]);
                    dirty = true;
                }
            }
            for (int c = t + 1; c < cols; ++c) {
                if (a[t][c] == 0)
                    continue;
                Int q = a[t][c] / a[t][t];
                for (int r = t; r < rows; ++r)
                    a[r][c] -= q * a[r][t];
                if (a[t][c] != 0) {
                    for (int r = 0; r < rows; ++r)
                        std::swap(a[r][t], a[r][c]);
                    dirty = true;
                }
            }
        }
        res.invariant_factors.push_back(int_abs(a[t][t]));
        ++t;
    }
    res.rank = static_cast<int>(res.invariant_factors.size());

    // enforce the divisibility chain d_i | d_{i+1}
    auto& d = res.invariant_factors;
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t i = 0; i + 1 < d.size(); ++i) {
            if (d[i + 1] % d[i] == 0)
                continue;
            Int g = int_gcd(d[i], d[i + 1]);
            d[i + 1] = d[i] / g * d[i + 1];
            d[i] = g;
            changed = true;
        }
    }
    return res;
}

} // namespace freeloop
