#ifndef CDC_SMALL_LINALG_HPP
#define CDC_SMALL_LINALG_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "cdc/gf.hpp"

// Scratch-buffer rank routines for the hot loops. All of these clobber their
// input buffers.

namespace cdc::detail {

inline int rank_bytes(const Field& f, uint8_t* a, int rows, int cols) {
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int sel = rank;
        while (sel < rows && a[sel * cols + c] == 0) ++sel;
        if (sel == rows) continue;
        if (sel != rank)
            for (int j = 0; j < cols; ++j) std::swap(a[sel * cols + j], a[rank * cols + j]);
        uint8_t inv = f.inv(a[rank * cols + c]);
        for (int j = c; j < cols; ++j) a[rank * cols + j] = f.mul(a[rank * cols + j], inv);
        for (int r = rank + 1; r < rows; ++r) {
            uint8_t factor = a[r * cols + c];
            if (!factor) continue;
            for (int j = c; j < cols; ++j)
                a[r * cols + j] = f.sub(a[r * cols + j], f.mul(factor, a[rank * cols + j]));
        }
        ++rank;
    }
    return rank;
}

inline int rank_gf2(uint64_t* rows, int nrows) {
    int rank = 0;
    for (int r = 0; r < nrows; ++r) {
        uint64_t row = rows[r];
        for (int j = 0; j < rank; ++j) {
            uint64_t pivot = rows[j];
            if (row & (pivot & -pivot)) row ^= pivot;
        }
        if (row) rows[rank++] = row;
    }
    return rank;
}

inline int rank_gf2_32(uint32_t* rows, int nrows) {
    int rank = 0;
    for (int r = 0; r < nrows; ++r) {
        uint32_t row = rows[r];
        for (int j = 0; j < rank; ++j) {
            uint32_t pivot = rows[j];
            if (row & (pivot & -pivot)) row ^= pivot;
        }
        if (row) rows[rank++] = row;
    }
    return rank;
}

// dim(U + W) for packed GF(2) row sets; ubuf holds U's rows (consumed).
inline int sum_dim_gf2(uint64_t* scratch, const uint64_t* u_rows, int u_dim,
                       const uint64_t* w_rows, int w_dim) {
    std::copy(u_rows, u_rows + u_dim, scratch);
    std::copy(w_rows, w_rows + w_dim, scratch + u_dim);
    return rank_gf2(scratch, u_dim + w_dim);
}

}  // namespace cdc::detail

#endif
