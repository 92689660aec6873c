#pragma once

// Exact linear algebra over a finite field, working on raw element codes.
// Only what the library needs: rank, and rank-preserving row reduction that
// can also answer membership questions.

#include <cstdint>
#include <vector>

#include "enq/fields.hpp"

namespace enq {

// In-place row echelon reduction; returns the rank.  Rows are code vectors
// of equal length over F.
inline std::size_t row_reduce(std::vector<std::vector<std::uint32_t>>& rows,
                              const FiniteField& F) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        std::uint32_t s = F.inv(rows[r][c]);
        if (s != 1)
            for (std::size_t j = c; j < ncols; ++j) rows[r][j] = F.mul(s, rows[r][j]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            std::uint32_t f = rows[i][c];
            for (std::size_t j = c; j < ncols; ++j)
                rows[i][j] = F.add(rows[i][j], F.neg(F.mul(f, rows[r][j])));
        }
        ++r;
    }
    return r;
}

inline std::size_t rank_codes(std::vector<std::vector<std::uint32_t>> rows,
                              const FiniteField& F) {
    return row_reduce(rows, F);
}

// True when v lies in the row span of an already-reduced echelon matrix.
inline bool in_row_span(const std::vector<std::vector<std::uint32_t>>& echelon,
                        std::size_t rank, std::vector<std::uint32_t> v,
                        const FiniteField& F) {
    const std::size_t ncols = v.size();
    for (std::size_t r = 0; r < rank; ++r) {
        std::size_t c = 0;
        while (c < ncols && echelon[r][c] == 0) ++c;
        if (c == ncols || v[c] == 0) continue;
        std::uint32_t f = v[c];
        for (std::size_t j = c; j < ncols; ++j)
            v[j] = F.add(v[j], F.neg(F.mul(f, echelon[r][j])));
    }
    for (auto x : v)
        if (x != 0) return false;
    return true;
}

} // namespace enq
