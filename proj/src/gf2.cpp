#include "bfa/gf2.hpp"

#include <bit>

namespace bfa::gf2 {

int rank(std::vector<std::uint32_t> rows, int ncols) {
    int r = 0;
    for (int col = 0; col < ncols; ++col) {
        const std::uint32_t bit = std::uint32_t{1} << col;
        std::size_t pivot = r;
        while (pivot < rows.size() && (rows[pivot] & bit) == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != static_cast<std::size_t>(r) && (rows[i] & bit)) rows[i] ^= rows[r];
        ++r;
    }
    return r;
}

std::vector<std::uint32_t> null_space(const std::vector<std::uint32_t>& rows, int ncols) {
    std::vector<std::uint32_t> m(rows);
    std::vector<int> pivot_col;
    int r = 0;
    for (int col = 0; col < ncols; ++col) {
        const std::uint32_t bit = std::uint32_t{1} << col;
        std::size_t pivot = r;
        while (pivot < m.size() && (m[pivot] & bit) == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != static_cast<std::size_t>(r) && (m[i] & bit)) m[i] ^= m[r];
        pivot_col.push_back(col);
        ++r;
    }
    std::vector<std::uint32_t> basis;
    for (int col = 0; col < ncols; ++col) {
        bool is_pivot = false;
        for (const int pc : pivot_col) is_pivot |= (pc == col);
        if (is_pivot) continue;
        // Free column: set it to 1, read pivot values off the reduced rows.
        std::uint32_t v = std::uint32_t{1} << col;
        for (int i = 0; i < r; ++i)
            if (m[i] & (std::uint32_t{1} << col)) v |= std::uint32_t{1} << pivot_col[i];
        basis.push_back(v);
    }
    return basis;
}

std::optional<std::vector<std::uint32_t>> invert(const std::vector<std::uint32_t>& rows, int n) {
    std::vector<std::uint32_t> m(rows);
    std::vector<std::uint32_t> inv(n);
    for (int i = 0; i < n; ++i) inv[i] = std::uint32_t{1} << i;
    for (int col = 0; col < n; ++col) {
        const std::uint32_t bit = std::uint32_t{1} << col;
        int pivot = col;
        while (pivot < n && (m[pivot] & bit) == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(m[col], m[pivot]);
        std::swap(inv[col], inv[pivot]);
        for (int i = 0; i < n; ++i) {
            if (i != col && (m[i] & bit)) {
                m[i] ^= m[col];
                inv[i] ^= inv[col];
            }
        }
    }
    return inv;
}

std::uint32_t mat_vec(const std::vector<std::uint32_t>& rows, std::uint32_t x) {
    std::uint32_t y = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        y |= static_cast<std::uint32_t>(dot(rows[i], x)) << i;
    return y;
}

std::vector<std::uint32_t> row_basis(const std::vector<std::uint32_t>& vectors, int ncols) {
    // Incremental elimination: keep one basis vector per leading column.
    std::vector<std::uint32_t> lead(ncols, 0);
    std::vector<std::uint32_t> basis;
    for (std::uint32_t v : vectors) {
        for (int col = ncols - 1; col >= 0 && v != 0; --col) {
            if ((v >> col) & 1) {
                if (lead[col] == 0) {
                    lead[col] = v;
                    basis.push_back(v);
                    v = 0;
                } else {
                    v ^= lead[col];
                }
            }
        }
    }
    return basis;
}

}  // namespace bfa::gf2
