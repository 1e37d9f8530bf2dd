#include "bfa/affine.hpp"

#include <bit>

namespace bfa {

AffineMap::AffineMap(int nvars, std::vector<std::uint32_t> matrix_rows, std::uint32_t translation)
    : n_(nvars), rows_(std::move(matrix_rows)), w_(translation) {
    if (nvars < 1 || nvars > TruthTable::kMaxVars) throw Error("variable count out of range");
    if (rows_.size() != static_cast<std::size_t>(nvars)) throw Error("matrix must be n x n");
    const std::uint32_t allowed = (std::uint32_t{1} << nvars) - 1;
    for (const std::uint32_t r : rows_)
        if ((r & ~allowed) != 0) throw Error("matrix row uses a column beyond n");
    if ((w_ & ~allowed) != 0) throw Error("translation uses a coordinate beyond n");
    if (!gf2::invert(rows_, nvars)) throw Error("matrix is singular over F2");
}

AffineMap AffineMap::identity(int nvars) {
    std::vector<std::uint32_t> rows(nvars);
    for (int i = 0; i < nvars; ++i) rows[i] = std::uint32_t{1} << i;
    return AffineMap(nvars, std::move(rows), 0);
}

AffineMap AffineMap::random(int nvars, std::mt19937_64& rng) {
    const std::uint32_t mask = (std::uint32_t{1} << nvars) - 1;
    // Rejection sampling; a random matrix is invertible with probability ~0.29.
    for (;;) {
        std::vector<std::uint32_t> rows(nvars);
        for (int i = 0; i < nvars; ++i) rows[i] = static_cast<std::uint32_t>(rng()) & mask;
        if (gf2::invert(rows, nvars))
            return AffineMap(nvars, std::move(rows), static_cast<std::uint32_t>(rng()) & mask);
    }
}

AffineMap AffineMap::inverse() const {
    // Constructor guarantees invertibility; phi^-1(y) = M^-1 y + M^-1 w.
    auto minv = gf2::invert(rows_, n_);
    const std::uint32_t w_inv = gf2::mat_vec(*minv, w_);
    return AffineMap(n_, std::move(*minv), w_inv);
}

TruthTable apply_affine(const TruthTable& t, const AffineMap& phi) {
    if (t.vars() != phi.vars()) throw Error("variable counts differ");
    const int n = t.vars();
    // Column images M e_j let us walk phi(x) incrementally.
    std::vector<std::uint32_t> col(n, 0);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if ((phi.rows()[i] >> j) & 1) col[j] |= std::uint32_t{1} << i;

    TruthTable out(n);
    std::vector<std::uint32_t> image(t.size());
    image[0] = phi.translation();
    if (t.get(image[0])) out.set(0, true);
    for (std::uint32_t x = 1; x < t.size(); ++x) {
        const int j = std::countr_zero(x);
        image[x] = image[x & (x - 1)] ^ col[j];
        if (t.get(image[x])) out.set(x, true);
    }
    return out;
}

}  // namespace bfa
