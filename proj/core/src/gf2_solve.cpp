#include "flipsym/gf2_solve.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace flipsym {

BitVec gf2_apply(const Gf2Matrix& matrix, const BitVec& x) {
    assert(x.size == matrix.cols());
    BitVec out(matrix.rows());
    const std::size_t wpr = matrix.words_per_row();
    for (std::size_t i = 0; i < matrix.rows(); ++i) {
        const uint64_t* r = matrix.row(i);
        uint64_t acc = 0;
        for (std::size_t w = 0; w < wpr; ++w)
            acc ^= r[w] & x.words[w];
        out.set(i, (std::popcount(acc) & 1) != 0);
    }
    return out;
}

std::optional<Gf2Solution> gf2_solve(const Gf2Matrix& matrix, const BitVec& rhs) {
    const std::size_t rows = matrix.rows();
    const std::size_t cols = matrix.cols();
    assert(rhs.size == rows);

    // Work on an augmented copy with the rhs as an extra trailing column.
    const std::size_t acols = cols + 1;
    Gf2Matrix work(rows, acols);
    for (std::size_t i = 0; i < rows; ++i) {
        std::copy(matrix.row(i), matrix.row(i) + matrix.words_per_row(), work.row(i));
        if (rhs.get(i))
            work.set(i, cols, true);
    }

    // Sorting groups duplicate rows together and floats empty rows to the
    // back; duplicates are skipped during elimination, which matters when
    // the caller hands over n^6 highly redundant equations.
    std::vector<uint32_t> order(rows);
    for (std::size_t i = 0; i < rows; ++i)
        order[i] = uint32_t(i);
    const std::size_t wpr = work.words_per_row();
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        const uint64_t* ra = work.row(a);
        const uint64_t* rb = work.row(b);
        for (std::size_t w = 0; w < wpr; ++w)
            if (ra[w] != rb[w])
                return ra[w] > rb[w];
        return false;
    });
    std::vector<uint32_t> kept;
    kept.reserve(rows);
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && std::equal(work.row(order[i]), work.row(order[i]) + wpr, work.row(order[i - 1])))
            continue;
        kept.push_back(order[i]);
    }

    std::vector<std::size_t> pivot_col;
    std::vector<uint32_t> pivot_row;
    std::size_t next = 0;  // first unused row in kept
    for (std::size_t col = 0; col < cols && next < kept.size(); ++col) {
        std::size_t found = kept.size();
        for (std::size_t k = next; k < kept.size(); ++k) {
            if (work.get(kept[k], col)) {
                found = k;
                break;
            }
        }
        if (found == kept.size())
            continue;
        std::swap(kept[next], kept[found]);
        const uint32_t pr = kept[next];
        const uint64_t* src = work.row(pr);
        const std::size_t wstart = col >> 6;
        for (std::size_t k = 0; k < kept.size(); ++k) {
            if (k == next)
                continue;
            if (work.get(kept[k], col)) {
                uint64_t* dst = work.row(kept[k]);
                for (std::size_t w = wstart; w < wpr; ++w)
                    dst[w] ^= src[w];
            }
        }
        pivot_col.push_back(col);
        pivot_row.push_back(pr);
        ++next;
    }

    // Rows without a pivot end up with an all-zero coefficient part, so a
    // set rhs bit there reads 0 = 1 and proves infeasibility.
    for (std::size_t k = next; k < kept.size(); ++k)
        if (work.get(kept[k], cols))
            return std::nullopt;

    Gf2Solution sol;
    sol.particular = BitVec(cols);
    for (std::size_t p = 0; p < pivot_col.size(); ++p)
        if (work.get(pivot_row[p], cols))
            sol.particular.set(pivot_col[p], true);

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col)
        is_pivot[c] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        BitVec v(cols);
        v.set(f, true);
        for (std::size_t p = 0; p < pivot_col.size(); ++p)
            if (work.get(pivot_row[p], f))
                v.set(pivot_col[p], true);
        sol.nullspace.push_back(std::move(v));
    }
    return sol;
}

}  // namespace flipsym
