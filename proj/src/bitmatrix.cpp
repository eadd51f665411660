#include "hbasis/bitmatrix.hpp"

#include <algorithm>

namespace hbasis {

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("mat_mul: dimension mismatch (" + std::to_string(a.cols()) +
                                    " vs " + std::to_string(b.rows()) + ")");
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto row = a.row_words(i);
        for (std::size_t w = 0; w < row.size(); ++w) {
            std::uint64_t word = row[w];
            while (word != 0) {
                const std::size_t k =
                    w * BitVector::kWordBits + static_cast<std::size_t>(std::countr_zero(word));
                out.xor_row_from(i, b, k);
                word &= word - 1;
            }
        }
    }
    return out;
}

BitMatrix transpose(const BitMatrix& a)
{
    BitMatrix out(a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto row = a.row_words(r);
        for (std::size_t w = 0; w < row.size(); ++w) {
            std::uint64_t word = row[w];
            while (word != 0) {
                const std::size_t c =
                    w * BitVector::kWordBits + static_cast<std::size_t>(std::countr_zero(word));
                out.set(c, r);
                word &= word - 1;
            }
        }
    }
    return out;
}

namespace {

// In-place row echelon reduction. Returns the rank; `companion`, when
// non-null, receives the same row operations (used for inversion).
std::size_t eliminate(BitMatrix& m, BitMatrix* companion)
{
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t pr = pivot_row;
        while (pr < m.rows() && !m.get(pr, col))
            ++pr;
        if (pr == m.rows())
            continue;
        m.swap_rows(pivot_row, pr);
        if (companion)
            companion->swap_rows(pivot_row, pr);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != pivot_row && m.get(r, col)) {
                m.xor_row(r, pivot_row);
                if (companion)
                    companion->xor_row(r, pivot_row);
            }
        }
        ++pivot_row;
    }
    return pivot_row;
}

} // namespace

BitMatrix mat_inverse(const BitMatrix& a)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("mat_inverse: matrix must be square");
    BitMatrix work = a;
    BitMatrix inv = BitMatrix::identity(a.rows());
    const std::size_t r = eliminate(work, &inv);
    if (r < a.rows())
        throw SingularMatrixError(r, a.rows());
    return inv;
}

std::size_t rank(const BitMatrix& a)
{
    BitMatrix work = a;
    return eliminate(work, nullptr);
}

std::vector<std::size_t> earliest_basis(const BitMatrix& d)
{
    Echelon ech(d.rows());
    std::vector<std::size_t> chosen;
    for (std::size_t c = 0; c < d.cols(); ++c)
        if (ech.insert(d.column(c)))
            chosen.push_back(c);
    return chosen;
}

std::optional<BitVector> solve_linear(const BitMatrix& a, const BitVector& rhs)
{
    if (a.rows() != rhs.size())
        throw std::invalid_argument("solve_linear: rhs length mismatch");
    BitMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (a.get(r, c))
                aug.set(r, c);
        if (rhs.get(r))
            aug.set(r, a.cols());
    }

    std::vector<std::size_t> pivot_col;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < aug.rows(); ++col) {
        std::size_t pr = pivot_row;
        while (pr < aug.rows() && !aug.get(pr, col))
            ++pr;
        if (pr == aug.rows())
            continue;
        aug.swap_rows(pivot_row, pr);
        for (std::size_t r = 0; r < aug.rows(); ++r)
            if (r != pivot_row && aug.get(r, col))
                aug.xor_row(r, pivot_row);
        pivot_col.push_back(col);
        ++pivot_row;
    }
    // Any remaining row with a set rhs bit is inconsistent.
    for (std::size_t r = pivot_row; r < aug.rows(); ++r)
        if (aug.get(r, a.cols()))
            return std::nullopt;

    BitVector x(a.cols());
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        if (aug.get(i, a.cols()))
            x.set(pivot_col[i]);
    return x;
}

bool Echelon::insert(BitVector v)
{
    v = reduce(std::move(v));
    if (v.none())
        return false;
    const std::size_t pivot = v.lowest_set_bit();
    // Back-reduce existing rows so the form stays fully reduced.
    for (auto& [col, row] : rows_)
        if (row.get(pivot))
            row ^= v;
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                [](const auto& entry, std::size_t p) { return entry.first < p; });
    rows_.insert(pos, {pivot, std::move(v)});
    return true;
}

BitVector Echelon::reduce(BitVector v) const
{
    for (const auto& [col, row] : rows_)
        if (v.get(col))
            v ^= row;
    return v;
}

std::vector<std::size_t> Echelon::pivot_columns() const
{
    std::vector<std::size_t> out;
    out.reserve(rows_.size());
    for (const auto& [col, row] : rows_)
        out.push_back(col);
    return out;
}

std::vector<std::size_t> Echelon::free_columns() const
{
    std::vector<std::size_t> out;
    const auto pivots = pivot_columns();
    std::size_t next = 0;
    for (std::size_t c = 0; c < width_; ++c) {
        if (next < pivots.size() && pivots[next] == c)
            ++next;
        else
            out.push_back(c);
    }
    return out;
}

} // namespace hbasis
