/**
 * Dense bit-packed linear algebra over Z_2.
 *
 * BitVector / BitMatrix store 64 bits per machine word, row-major. All
 * eliminations pivot on the first nonzero entry in row order, scanning
 * columns left to right, so every routine here is deterministic.
 */

#ifndef HBASIS_BITMATRIX_HPP
#define HBASIS_BITMATRIX_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hbasis {

class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(std::size_t achieved_rank, std::size_t dim)
        : std::runtime_error("matrix of dimension " + std::to_string(dim) +
                             " is singular (rank " + std::to_string(achieved_rank) + ")"),
          rank_(achieved_rank)
    {
    }

    std::size_t achieved_rank() const noexcept { return rank_; }

private:
    std::size_t rank_;
};

class BitVector {
public:
    static constexpr std::size_t kWordBits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t size)
        : size_(size), words_((size + kWordBits - 1) / kWordBits, 0)
    {
    }

    std::size_t size() const noexcept { return size_; }

    bool get(std::size_t i) const
    {
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
    }

    void set(std::size_t i, bool value = true)
    {
        const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
        if (value)
            words_[i / kWordBits] |= mask;
        else
            words_[i / kWordBits] &= ~mask;
    }

    void flip(std::size_t i) { words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits); }

    BitVector& operator^=(const BitVector& other)
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] ^= other.words_[w];
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector& b)
    {
        a ^= b;
        return a;
    }

    bool any() const noexcept
    {
        for (std::uint64_t w : words_)
            if (w != 0)
                return true;
        return false;
    }

    bool none() const noexcept { return !any(); }

    std::size_t count() const noexcept
    {
        std::size_t c = 0;
        for (std::uint64_t w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Parity of the Z_2 inner product <a, b>.
    bool dot(const BitVector& other) const
    {
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w)
            acc ^= words_[w] & other.words_[w];
        return std::popcount(acc) & 1u;
    }

    /// Index of the lowest set bit, or size() if none.
    std::size_t lowest_set_bit() const noexcept
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] != 0)
                return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return size_;
    }

    /// Index of the highest set bit, or size() if none.
    std::size_t highest_set_bit() const noexcept
    {
        for (std::size_t w = words_.size(); w-- > 0;)
            if (words_[w] != 0)
                return w * kWordBits + (kWordBits - 1 -
                                        static_cast<std::size_t>(std::countl_zero(words_[w])));
        return size_;
    }

    /// Indices of all set bits, ascending.
    std::vector<std::size_t> set_bits() const
    {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word != 0) {
                out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(word)));
                word &= word - 1;
            }
        }
        return out;
    }

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> words() noexcept { return words_; }

    friend bool operator==(const BitVector&, const BitVector&) = default;

    /// Lexicographic order on the ascending index sequences of set bits.
    /// {0,5} < {1,2}; a proper subset precedes its superset.
    static bool lex_less(const BitVector& a, const BitVector& b)
    {
        for (std::size_t w = 0; w < a.words_.size(); ++w) {
            const std::uint64_t diff = a.words_[w] ^ b.words_[w];
            if (diff != 0) {
                const std::uint64_t low = diff & ~(diff - 1);
                return (a.words_[w] & low) != 0;
            }
        }
        return false;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/**
 * Row-major bit-packed matrix over Z_2. Rows and columns may be zero;
 * bits past `cols` in the final word of each row stay zero.
 */
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows),
          cols_(cols),
          words_per_row_((cols + BitVector::kWordBits - 1) / BitVector::kWordBits),
          data_(rows * words_per_row_, 0)
    {
    }

    static BitMatrix identity(std::size_t n)
    {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.set(i, i);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t r, std::size_t c) const
    {
        return (data_[r * words_per_row_ + c / 64] >> (c % 64)) & 1u;
    }

    void set(std::size_t r, std::size_t c, bool value = true)
    {
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        std::uint64_t& word = data_[r * words_per_row_ + c / 64];
        if (value)
            word |= mask;
        else
            word &= ~mask;
    }

    void flip(std::size_t r, std::size_t c)
    {
        data_[r * words_per_row_ + c / 64] ^= std::uint64_t{1} << (c % 64);
    }

    std::span<const std::uint64_t> row_words(std::size_t r) const
    {
        return {data_.data() + r * words_per_row_, words_per_row_};
    }

    /// dst_row ^= src_row (within this matrix).
    void xor_row(std::size_t dst, std::size_t src)
    {
        std::uint64_t* d = data_.data() + dst * words_per_row_;
        const std::uint64_t* s = data_.data() + src * words_per_row_;
        for (std::size_t w = 0; w < words_per_row_; ++w)
            d[w] ^= s[w];
    }

    /// dst row of this ^= row of other (equal column counts).
    void xor_row_from(std::size_t dst, const BitMatrix& other, std::size_t src)
    {
        std::uint64_t* d = data_.data() + dst * words_per_row_;
        const std::uint64_t* s = other.data_.data() + src * other.words_per_row_;
        for (std::size_t w = 0; w < words_per_row_; ++w)
            d[w] ^= s[w];
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        std::uint64_t* ra = data_.data() + a * words_per_row_;
        std::uint64_t* rb = data_.data() + b * words_per_row_;
        for (std::size_t w = 0; w < words_per_row_; ++w)
            std::swap(ra[w], rb[w]);
    }

    BitVector row(std::size_t r) const
    {
        BitVector v(cols_);
        const std::uint64_t* src = data_.data() + r * words_per_row_;
        auto dst = v.words();
        for (std::size_t w = 0; w < words_per_row_; ++w)
            dst[w] = src[w];
        return v;
    }

    void set_row(std::size_t r, const BitVector& v)
    {
        std::uint64_t* dst = data_.data() + r * words_per_row_;
        auto src = v.words();
        for (std::size_t w = 0; w < words_per_row_; ++w)
            dst[w] = src[w];
    }

    BitVector column(std::size_t c) const
    {
        BitVector v(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            if (get(r, c))
                v.set(r);
        return v;
    }

    void set_column(std::size_t c, const BitVector& v)
    {
        for (std::size_t r = 0; r < rows_; ++r)
            set(r, c, v.get(r));
    }

    /// Matrix-vector product over Z_2 (x has cols() bits).
    BitVector apply(const BitVector& x) const
    {
        BitVector out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            const std::uint64_t* rw = data_.data() + r * words_per_row_;
            std::uint64_t acc = 0;
            auto xw = x.words();
            for (std::size_t w = 0; w < words_per_row_; ++w)
                acc ^= rw[w] & xw[w];
            if (std::popcount(acc) & 1u)
                out.set(r);
        }
        return out;
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> data_;
};

/// a * b over Z_2. Throws std::invalid_argument on a.cols() != b.rows().
BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);

BitMatrix transpose(const BitMatrix& a);

/// Inverse of a square matrix; throws SingularMatrixError carrying the
/// achieved rank when none exists.
BitMatrix mat_inverse(const BitMatrix& a);

/// Row rank via Gaussian elimination.
std::size_t rank(const BitMatrix& a);

/**
 * Column indices i_1 < ... < i_r (r = rank) such that the indexed columns
 * are independent and the index sequence is lexicographically smallest
 * among all full-rank column subsets. Greedy left-to-right insertion is
 * exactly the lexicographic minimum for linear matroids.
 */
std::vector<std::size_t> earliest_basis(const BitMatrix& d);

/// Any x with a*x = rhs, or nullopt when the system is inconsistent.
std::optional<BitVector> solve_linear(const BitMatrix& a, const BitVector& rhs);

/**
 * Incrementally maintained reduced row echelon form. Supports rank
 * queries, membership tests and canonical reduction modulo the row space,
 * which is how annotations project cycle coordinates onto a homology
 * basis.
 */
class Echelon {
public:
    explicit Echelon(std::size_t width) : width_(width) {}

    std::size_t width() const noexcept { return width_; }
    std::size_t rank() const noexcept { return rows_.size(); }

    /// Insert a vector; returns true if it enlarged the row space.
    bool insert(BitVector v);

    /// Canonical representative of v modulo the row space: all pivot
    /// coordinates are cleared, free coordinates are untouched.
    BitVector reduce(BitVector v) const;

    bool contains(const BitVector& v) const { return reduce(std::move(v)).none(); }

    /// Pivot columns in increasing order.
    std::vector<std::size_t> pivot_columns() const;

    /// Non-pivot columns in increasing order.
    std::vector<std::size_t> free_columns() const;

private:
    std::size_t width_;
    // (pivot column, row) pairs kept sorted by pivot column; rows are
    // fully reduced against each other.
    std::vector<std::pair<std::size_t, BitVector>> rows_;
};

} // namespace hbasis

#endif
