#pragma once

// Dense GF(2) vectors and matrices with word-packed storage, and the
// LinearCode wrapper (a full-row-rank generator plus memoized parameters).
//
// Indices are 0-based throughout the library. Text formats and the CLI
// convert to the 1-based convention used for column and symbol labels.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace batchcodes {

class BitVector {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t bits_per_word = 64;

    BitVector() = default;

    /// All-zero vector. Throws DimensionError for length 0.
    explicit BitVector(std::size_t length);

    static BitVector unit(std::size_t length, std::size_t index);

    /// Low `length` bits of `word`, bit 0 becoming entry 0. Requires length <= 64.
    static BitVector from_word(std::size_t length, word_type word);

    /// Parses a string over {0,1}; entry 0 is the first character.
    static BitVector from_string(std::string_view bits);

    [[nodiscard]] std::size_t size() const noexcept { return length_; }
    [[nodiscard]] bool get(std::size_t i) const;
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i);

    [[nodiscard]] std::size_t weight() const noexcept;
    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] bool intersects(const BitVector& other) const;
    [[nodiscard]] bool is_subset_of(const BitVector& other) const;

    /// Indices of set entries in increasing order.
    [[nodiscard]] std::vector<std::size_t> ones() const;

    /// Inverse of from_word. Requires size() <= 64.
    [[nodiscard]] word_type to_word() const;

    [[nodiscard]] std::span<const word_type> words() const noexcept { return words_; }

    BitVector& operator^=(const BitVector& other);
    BitVector& operator|=(const BitVector& other);
    BitVector& operator&=(const BitVector& other);
    void clear() noexcept;

    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

    friend bool operator==(const BitVector&, const BitVector&) = default;

    /// Total order: by length, then as an integer with entry 0 least significant.
    friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b);

    [[nodiscard]] std::string to_string() const;

private:
    void check_same_size(const BitVector& other) const;

    std::size_t length_ = 0;
    std::vector<word_type> words_;
};

class BitMatrix {
public:
    BitMatrix() = default;

    /// All-zero rows x cols matrix. Throws DimensionError if either is 0.
    BitMatrix(std::size_t rows, std::size_t cols);

    /// Throws DimensionError when rows is empty or ragged.
    explicit BitMatrix(std::vector<BitVector> rows);

    static BitMatrix identity(std::size_t k);

    /// Builds a matrix whose j-th column is columns[j].
    static BitMatrix from_columns(std::span<const BitVector> columns);

    static BitMatrix from_strings(std::span<const std::string_view> rows);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_.size(); }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

    [[nodiscard]] bool get(std::size_t i, std::size_t j) const { return rows_.at(i).get(j); }
    void set(std::size_t i, std::size_t j, bool value = true) { rows_.at(i).set(j, value); }

    [[nodiscard]] const BitVector& row(std::size_t i) const { return rows_.at(i); }
    [[nodiscard]] BitVector column(std::size_t j) const;

    /// Row vector times matrix: x . M over GF(2).
    [[nodiscard]] BitVector left_multiply(const BitVector& x) const;

    [[nodiscard]] BitMatrix transpose() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::vector<BitVector> rows_;
    std::size_t cols_ = 0;
};

/// GF(2) row rank by Gaussian elimination on a copy.
[[nodiscard]] std::size_t rank(const BitMatrix& m);

/// Rank of a list of equal-length vectors.
[[nodiscard]] std::size_t rank(std::span<const BitVector> vectors);

struct Rate {
    std::size_t numerator;
    std::size_t denominator;

    friend bool operator==(const Rate&, const Rate&) = default;
};

/// Largest k accepted by LinearCode::min_distance unless the caller raises it.
inline constexpr std::size_t kDefaultDistanceGuard = 24;

/// A binary linear [n, k] code given by a k x n generator of full row rank.
///
/// Immutable after construction. Derived data (columns, distance, identity
/// column map) is computed on first use and memoized; the memo is shared by
/// copies and filled at most once, so a code can be used from several
/// threads at the same time.
class LinearCode {
public:
    /// Throws InvalidArgument if rank(generator) < rows.
    explicit LinearCode(BitMatrix generator);

    [[nodiscard]] const BitMatrix& generator() const noexcept { return generator_; }
    [[nodiscard]] std::size_t k() const noexcept { return generator_.rows(); }
    [[nodiscard]] std::size_t n() const noexcept { return generator_.cols(); }
    [[nodiscard]] Rate rate() const;

    /// y = x . G. Throws DimensionError if |x| != k.
    [[nodiscard]] BitVector encode(const BitVector& x) const;

    /// Minimum weight over the 2^k - 1 nonzero codewords. Throws CapacityError
    /// when k exceeds `max_k`.
    [[nodiscard]] std::size_t min_distance(std::size_t max_k = kDefaultDistanceGuard) const;

    /// sigma with column sigma(i) = e_i, smallest column chosen per i; empty
    /// when some unit vector is not a column.
    [[nodiscard]] const std::optional<std::vector<std::size_t>>& identity_columns() const;
    [[nodiscard]] bool systematic() const { return identity_columns().has_value(); }

    [[nodiscard]] const std::vector<BitVector>& columns() const;

    /// Columns packed as single words (row i in bit i). Requires k <= 64.
    [[nodiscard]] std::span<const std::uint64_t> column_words() const;

private:
    struct Memo;

    BitMatrix generator_;
    std::shared_ptr<Memo> memo_;
};

}  // namespace batchcodes
