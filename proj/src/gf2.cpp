#include "batchcodes/gf2.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <mutex>
#include <numeric>
#include <utility>

#include "batchcodes/errors.hpp"

namespace batchcodes {

namespace {

constexpr std::size_t word_count(std::size_t bits) {
    return (bits + BitVector::bits_per_word - 1) / BitVector::bits_per_word;
}

}  // namespace

// ---------------------------------------------------------------------------
// BitVector

BitVector::BitVector(std::size_t length) : length_(length), words_(word_count(length), 0) {
    if (length == 0) throw DimensionError("BitVector length must be positive");
}

BitVector BitVector::unit(std::size_t length, std::size_t index) {
    BitVector v(length);
    v.set(index);
    return v;
}

BitVector BitVector::from_word(std::size_t length, word_type word) {
    if (length > bits_per_word) throw DimensionError("from_word supports at most 64 bits");
    BitVector v(length);
    if (length < bits_per_word) word &= (word_type{1} << length) - 1;
    v.words_[0] = word;
    return v;
}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw InvalidArgument("bit string may only contain '0' and '1'");
        }
    }
    return v;
}

bool BitVector::get(std::size_t i) const {
    if (i >= length_) throw DimensionError("bit index out of range");
    return (words_[i / bits_per_word] >> (i % bits_per_word)) & 1U;
}

void BitVector::set(std::size_t i, bool value) {
    if (i >= length_) throw DimensionError("bit index out of range");
    const word_type mask = word_type{1} << (i % bits_per_word);
    if (value) {
        words_[i / bits_per_word] |= mask;
    } else {
        words_[i / bits_per_word] &= ~mask;
    }
}

void BitVector::flip(std::size_t i) {
    if (i >= length_) throw DimensionError("bit index out of range");
    words_[i / bits_per_word] ^= word_type{1} << (i % bits_per_word);
}

std::size_t BitVector::weight() const noexcept {
    std::size_t w = 0;
    for (const word_type word : words_) w += static_cast<std::size_t>(std::popcount(word));
    return w;
}

bool BitVector::is_zero() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
}

bool BitVector::intersects(const BitVector& other) const {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & other.words_[w]) != 0) return true;
    }
    return false;
}

bool BitVector::is_subset_of(const BitVector& other) const {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & ~other.words_[w]) != 0) return false;
    }
    return true;
}

std::vector<std::size_t> BitVector::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        word_type word = words_[w];
        while (word != 0) {
            out.push_back(w * bits_per_word + static_cast<std::size_t>(std::countr_zero(word)));
            word &= word - 1;
        }
    }
    return out;
}

BitVector::word_type BitVector::to_word() const {
    if (length_ > bits_per_word) throw DimensionError("to_word supports at most 64 bits");
    return words_.empty() ? 0 : words_[0];
}

BitVector& BitVector::operator^=(const BitVector& other) {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
    check_same_size(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

void BitVector::clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    for (std::size_t w = a.words_.size(); w-- > 0;) {
        if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::string BitVector::to_string() const {
    std::string s(length_, '0');
    for (const std::size_t i : ones()) s[i] = '1';
    return s;
}

void BitVector::check_same_size(const BitVector& other) const {
    if (length_ != other.length_) throw DimensionError("BitVector length mismatch");
}

// ---------------------------------------------------------------------------
// BitMatrix

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols) {
    if (rows == 0 || cols == 0) throw DimensionError("BitMatrix dimensions must be positive");
    rows_.assign(rows, BitVector(cols));
}

BitMatrix::BitMatrix(std::vector<BitVector> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw DimensionError("BitMatrix needs at least one row");
    cols_ = rows_.front().size();
    if (cols_ == 0) throw DimensionError("BitMatrix needs at least one column");
    for (const BitVector& r : rows_) {
        if (r.size() != cols_) throw DimensionError("BitMatrix rows have different lengths");
    }
}

BitMatrix BitMatrix::identity(std::size_t k) {
    BitMatrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::from_columns(std::span<const BitVector> columns) {
    if (columns.empty()) throw DimensionError("BitMatrix needs at least one column");
    BitMatrix m(columns.front().size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != m.rows()) throw DimensionError("columns have different lengths");
        for (const std::size_t i : columns[j].ones()) m.set(i, j);
    }
    return m;
}

BitMatrix BitMatrix::from_strings(std::span<const std::string_view> rows) {
    std::vector<BitVector> out;
    out.reserve(rows.size());
    for (const std::string_view r : rows) out.push_back(BitVector::from_string(r));
    return BitMatrix(std::move(out));
}

BitVector BitMatrix::column(std::size_t j) const {
    if (j >= cols_) throw DimensionError("column index out of range");
    BitVector c(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].get(j)) c.set(i);
    }
    return c;
}

BitVector BitMatrix::left_multiply(const BitVector& x) const {
    if (x.size() != rows_.size()) {
        throw DimensionError("vector length " + std::to_string(x.size()) + " does not match " +
                             std::to_string(rows_.size()) + " matrix rows");
    }
    BitVector y(cols_);
    for (const std::size_t i : x.ones()) y ^= rows_[i];
    return y;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (const std::size_t j : rows_[i].ones()) t.set(j, i);
    }
    return t;
}

std::size_t rank(std::span<const BitVector> vectors) {
    std::vector<BitVector> work(vectors.begin(), vectors.end());
    if (work.empty()) return 0;
    const std::size_t width = work.front().size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < width && r < work.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < work.size() && !work[pivot].get(col)) ++pivot;
        if (pivot == work.size()) continue;
        std::swap(work[r], work[pivot]);
        for (std::size_t i = r + 1; i < work.size(); ++i) {
            if (work[i].get(col)) work[i] ^= work[r];
        }
        ++r;
    }
    return r;
}

std::size_t rank(const BitMatrix& m) {
    std::vector<BitVector> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return rank(rows);
}

// ---------------------------------------------------------------------------
// LinearCode

struct LinearCode::Memo {
    std::once_flag columns_once;
    std::vector<BitVector> columns;
    std::vector<std::uint64_t> column_words;

    std::once_flag identity_once;
    std::optional<std::vector<std::size_t>> identity;

    std::mutex distance_mutex;
    std::optional<std::size_t> distance;
};

LinearCode::LinearCode(BitMatrix generator)
    : generator_(std::move(generator)), memo_(std::make_shared<Memo>()) {
    if (generator_.rows() == 0) throw DimensionError("generator matrix is empty");
    const std::size_t r = rank(generator_);
    if (r != generator_.rows()) {
        throw InvalidArgument("generator matrix is rank deficient: rank " + std::to_string(r) + " < k = " +
                              std::to_string(generator_.rows()));
    }
}

Rate LinearCode::rate() const {
    const std::size_t g = std::gcd(k(), n());
    return Rate{k() / g, n() / g};
}

BitVector LinearCode::encode(const BitVector& x) const { return generator_.left_multiply(x); }

std::size_t LinearCode::min_distance(std::size_t max_k) const {
    // Guarded by a mutex rather than call_once so a CapacityError does not
    // poison later calls that pass a larger guard.
    std::lock_guard lock(memo_->distance_mutex);
    if (memo_->distance) return *memo_->distance;
    if (k() > max_k) {
        throw CapacityError("min_distance enumerates 2^k codewords; k = " + std::to_string(k()) +
                            " exceeds the guard " + std::to_string(max_k));
    }
    // Gray-code walk: consecutive information vectors differ in one row.
    BitVector codeword(n());
    std::size_t best = std::numeric_limits<std::size_t>::max();
    const std::uint64_t total = std::uint64_t{1} << k();
    for (std::uint64_t step = 1; step < total; ++step) {
        codeword ^= generator_.row(static_cast<std::size_t>(std::countr_zero(step)));
        best = std::min(best, codeword.weight());
    }
    memo_->distance = best;
    return best;
}

const std::optional<std::vector<std::size_t>>& LinearCode::identity_columns() const {
    std::call_once(memo_->identity_once, [this] {
        const auto& cols = columns();
        std::vector<std::size_t> sigma(k(), n());
        for (std::size_t j = 0; j < n(); ++j) {
            if (cols[j].weight() != 1) continue;
            const std::size_t i = cols[j].ones().front();
            if (sigma[i] == n()) sigma[i] = j;
        }
        if (std::find(sigma.begin(), sigma.end(), n()) == sigma.end()) memo_->identity = std::move(sigma);
    });
    return memo_->identity;
}

const std::vector<BitVector>& LinearCode::columns() const {
    std::call_once(memo_->columns_once, [this] {
        memo_->columns.reserve(n());
        for (std::size_t j = 0; j < n(); ++j) memo_->columns.push_back(generator_.column(j));
        if (k() <= BitVector::bits_per_word) {
            memo_->column_words.reserve(n());
            for (const BitVector& c : memo_->columns) memo_->column_words.push_back(c.to_word());
        }
    });
    return memo_->columns;
}

std::span<const std::uint64_t> LinearCode::column_words() const {
    if (k() > BitVector::bits_per_word) throw CapacityError("packed columns require k <= 64");
    columns();
    return memo_->column_words;
}

}  // namespace batchcodes
