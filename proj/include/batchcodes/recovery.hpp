#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "batchcodes/gf2.hpp"

namespace batchcodes {

/// Upper limit on a recovery-set size: a positive integer or unbounded.
class SizeCap {
public:
    static constexpr SizeCap unbounded() noexcept { return SizeCap(); }

    /// Throws InvalidArgument for r = 0.
    static SizeCap at_most(std::size_t r);

    [[nodiscard]] constexpr bool bounded() const noexcept { return value_ != 0; }
    [[nodiscard]] std::size_t value() const;
    [[nodiscard]] constexpr bool admits(std::size_t size) const noexcept { return value_ == 0 || size <= value_; }

    /// The cap as a number, with unbounded mapped to `fallback`.
    [[nodiscard]] constexpr std::size_t value_or(std::size_t fallback) const noexcept {
        return value_ == 0 ? fallback : value_;
    }

    /// "inf" or the decimal value.
    [[nodiscard]] std::string to_string() const;

    friend constexpr bool operator==(const SizeCap&, const SizeCap&) = default;

    /// Unbounded sorts after every finite cap.
    friend constexpr bool operator<(const SizeCap& a, const SizeCap& b) noexcept {
        return a.value_or(~std::size_t{0}) < b.value_or(~std::size_t{0});
    }

private:
    constexpr SizeCap() = default;
    constexpr explicit SizeCap(std::size_t r) : value_(r) {}

    std::size_t value_ = 0;
};

/// A minimal set of columns whose XOR is `target`.
struct RecoverySet {
    BitVector target;
    std::vector<std::size_t> columns;  // increasing, 0-based
    BitVector mask;                    // same columns as a length-n indicator

    [[nodiscard]] std::size_t size() const noexcept { return columns.size(); }

    friend bool operator==(const RecoverySet&, const RecoverySet&) = default;
};

struct RecoveryEnumeration {
    std::vector<RecoverySet> sets;
    /// More sets exist beyond the requested max_count.
    bool truncated = false;
};

/// Hard ceiling on the number of sets one unbounded enumeration may return.
inline constexpr std::size_t kRecoveryEnumerationGuard = std::size_t{1} << 22;

/// All minimal recovery sets for `target` that avoid `excluded` and respect
/// `max_size`, in lexicographic order of their sorted index lists, truncated
/// after `max_count` sets.
///
/// Throws InvalidArgument for a zero target or an excluded index >= n,
/// DimensionError when |target| != k, and CapacityError when k > 64 or an
/// unbounded enumeration passes kRecoveryEnumerationGuard.
[[nodiscard]] RecoveryEnumeration enumerate_recovery_sets(const LinearCode& code, const BitVector& target,
                                                          std::span<const std::size_t> excluded = {},
                                                          SizeCap max_size = SizeCap::unbounded(),
                                                          std::optional<std::size_t> max_count = std::nullopt);

/// Size of the smallest recovery set for `target` avoiding `excluded`, or
/// nothing when `target` is outside the span of the remaining columns.
[[nodiscard]] std::optional<std::size_t> min_recovery_size(const LinearCode& code, const BitVector& target,
                                                           std::span<const std::size_t> excluded = {});

/// XOR of the given columns of the generator.
[[nodiscard]] BitVector column_sum(const LinearCode& code, std::span<const std::size_t> columns);

/// Builds a RecoverySet from 0-based column indices without any checks.
[[nodiscard]] RecoverySet make_recovery_set(const LinearCode& code, const BitVector& target,
                                            std::vector<std::size_t> columns);

}  // namespace batchcodes
