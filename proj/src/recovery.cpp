#include "batchcodes/recovery.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>

#include "batchcodes/errors.hpp"

namespace batchcodes {

SizeCap SizeCap::at_most(std::size_t r) {
    if (r == 0) throw InvalidArgument("recovery-set size cap must be at least 1");
    return SizeCap(r);
}

std::size_t SizeCap::value() const {
    if (!bounded()) throw InvalidArgument("unbounded cap has no value");
    return value_;
}

std::string SizeCap::to_string() const { return bounded() ? std::to_string(value_) : "inf"; }

namespace {

// Incremental XOR basis keyed by leading bit. Insertions are undone in
// reverse order, which the depth-first search guarantees.
class XorBasis {
public:
    /// Returns the slot used, or -1 if `v` is already in the span.
    int insert(std::uint64_t v) {
        while (v != 0) {
            const int lead = 63 - std::countl_zero(v);
            if (basis_[lead] == 0) {
                basis_[lead] = v;
                return lead;
            }
            v ^= basis_[lead];
        }
        return -1;
    }

    void erase(int slot) { basis_[slot] = 0; }

private:
    std::array<std::uint64_t, 64> basis_{};
};

class RecoverySearch {
public:
    RecoverySearch(const LinearCode& code, std::uint64_t target, std::span<const std::size_t> excluded,
                   std::size_t max_size, std::size_t max_count)
        : code_(code),
          words_(code.column_words()),
          target_(target),
          max_size_(std::min(max_size, code.k())),
          max_count_(max_count) {
        std::vector<bool> skip(code.n(), false);
        for (const std::size_t j : excluded) skip[j] = true;
        for (std::size_t j = 0; j < code.n(); ++j) {
            // A zero column is never part of an independent set.
            if (skip[j] || words_[j] == 0) continue;
            allowed_.push_back(j);
            by_value_[words_[j]].push_back(allowed_.size() - 1);
        }
    }

    RecoveryEnumeration run() {
        if (max_size_ > 0) descend(0, target_);
        return std::move(result_);
    }

private:
    // Extends `chosen_` with allowed_[pos..]; `residual` is target XOR sum(chosen).
    // Returns false once the enumeration is cut off.
    bool descend(std::size_t pos, std::uint64_t residual) {
        if (chosen_.size() + 1 == max_size_) {
            // One slot left: only a column equal to the residual can close the set.
            const auto it = by_value_.find(residual);
            if (it == by_value_.end()) return true;
            const auto& slots = it->second;
            for (auto s = std::lower_bound(slots.begin(), slots.end(), pos); s != slots.end(); ++s) {
                const int slot = basis_.insert(words_[allowed_[*s]]);
                if (slot < 0) continue;
                basis_.erase(slot);
                chosen_.push_back(allowed_[*s]);
                const bool keep_going = emit();
                chosen_.pop_back();
                if (!keep_going) return false;
            }
            return true;
        }
        for (std::size_t p = pos; p < allowed_.size(); ++p) {
            const std::uint64_t column = words_[allowed_[p]];
            const int slot = basis_.insert(column);
            if (slot < 0) continue;  // dependent on the chosen columns: never minimal
            chosen_.push_back(allowed_[p]);
            const std::uint64_t next = residual ^ column;
            bool keep_going = true;
            if (next == 0) {
                keep_going = emit();  // every superset contains this set
            } else {
                keep_going = descend(p + 1, next);
            }
            chosen_.pop_back();
            basis_.erase(slot);
            if (!keep_going) return false;
        }
        return true;
    }

    bool emit() {
        if (result_.sets.size() == max_count_) {
            result_.truncated = true;
            return false;
        }
        if (result_.sets.size() == kRecoveryEnumerationGuard) {
            throw CapacityError("recovery-set enumeration exceeded " + std::to_string(kRecoveryEnumerationGuard) +
                                " sets; pass a max_count");
        }
        result_.sets.push_back(make_recovery_set(code_, BitVector::from_word(code_.k(), target_), chosen_));
        return true;
    }

    const LinearCode& code_;
    std::span<const std::uint64_t> words_;
    std::uint64_t target_;
    std::size_t max_size_;
    std::size_t max_count_;
    std::vector<std::size_t> allowed_;
    std::map<std::uint64_t, std::vector<std::size_t>> by_value_;  // column value -> positions in allowed_
    std::vector<std::size_t> chosen_;
    XorBasis basis_;
    RecoveryEnumeration result_;
};

void check_arguments(const LinearCode& code, const BitVector& target, std::span<const std::size_t> excluded) {
    if (target.size() != code.k()) throw DimensionError("recovery target length must equal k");
    if (target.is_zero()) throw InvalidArgument("recovery target must be nonzero");
    for (const std::size_t j : excluded) {
        if (j >= code.n()) throw InvalidArgument("excluded column index out of range");
    }
    if (code.k() > BitVector::bits_per_word) throw CapacityError("recovery search supports k <= 64");
}

}  // namespace

RecoveryEnumeration enumerate_recovery_sets(const LinearCode& code, const BitVector& target,
                                            std::span<const std::size_t> excluded, SizeCap max_size,
                                            std::optional<std::size_t> max_count) {
    check_arguments(code, target, excluded);
    if (max_count && *max_count == 0) throw InvalidArgument("max_count must be positive");
    RecoverySearch search(code, target.to_word(), excluded, max_size.value_or(code.k()),
                          max_count.value_or(~std::size_t{0}));
    return search.run();
}

std::optional<std::size_t> min_recovery_size(const LinearCode& code, const BitVector& target,
                                             std::span<const std::size_t> excluded) {
    check_arguments(code, target, excluded);
    // Iterative deepening; minimal sets are independent, so size <= k.
    for (std::size_t s = 1; s <= code.k(); ++s) {
        RecoverySearch search(code, target.to_word(), excluded, s, 1);
        if (!search.run().sets.empty()) return s;
    }
    return std::nullopt;
}

BitVector column_sum(const LinearCode& code, std::span<const std::size_t> columns) {
    BitVector sum(code.k());
    for (const std::size_t j : columns) sum ^= code.columns().at(j);
    return sum;
}

RecoverySet make_recovery_set(const LinearCode& code, const BitVector& target, std::vector<std::size_t> columns) {
    BitVector mask(code.n());
    for (const std::size_t j : columns) mask.set(j);
    return RecoverySet{target, std::move(columns), std::move(mask)};
}

}  // namespace batchcodes
