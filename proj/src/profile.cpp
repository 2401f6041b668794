#include "batchcodes/profile.hpp"

#include <algorithm>
#include <numeric>

#include "batchcodes/errors.hpp"
#include "batchcodes/query.hpp"

namespace batchcodes {

namespace {

class PackingSolver {
public:
    PackingSolver(std::span<const RecoverySet> sets, std::optional<std::size_t> stop_at)
        : sets_(sets), stop_at_(stop_at.value_or(~std::size_t{0})) {}

    std::size_t solve() {
        if (sets_.empty()) return 0;
        std::vector<std::size_t> order(sets_.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return sets_[a].size() < sets_[b].size(); });

        // Greedy seed, smallest sets first.
        BitVector used(sets_.front().mask.size());
        for (const std::size_t s : order) {
            if (!sets_[s].mask.intersects(used)) {
                used |= sets_[s].mask;
                ++best_;
            }
        }
        if (best_ >= stop_at_) return best_;
        used.clear();
        branch(order, used, 0, used.size());
        return best_;
    }

private:
    // `candidates` are disjoint from `used`, sorted by size.
    void branch(const std::vector<std::size_t>& candidates, BitVector& used, std::size_t count, std::size_t free) {
        if (best_ >= stop_at_) return;
        if (count > best_) best_ = count;
        if (candidates.empty()) return;

        // Any m disjoint sets occupy at least the m smallest sizes' worth of columns.
        std::size_t fit = 0;
        std::size_t room = free;
        for (const std::size_t s : candidates) {
            if (sets_[s].size() > room) break;
            room -= sets_[s].size();
            ++fit;
        }
        if (count + fit <= best_) return;

        const RecoverySet& head = sets_[candidates.front()];
        std::vector<std::size_t> rest;
        rest.reserve(candidates.size());
        for (std::size_t c = 1; c < candidates.size(); ++c) {
            if (!sets_[candidates[c]].mask.intersects(head.mask)) rest.push_back(candidates[c]);
        }
        used |= head.mask;
        branch(rest, used, count + 1, free - head.size());
        used ^= head.mask;

        const std::vector<std::size_t> without_head(candidates.begin() + 1, candidates.end());
        branch(without_head, used, count, free);
    }

    std::span<const RecoverySet> sets_;
    std::size_t stop_at_;
    std::size_t best_ = 0;
};

std::size_t packing_for(const LinearCode& code, const BitVector& target, std::span<const std::size_t> excluded,
                        SizeCap r, std::optional<std::size_t> stop_at = std::nullopt) {
    const RecoveryEnumeration sets = enumerate_recovery_sets(code, target, excluded, r);
    return max_disjoint_packing(sets.sets, stop_at);
}

const std::vector<std::size_t>& require_identity(const LinearCode& code) {
    const auto& sigma = code.identity_columns();
    if (!sigma) throw NotApplicable("code is not systematic: some unit vector is not a column of the generator");
    return *sigma;
}

std::vector<std::optional<std::size_t>> coded_min_sizes(const LinearCode& code) {
    std::vector<std::optional<std::size_t>> out;
    out.reserve(code.n());
    for (std::size_t j = 0; j < code.n(); ++j) {
        const BitVector& column = code.columns()[j];
        if (column.is_zero()) {
            out.emplace_back(0);
        } else {
            const std::size_t self[] = {j};
            out.push_back(min_recovery_size(code, column, self));
        }
    }
    return out;
}

std::vector<std::optional<std::size_t>> coded_packings(const LinearCode& code, SizeCap r) {
    std::vector<std::optional<std::size_t>> out;
    out.reserve(code.n());
    for (std::size_t j = 0; j < code.n(); ++j) {
        const BitVector& column = code.columns()[j];
        if (column.is_zero()) {
            out.emplace_back(std::nullopt);
        } else {
            const std::size_t self[] = {j};
            out.emplace_back(packing_for(code, column, self, r));
        }
    }
    return out;
}

std::optional<std::size_t> worst_locality(const std::vector<std::optional<std::size_t>>& min_sizes) {
    std::size_t worst = 0;
    for (const auto& s : min_sizes) {
        if (!s) return std::nullopt;
        worst = std::max(worst, *s);
    }
    return worst;
}

std::size_t worst_availability(const std::vector<std::optional<std::size_t>>& packings) {
    std::optional<std::size_t> worst;
    for (const auto& p : packings) {
        if (p) worst = worst ? std::min(*worst, *p) : *p;
    }
    return worst.value_or(0);
}

std::vector<std::size_t> info_packings(const LinearCode& code, SizeCap r, bool exclude_self) {
    const auto& sigma = require_identity(code);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < code.k(); ++i) {
        std::vector<std::size_t> excluded;
        if (exclude_self) excluded.push_back(sigma[i]);
        out.push_back(packing_for(code, BitVector::unit(code.k(), i), excluded, r));
    }
    return out;
}

}  // namespace

std::size_t max_disjoint_packing(std::span<const RecoverySet> sets, std::optional<std::size_t> stop_at) {
    return PackingSolver(sets, stop_at).solve();
}

std::size_t batch_t(const LinearCode& code, SizeCap r) {
    QueryPlanner planner(code, r);
    // No query larger than n is servable, so the loop ends by t = n + 1.
    for (std::size_t t = 1;; ++t) {
        if (!is_servable_all(planner, t).servable) return t - 1;
    }
}

std::size_t pir_t(const LinearCode& code, SizeCap r) {
    std::optional<std::size_t> worst;
    for (std::size_t i = 0; i < code.k(); ++i) {
        const std::size_t p = packing_for(code, BitVector::unit(code.k(), i), {}, r, worst);
        worst = worst ? std::min(*worst, p) : p;
        if (*worst == 0) break;
    }
    return worst.value_or(0);
}

bool has_property_a(const LinearCode& code, std::size_t t, SizeCap r) {
    for (std::size_t i = 0; i < code.k(); ++i) {
        if (packing_for(code, BitVector::unit(code.k(), i), {}, r, t) < t) return false;
    }
    return true;
}

LrcProfile lrc_profile(const LinearCode& code, SizeCap r) {
    LrcProfile profile;
    const auto min_sizes = coded_min_sizes(code);
    const auto packings = coded_packings(code, r);
    profile.locality = worst_locality(min_sizes);
    profile.availability = worst_availability(packings);
    for (std::size_t j = 0; j < code.n(); ++j) profile.per_symbol.push_back({min_sizes[j], packings[j]});
    return profile;
}

LrcProfile info_lrc_profile(const LinearCode& code, SizeCap r, bool exclude_self) {
    const auto& sigma = require_identity(code);
    LrcProfile profile;
    const auto packings = info_packings(code, r, exclude_self);
    std::vector<std::optional<std::size_t>> min_sizes;
    for (std::size_t i = 0; i < code.k(); ++i) {
        std::vector<std::size_t> excluded;
        if (exclude_self) excluded.push_back(sigma[i]);
        min_sizes.push_back(min_recovery_size(code, BitVector::unit(code.k(), i), excluded));
        profile.per_symbol.push_back({min_sizes.back(), packings[i]});
    }
    profile.locality = worst_locality(min_sizes);
    profile.availability = packings.empty() ? 0 : *std::min_element(packings.begin(), packings.end());
    return profile;
}

bool corollary_check(const LinearCode& code, std::size_t t, SizeCap r) {
    if (t == 0) throw InvalidArgument("query size t must be at least 1");
    const auto& sigma = require_identity(code);
    const bool pir_side = pir_t(code, r) >= t;
    bool lrc_side = true;
    for (std::size_t i = 0; i < code.k() && lrc_side; ++i) {
        const std::size_t self[] = {sigma[i]};
        lrc_side = packing_for(code, BitVector::unit(code.k(), i), self, r) >= t - 1;
    }
    return pir_side == lrc_side;
}

std::vector<SizeCap> default_profile_caps() {
    return {SizeCap::at_most(1), SizeCap::at_most(2), SizeCap::at_most(3), SizeCap::unbounded()};
}

CodeProfile profile_code(const LinearCode& code, std::span<const SizeCap> caps) {
    CodeProfile profile;
    profile.n = code.n();
    profile.k = code.k();
    profile.d = code.min_distance();
    profile.rate = code.rate();
    profile.systematic = code.systematic();
    profile.all_symbol_min_size = coded_min_sizes(code);
    profile.all_symbol_locality = worst_locality(profile.all_symbol_min_size);
    for (const SizeCap cap : caps) {
        CapProfile entry;
        entry.cap = cap;
        entry.batch_t = batch_t(code, cap);
        entry.pir_t = pir_t(code, cap);
        entry.all_symbol_packing = coded_packings(code, cap);
        entry.all_symbol_availability = worst_availability(entry.all_symbol_packing);
        if (profile.systematic) {
            entry.info_symbol_packing = info_packings(code, cap, false);
            entry.info_symbol_availability =
                *std::min_element(entry.info_symbol_packing.begin(), entry.info_symbol_packing.end());
        }
        profile.caps.push_back(std::move(entry));
    }
    return profile;
}

}  // namespace batchcodes
