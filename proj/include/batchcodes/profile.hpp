#pragma once

// Exact code parameters: batch and PIR query sizes under a reconstruction-set
// cap, locality and availability of coded and information symbols, and the
// systematic LRC / PIR equivalence self-test.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "batchcodes/gf2.hpp"
#include "batchcodes/recovery.hpp"

namespace batchcodes {

/// Maximum number of pairwise-disjoint sets among `sets` (exact branch and
/// bound, seeded greedily). Stops early once `stop_at` is reached.
[[nodiscard]] std::size_t max_disjoint_packing(std::span<const RecoverySet> sets,
                                               std::optional<std::size_t> stop_at = std::nullopt);

/// Largest t such that every size-t query is servable with sets of size <= r;
/// 0 when some symbol cannot be recovered at all within r.
[[nodiscard]] std::size_t batch_t(const LinearCode& code, SizeCap r = SizeCap::unbounded());

/// min over i of the largest number of disjoint recovery sets for e_i within r.
[[nodiscard]] std::size_t pir_t(const LinearCode& code, SizeCap r = SizeCap::unbounded());

/// pir_t(code, r) >= t, decided with early exit.
[[nodiscard]] bool has_property_a(const LinearCode& code, std::size_t t, SizeCap r = SizeCap::unbounded());

struct SymbolRecovery {
    /// Smallest recovery set (unbounded size); nothing if unrecoverable.
    /// Zero for a coded symbol whose column is zero.
    std::optional<std::size_t> min_size;
    /// Disjoint recovery sets of size <= r. Nothing for a zero column, which
    /// is known without reading any symbol.
    std::optional<std::size_t> packing;
};

struct LrcProfile {
    /// max over symbols of min_size; nothing if some symbol is unrecoverable.
    std::optional<std::size_t> locality;
    /// min over symbols of packing (0 if some symbol has no set within r).
    std::size_t availability = 0;
    std::vector<SymbolRecovery> per_symbol;
};

/// All-symbol profile: target g_j, recovered from the other columns.
[[nodiscard]] LrcProfile lrc_profile(const LinearCode& code, SizeCap r);

/// Information-symbol profile: target e_i over all columns. With
/// `exclude_self`, the identity column sigma(i) may not be used for e_i.
/// Throws NotApplicable for a non-systematic code.
[[nodiscard]] LrcProfile info_lrc_profile(const LinearCode& code, SizeCap r, bool exclude_self = false);

/// Evaluates both sides of the equivalence "PIR with queries of size t and
/// sets <= r" <=> "every e_i has t - 1 disjoint sets <= r besides its
/// systematic copy" and returns whether they agree. Throws NotApplicable
/// for a non-systematic code.
[[nodiscard]] bool corollary_check(const LinearCode& code, std::size_t t, SizeCap r);

struct CapProfile {
    SizeCap cap = SizeCap::unbounded();
    std::size_t batch_t = 0;
    std::size_t pir_t = 0;
    std::size_t all_symbol_availability = 0;
    std::vector<std::optional<std::size_t>> all_symbol_packing;
    std::optional<std::size_t> info_symbol_availability;  // systematic codes only
    std::vector<std::size_t> info_symbol_packing;
};

struct CodeProfile {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    Rate rate{0, 1};
    bool systematic = false;
    std::optional<std::size_t> all_symbol_locality;
    std::vector<std::optional<std::size_t>> all_symbol_min_size;
    std::vector<CapProfile> caps;  // in the order requested
};

/// Caps used when none are requested.
[[nodiscard]] std::vector<SizeCap> default_profile_caps();

[[nodiscard]] CodeProfile profile_code(const LinearCode& code, std::span<const SizeCap> caps);

}  // namespace batchcodes
