#pragma once

// Exhaustive search for the shortest systematic batch / PIR codes at small k.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "batchcodes/gf2.hpp"
#include "batchcodes/recovery.hpp"

namespace batchcodes {

enum class SearchMode { batch, pir };

[[nodiscard]] std::string to_string(SearchMode mode);

/// Throws InvalidArgument for anything other than "batch" or "pir".
[[nodiscard]] SearchMode parse_search_mode(std::string_view text);

struct SearchOptions {
    SizeCap r_cap = SizeCap::unbounded();
    /// Generators restricted to [I | A]. When false, every full-rank generator
    /// is tried up to column permutation.
    bool systematic_only = true;
    std::size_t max_k = 5;
    std::size_t max_redundancy = 5;  // guard on n_max - k
};

struct SearchResult {
    std::size_t k = 0;
    std::size_t t = 0;
    SearchMode mode = SearchMode::batch;
    SizeCap r_cap = SizeCap::unbounded();
    std::size_t n_max = 0;
    std::optional<std::size_t> optimal_n;
    std::optional<LinearCode> witness;
    std::uint64_t nodes_explored = 0;
    /// Candidates rejected at each length k, k+1, ... that was swept in full.
    std::vector<std::uint64_t> rejected_per_length;

    [[nodiscard]] std::optional<std::size_t> redundancy() const {
        return optimal_n ? std::optional<std::size_t>(*optimal_n - k) : std::nullopt;
    }
};

/// Whether `code` supports queries of size t under the cap (all queries in
/// batch mode, uniform queries in PIR mode).
[[nodiscard]] bool supports(const LinearCode& code, std::size_t t, SearchMode mode, SizeCap r_cap);

/// Sweeps n = k, k+1, ..., n_max over canonical generators and returns the
/// first length admitting a passing code, with the canonically first witness.
/// Canonical: parity (or, without systematic_only, all) columns are nonzero and
/// nondecreasing as integers with row 1 least significant. A code with a zero
/// column passes only if a shorter one does, so zero columns are never needed.
/// Throws CapacityError past the guards in `options`.
[[nodiscard]] SearchResult min_length(std::size_t k, std::size_t t, SearchMode mode, std::size_t n_max,
                                      const SearchOptions& options = {});

struct RedundancyCell {
    std::size_t k = 0;
    std::size_t t = 0;
    std::optional<std::size_t> redundancy;  // nothing if not found within the slack
};

/// min_length for every k in [1, k_max] and t in [1, t_max], with n_max = k + n_slack.
[[nodiscard]] std::vector<RedundancyCell> redundancy_table(std::size_t k_max, std::size_t t_max, SearchMode mode,
                                                           std::size_t n_slack, const SearchOptions& options = {});

}  // namespace batchcodes
