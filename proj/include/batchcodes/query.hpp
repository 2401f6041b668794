#pragma once

// Servability of multiset batch queries: a query (i_1, ..., i_t) is served by
// t pairwise-disjoint column sets, the l-th summing to e_{i_l}.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "batchcodes/gf2.hpp"
#include "batchcodes/recovery.hpp"

namespace batchcodes {

/// A multiset of information-symbol indices (0-based), kept sorted.
class Query {
public:
    /// Throws InvalidArgument if `indices` is empty or an index is >= k.
    Query(std::vector<std::size_t> indices, std::size_t k);

    [[nodiscard]] const std::vector<std::size_t>& indices() const noexcept { return indices_; }
    [[nodiscard]] std::size_t size() const noexcept { return indices_.size(); }

    /// Comma-separated 1-based indices, e.g. "1,1,2,2".
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Query&, const Query&) = default;

private:
    std::vector<std::size_t> indices_;
};

/// Parses "1,1,2,2" (1-based). Throws ParseError on malformed text and
/// InvalidArgument for an index outside [1, k].
[[nodiscard]] Query parse_query(std::string_view text, std::size_t k);

struct Assignment {
    std::size_t position;  // index into Query::indices()
    RecoverySet set;
};

struct ServingPlan {
    std::vector<Assignment> assignments;  // ordered by position
};

/// Independent check: one assignment per query position, sets pairwise
/// disjoint, each summing to its unit vector, each within `r`.
[[nodiscard]] bool validate_plan(const LinearCode& code, const Query& query, const ServingPlan& plan, SizeCap r);

/// Plans queries against one code under a fixed size cap.
///
/// Per-symbol recovery lists are enumerated lazily with a count limit that
/// starts at 64 and doubles whenever a search over truncated lists fails, so
/// "unservable" is only reported once the lists involved are complete. Not
/// thread-safe; create one planner per thread.
class QueryPlanner {
public:
    static constexpr std::size_t kInitialListLimit = 64;

    QueryPlanner(const LinearCode& code, SizeCap r);

    [[nodiscard]] std::optional<ServingPlan> plan(const Query& query);

    [[nodiscard]] const LinearCode& code() const noexcept { return code_; }
    [[nodiscard]] SizeCap cap() const noexcept { return cap_; }

private:
    struct SymbolList {
        std::size_t limit = 0;
        RecoveryEnumeration sets;
    };

    const RecoveryEnumeration& list_for(std::size_t symbol);
    void escalate(std::size_t symbol);

    LinearCode code_;
    SizeCap cap_;
    std::vector<SymbolList> lists_;
};

/// Exact decision: a plan is returned whenever one exists. Deterministic.
[[nodiscard]] std::optional<ServingPlan> serve_query(const LinearCode& code, const Query& query,
                                                     SizeCap r = SizeCap::unbounded());

struct ServabilityResult {
    bool servable = true;
    std::optional<Query> witness;  // lexicographically first unservable query
};

/// Checks every canonical query of size t (C(k+t-1, t) of them) in
/// lexicographic order.
[[nodiscard]] ServabilityResult is_servable_all(const LinearCode& code, std::size_t t,
                                                SizeCap r = SizeCap::unbounded());

/// Same, reusing an existing planner's recovery lists.
[[nodiscard]] ServabilityResult is_servable_all(QueryPlanner& planner, std::size_t t);

}  // namespace batchcodes
