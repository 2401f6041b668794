#pragma once

// Analysis reports and their JSON / plain-text renderings.
//
// JSON schema (all numbers are integers):
//   {"code":    {"k", "n", "source"},
//    "profile": {"n", "k", "d", "rate": {"numerator", "denominator"}, "systematic",
//                "all_symbol_locality" (null = some symbol unrecoverable),
//                "all_symbol_min_size": [...],
//                "caps": [{"cap" ("inf" or r), "batch_t", "pir_t",
//                          "all_symbol_availability", "all_symbol_packing",
//                          "info_symbol_availability" (null if not systematic),
//                          "info_symbol_packing"}]},
//    "bounds":  [{"name", "kind", "applicable", "reason", "rhs", "satisfied",
//                 "attained", "cap" (absent if r-independent), "parameters"}],
//    "plans":   [{"query": [1-based], "cap", "servable", "sets": [[1-based columns]]}]}

#include "json.hpp"
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "batchcodes/bounds.hpp"
#include "batchcodes/profile.hpp"
#include "batchcodes/query.hpp"
#include "batchcodes/search.hpp"

namespace batchcodes {

struct PlanRecord {
    Query query;
    SizeCap cap = SizeCap::unbounded();
    std::optional<ServingPlan> plan;
};

struct AnalysisReport {
    std::string source;
    CodeProfile profile;
    std::vector<BoundVerdict> bounds;
    std::vector<PlanRecord> plans;
};

[[nodiscard]] AnalysisReport analyze(const LinearCode& code, std::string source, std::span<const SizeCap> caps,
                                     std::span<const Query> queries = {});

[[nodiscard]] nlohmann::json to_json(const SizeCap& cap);
[[nodiscard]] nlohmann::json to_json(const CodeProfile& profile);
[[nodiscard]] nlohmann::json to_json(const BoundVerdict& verdict);
[[nodiscard]] nlohmann::json to_json(const PlanRecord& record);
[[nodiscard]] nlohmann::json to_json(const AnalysisReport& report);
[[nodiscard]] nlohmann::json to_json(const SearchResult& result);

/// Inverse of to_json(AnalysisReport). Throws nlohmann::json exceptions or
/// InvalidArgument on schema violations.
[[nodiscard]] AnalysisReport report_from_json(const nlohmann::json& j);

[[nodiscard]] std::string render_text(const AnalysisReport& report);
[[nodiscard]] std::string render_text(const std::vector<BoundVerdict>& bounds);
[[nodiscard]] std::string render_text(const SearchResult& result);

/// "T1={1}; T2={2,3}" with 1-based columns.
[[nodiscard]] std::string render_plan(const ServingPlan& plan);

}  // namespace batchcodes
