#include "batchcodes/search.hpp"

#include "batchcodes/errors.hpp"
#include "batchcodes/profile.hpp"
#include "batchcodes/query.hpp"

namespace batchcodes {

std::string to_string(SearchMode mode) { return mode == SearchMode::batch ? "batch" : "pir"; }

SearchMode parse_search_mode(std::string_view text) {
    if (text == "batch") return SearchMode::batch;
    if (text == "pir") return SearchMode::pir;
    throw InvalidArgument("search mode must be 'batch' or 'pir', got '" + std::string(text) + "'");
}

bool supports(const LinearCode& code, std::size_t t, SearchMode mode, SizeCap r_cap) {
    // Uniform queries are the cheap necessary condition; batch mode then checks the rest.
    if (!has_property_a(code, t, r_cap)) return false;
    if (mode == SearchMode::pir) return true;
    return is_servable_all(code, t, r_cap).servable;
}

namespace {

// Next nondecreasing sequence over [1, top]; false after the last one.
bool next_multiset(std::vector<std::uint64_t>& values, std::uint64_t top) {
    std::size_t p = values.size();
    while (p > 0 && values[p - 1] == top) --p;
    if (p == 0) return false;
    const std::uint64_t v = values[p - 1] + 1;
    std::fill(values.begin() + static_cast<std::ptrdiff_t>(p - 1), values.end(), v);
    return true;
}

std::optional<LinearCode> build(std::size_t k, const std::vector<std::uint64_t>& extra, bool systematic) {
    std::vector<BitVector> columns;
    if (systematic) {
        for (std::size_t i = 0; i < k; ++i) columns.push_back(BitVector::unit(k, i));
    }
    for (const std::uint64_t v : extra) columns.push_back(BitVector::from_word(k, v));
    if (!systematic && rank(columns) < k) return std::nullopt;
    return LinearCode(BitMatrix::from_columns(columns));
}

}  // namespace

SearchResult min_length(std::size_t k, std::size_t t, SearchMode mode, std::size_t n_max,
                        const SearchOptions& options) {
    if (k == 0 || t == 0) throw InvalidArgument("k and t must be at least 1");
    if (k > options.max_k) {
        throw CapacityError("search guard: k = " + std::to_string(k) + " exceeds " + std::to_string(options.max_k));
    }
    if (n_max < k) throw InvalidArgument("n_max must be at least k");
    if (n_max - k > options.max_redundancy) {
        throw CapacityError("search guard: n_max - k = " + std::to_string(n_max - k) + " exceeds " +
                            std::to_string(options.max_redundancy));
    }

    SearchResult result;
    result.k = k;
    result.t = t;
    result.mode = mode;
    result.r_cap = options.r_cap;
    result.n_max = n_max;

    const std::uint64_t top = (std::uint64_t{1} << k) - 1;
    for (std::size_t n = k; n <= n_max; ++n) {
        const std::size_t free_columns = options.systematic_only ? n - k : n;
        std::vector<std::uint64_t> extra(free_columns, 1);
        std::uint64_t rejected = 0;
        do {
            const auto code = build(k, extra, options.systematic_only);
            if (!code) continue;
            ++result.nodes_explored;
            if (supports(*code, t, mode, options.r_cap)) {
                result.optimal_n = n;
                result.witness = *code;
                return result;
            }
            ++rejected;
        } while (next_multiset(extra, top));
        result.rejected_per_length.push_back(rejected);
    }
    return result;
}

std::vector<RedundancyCell> redundancy_table(std::size_t k_max, std::size_t t_max, SearchMode mode,
                                             std::size_t n_slack, const SearchOptions& options) {
    std::vector<RedundancyCell> table;
    for (std::size_t k = 1; k <= k_max; ++k) {
        for (std::size_t t = 1; t <= t_max; ++t) {
            const SearchResult r = min_length(k, t, mode, k + n_slack, options);
            table.push_back(RedundancyCell{k, t, r.redundancy()});
        }
    }
    return table;
}

}  // namespace batchcodes
