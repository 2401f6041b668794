#include "batchcodes/query.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "batchcodes/errors.hpp"

namespace batchcodes {

Query::Query(std::vector<std::size_t> indices, std::size_t k) : indices_(std::move(indices)) {
    if (indices_.empty()) throw InvalidArgument("query must request at least one symbol");
    for (const std::size_t i : indices_) {
        if (i >= k) {
            throw InvalidArgument("query index " + std::to_string(i + 1) + " outside [1, " + std::to_string(k) + "]");
        }
    }
    std::sort(indices_.begin(), indices_.end());
}

std::string Query::to_string() const {
    std::string s;
    for (const std::size_t i : indices_) {
        if (!s.empty()) s += ',';
        s += std::to_string(i + 1);
    }
    return s;
}

Query parse_query(std::string_view text, std::size_t k) {
    std::vector<std::size_t> indices;
    std::size_t column = 1;
    while (true) {
        const std::size_t comma = text.find(',');
        const std::string_view token = text.substr(0, comma);
        long long value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            throw ParseError(1, column, "expected a 1-based symbol index, got '" + std::string(token) + "'");
        }
        if (value < 1 || static_cast<unsigned long long>(value) > k) {
            throw InvalidArgument("query index " + std::to_string(value) + " outside [1, " + std::to_string(k) + "]");
        }
        indices.push_back(static_cast<std::size_t>(value - 1));
        if (comma == std::string_view::npos) break;
        column += comma + 1;
        text.remove_prefix(comma + 1);
    }
    return Query(std::move(indices), k);
}

bool validate_plan(const LinearCode& code, const Query& query, const ServingPlan& plan, SizeCap r) {
    if (plan.assignments.size() != query.size()) return false;
    std::vector<bool> used(code.n(), false);
    std::vector<bool> position_seen(query.size(), false);
    for (const Assignment& a : plan.assignments) {
        if (a.position >= query.size() || position_seen[a.position]) return false;
        position_seen[a.position] = true;
        if (a.set.columns.empty() || !r.admits(a.set.size())) return false;
        for (const std::size_t j : a.set.columns) {
            if (j >= code.n() || used[j]) return false;
            used[j] = true;
        }
        if (column_sum(code, a.set.columns) != BitVector::unit(code.k(), query.indices()[a.position])) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

QueryPlanner::QueryPlanner(const LinearCode& code, SizeCap r) : code_(code), cap_(r), lists_(code.k()) {}

const RecoveryEnumeration& QueryPlanner::list_for(std::size_t symbol) {
    SymbolList& entry = lists_.at(symbol);
    if (entry.limit == 0) {
        entry.limit = kInitialListLimit;
        entry.sets = enumerate_recovery_sets(code_, BitVector::unit(code_.k(), symbol), {}, cap_, entry.limit);
    }
    return entry.sets;
}

void QueryPlanner::escalate(std::size_t symbol) {
    SymbolList& entry = lists_.at(symbol);
    entry.limit *= 2;
    entry.sets = enumerate_recovery_sets(code_, BitVector::unit(code_.k(), symbol), {}, cap_, entry.limit);
}

namespace {

struct Group {
    std::size_t symbol;
    std::size_t count;
    const std::vector<RecoverySet>* sets;
    std::vector<std::size_t> chosen;  // indices into *sets
};

class PackingSearch {
public:
    PackingSearch(std::vector<Group>& groups, std::size_t n) : groups_(groups), used_(n) {}

    bool run() { return place_group(0); }

private:
    bool place_group(std::size_t g) {
        if (g == groups_.size()) return true;
        return choose(g, groups_[g].count, 0);
    }

    // Every symbol still to be placed must see enough sets disjoint from the
    // used columns, and the smallest of those must fit in the free columns.
    // Group g only draws from its list at positions >= start.
    bool feasible(std::size_t g, std::size_t need, std::size_t start) {
        std::size_t columns_needed = 0;
        for (std::size_t h = g; h < groups_.size(); ++h) {
            const std::size_t want = h == g ? need : groups_[h].count;
            const auto& sets = *groups_[h].sets;
            sizes_.clear();
            for (std::size_t s = h == g ? start : 0; s < sets.size(); ++s) {
                if (!sets[s].mask.intersects(used_)) sizes_.push_back(sets[s].size());
            }
            if (sizes_.size() < want) return false;
            std::partial_sort(sizes_.begin(), sizes_.begin() + static_cast<std::ptrdiff_t>(want), sizes_.end());
            for (std::size_t i = 0; i < want; ++i) columns_needed += sizes_[i];
        }
        return columns_needed <= used_.size() - used_.weight();
    }

    bool choose(std::size_t g, std::size_t need, std::size_t start) {
        if (need == 0) return place_group(g + 1);
        if (!feasible(g, need, start)) return false;
        const auto& sets = *groups_[g].sets;
        for (std::size_t s = start; s + need <= sets.size(); ++s) {
            if (sets[s].mask.intersects(used_)) continue;
            used_ |= sets[s].mask;
            groups_[g].chosen.push_back(s);
            if (choose(g, need - 1, s + 1)) return true;
            groups_[g].chosen.pop_back();
            used_ ^= sets[s].mask;
        }
        return false;
    }

    std::vector<Group>& groups_;
    BitVector used_;
    std::vector<std::size_t> sizes_;
};

}  // namespace

std::optional<ServingPlan> QueryPlanner::plan(const Query& query) {
    for (const std::size_t i : query.indices()) {
        if (i >= code_.k()) throw InvalidArgument("query index outside [1, k]");
    }
    while (true) {
        std::vector<Group> groups;
        for (const std::size_t i : query.indices()) {
            if (!groups.empty() && groups.back().symbol == i) {
                ++groups.back().count;
            } else {
                groups.push_back(Group{i, 1, nullptr, {}});
            }
        }
        for (Group& g : groups) g.sets = &list_for(g.symbol).sets;
        // Fail-first: symbols with the fewest recovery sets are placed first.
        std::stable_sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
            return a.sets->size() < b.sets->size();
        });

        PackingSearch search(groups, code_.n());
        if (search.run()) {
            std::sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) { return a.symbol < b.symbol; });
            ServingPlan plan;
            std::size_t position = 0;
            for (const Group& g : groups) {
                for (const std::size_t s : g.chosen) plan.assignments.push_back(Assignment{position++, (*g.sets)[s]});
            }
            return plan;
        }

        bool escalated = false;
        for (const Group& g : groups) {
            if (lists_[g.symbol].sets.truncated) {
                escalate(g.symbol);
                escalated = true;
            }
        }
        if (!escalated) return std::nullopt;
    }
}

std::optional<ServingPlan> serve_query(const LinearCode& code, const Query& query, SizeCap r) {
    QueryPlanner planner(code, r);
    return planner.plan(query);
}

ServabilityResult is_servable_all(QueryPlanner& planner, std::size_t t) {
    if (t == 0) throw InvalidArgument("query size t must be at least 1");
    const std::size_t k = planner.code().k();
    std::vector<std::size_t> indices(t, 0);
    while (true) {
        Query query(indices, k);
        if (!planner.plan(query)) return ServabilityResult{false, std::move(query)};
        // Next nondecreasing sequence in lexicographic order.
        std::size_t p = t;
        while (p > 0 && indices[p - 1] == k - 1) --p;
        if (p == 0) return ServabilityResult{true, std::nullopt};
        const std::size_t v = indices[p - 1] + 1;
        std::fill(indices.begin() + static_cast<std::ptrdiff_t>(p - 1), indices.end(), v);
    }
}

ServabilityResult is_servable_all(const LinearCode& code, std::size_t t, SizeCap r) {
    QueryPlanner planner(code, r);
    return is_servable_all(planner, t);
}

}  // namespace batchcodes
