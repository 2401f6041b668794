#pragma once

// Closed-form bounds on the length of LRCs and of batch / PIR codes with
// restricted reconstruction-set size, evaluated in exact integer arithmetic.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "batchcodes/profile.hpp"

namespace batchcodes {

/// ceil(a / b) for a >= 0, b > 0.
[[nodiscard]] std::int64_t ceil_div(std::int64_t a, std::int64_t b);

/// n >= k + d - 1.
[[nodiscard]] std::int64_t singleton(std::size_t k, std::size_t d);

/// n >= k + d + ceil(k/r) - 2 (all-symbol locality r).
[[nodiscard]] std::int64_t gopalan_lrc(std::size_t k, std::size_t d, std::size_t r);

/// n >= k + d + ceil((delta(k-1)+1) / (delta(r-1)+1)) - 2 (locality r, availability delta).
[[nodiscard]] std::int64_t wang_zhang(std::size_t k, std::size_t d, std::size_t r, std::size_t delta);

struct PlotkinVerdict {
    bool applicable = false;  // q t > (q-1) n
    std::int64_t cap = 0;     // floor(q t / (q t - (q-1) n))
    bool holds = false;       // q^k <= cap
    bool attained = false;    // q^k == cap
};

/// Plotkin-type cardinality bound with the query size t in place of d.
[[nodiscard]] PlotkinVerdict plotkin_batch(std::size_t n, std::size_t k, std::size_t t, std::size_t q = 2);

/// n >= k + d + (t-1)(ceil(k/(rt-t+1)) - 1) - 1.
[[nodiscard]] std::int64_t zs_base(std::size_t k, std::size_t d, std::size_t r, std::size_t t);

struct MaximizedBound {
    std::int64_t rhs = 0;
    std::size_t beta = 0;  // smallest maximizing beta
};

/// max over beta in [1, t] of zs_base(k, d, r, beta).
[[nodiscard]] MaximizedBound zs_best(std::size_t k, std::size_t d, std::size_t r, std::size_t t);

/// Systematic variant: k + d + max over beta in [2, t] of
/// (beta-1)(ceil(k/(r beta - beta - r + 2)) - 1) - 1. Values of beta with a
/// non-positive denominator are skipped. Throws NotApplicable for t < 2.
[[nodiscard]] MaximizedBound zs_systematic(std::size_t k, std::size_t d, std::size_t r, std::size_t t);

struct RefinedBound {
    bool applicable = false;
    std::string reason;  // why not applicable
    std::int64_t rhs = 0;
    std::size_t beta = 0;
    std::size_t epsilon = 0;
    std::size_t lambda = 0;
};

/// Grid maximum of min{A, B, C} over beta, epsilon, lambda, valid when
/// r >= 2 and k >= 2(rt - t + 1) + 1.
[[nodiscard]] RefinedBound zs_refined(std::size_t k, std::size_t d, std::size_t r, std::size_t t);

/// Optimal PIR redundancies r_P(k, t), keyed by (k, t).
using RedundancyTable = std::map<std::pair<std::size_t, std::size_t>, std::size_t>;

/// Upper bound on the optimal batch redundancy r_B(k, t) from PIR redundancies:
///   r_P(k,t) + h * ceil(log C(k,h) / -log(1 - h!/h^h)) * r_P(ceil(k/h), t-2),  h = floor(t/2).
/// The second term is 0 when h <= 1. The ceiling is exact (no floating point).
/// Throws InsufficientData when a needed table entry is missing.
[[nodiscard]] std::int64_t redundancy_bound(std::size_t k, std::size_t t, const RedundancyTable& r_pir);

/// The integer ceil(log C(k,h) / -log(1 - h!/h^h)) used above (h >= 2).
[[nodiscard]] std::int64_t redundancy_log_factor(std::size_t k, std::size_t h);

enum class BoundKind {
    lower_bound_on_n,  // rhs is a lower bound on n
    cardinality_cap,   // rhs caps q^k
};

struct BoundVerdict {
    std::string name;
    BoundKind kind = BoundKind::lower_bound_on_n;
    bool applicable = false;
    std::string reason;                // set when not applicable
    std::int64_t rhs = 0;
    bool satisfied = true;             // n >= rhs, or q^k <= cap
    bool attained = false;             // n == rhs, or q^k == cap
    std::optional<SizeCap> cap;        // reconstruction-set cap the verdict refers to
    std::map<std::string, std::int64_t> parameters;  // inputs and maximizing witnesses
};

struct BoundOptions {
    std::size_t q = 2;
};

/// Applies every bound to a profile. r-independent bounds come first, then
/// one group per profiled cap (an unbounded cap is evaluated as r = n).
[[nodiscard]] std::vector<BoundVerdict> evaluate_all(const CodeProfile& profile, const BoundOptions& options = {});

struct BoundInputs {
    std::size_t k = 0;
    std::size_t d = 0;
    std::size_t r = 0;
    std::size_t t = 0;
    std::optional<std::size_t> delta;
    std::size_t q = 2;
    bool systematic = false;
    std::optional<std::size_t> n;  // when known, verdicts are checked against it
};

/// Evaluates the bounds from bare parameters (no code), as the `bounds` CLI does.
[[nodiscard]] std::vector<BoundVerdict> evaluate_parameters(const BoundInputs& inputs);

[[nodiscard]] std::string to_string(BoundKind kind);

}  // namespace batchcodes
