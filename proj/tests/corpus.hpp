#pragma once

// Named code families shared by unit and acceptance tests.

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "batchcodes/constructions.hpp"
#include "batchcodes/gf2.hpp"

namespace corpus {

struct Entry {
    std::string name;
    batchcodes::LinearCode code;
};

/// Reference 4 x 9 box-sum generator for the 2 x 2 sub-cube.
inline batchcodes::LinearCode reference_subcube22() {
    const std::string_view rows[] = {"101000101", "011000011", "000101101", "000011011"};
    return batchcodes::LinearCode(batchcodes::BitMatrix::from_strings(rows));
}

/// Reference 3 x 7 simplex generator.
inline batchcodes::LinearCode reference_simplex3() {
    const std::string_view rows[] = {"1001101", "0101011", "0010111"};
    return batchcodes::LinearCode(batchcodes::BitMatrix::from_strings(rows));
}

inline std::vector<Entry> all() {
    using namespace batchcodes;
    std::vector<Entry> out;
    out.push_back({"subcube(2,1)", subcube(2, 1)});
    out.push_back({"subcube(2,2)", subcube(2, 2)});
    out.push_back({"subcube(3,1)", subcube(3, 1)});
    out.push_back({"reference_subcube22", reference_subcube22()});
    out.push_back({"reference_simplex3", reference_simplex3()});
    for (std::size_t m = 2; m <= 4; ++m) out.push_back({"simplex(" + std::to_string(m) + ")", simplex(m)});
    for (std::size_t k = 3; k <= 5; ++k) {
        out.push_back({"triplicated_parity(" + std::to_string(k) + ")", triplicated_parity(k)});
    }
    for (std::size_t kappa = 1; kappa <= 3; ++kappa) {
        out.push_back({"blockwise_subcube_allones(" + std::to_string(kappa) + ")", blockwise_subcube_allones(kappa)});
    }
    for (std::size_t k = 2; k <= 6; ++k) out.push_back({"paired_parity(" + std::to_string(k) + ")", paired_parity(k)});
    for (std::size_t k = 1; k <= 4; ++k) out.push_back({"identity(" + std::to_string(k) + ")", identity_code(k)});
    return out;
}

/// Systematic code [I | A] with uniformly random A, k x n.
inline batchcodes::LinearCode random_systematic(std::mt19937_64& rng, std::size_t k, std::size_t n) {
    batchcodes::BitMatrix g(k, n);
    for (std::size_t i = 0; i < k; ++i) g.set(i, i);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = k; j < n; ++j) g.set(i, j, coin(rng));
    }
    return batchcodes::LinearCode(std::move(g));
}

/// Random full-rank k x n generator (rejection sampling).
inline batchcodes::LinearCode random_full_rank(std::mt19937_64& rng, std::size_t k, std::size_t n) {
    std::bernoulli_distribution coin(0.5);
    while (true) {
        batchcodes::BitMatrix g(k, n);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < n; ++j) g.set(i, j, coin(rng));
        }
        if (batchcodes::rank(g) == k) return batchcodes::LinearCode(std::move(g));
    }
}

}  // namespace corpus
