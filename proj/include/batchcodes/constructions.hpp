#pragma once

// Named code families used as fixtures and exposed through `construct`.

#include <cstddef>
#include <string>
#include <vector>

#include "batchcodes/gf2.hpp"

namespace batchcodes {

/// Sub-cube code: k = ell^m information cells on an m-dimensional grid,
/// n = (ell+1)^m coded positions. Position (b_1..b_m) in [ell+1]^m, listed in
/// row-major order, stores the sum of the cells (a_1..a_m) with a_j = b_j
/// where b_j <= ell and a_j free where b_j = ell+1. Cells are rows in
/// row-major order. Requires ell >= 2, m >= 1, ell^m <= 24.
[[nodiscard]] LinearCode subcube(std::size_t ell, std::size_t m);

/// Simplex [2^m - 1, m] code: e_1..e_m first, then the remaining nonzero
/// vectors in increasing integer value, reading row 1 as the least
/// significant bit. Requires 2 <= m <= 12.
[[nodiscard]] LinearCode simplex(std::size_t m);

/// k x 3k: three copies of the block (e_1, ..., e_{k-1}, all-ones). k >= 2.
[[nodiscard]] LinearCode triplicated_parity(std::size_t k);

/// 2 kappa x (3 kappa + 1): kappa diagonal blocks with rows (1,1,0), (0,1,1),
/// then one all-ones column. kappa >= 1.
[[nodiscard]] LinearCode blockwise_subcube_allones(std::size_t kappa);

/// Systematic distance-2 code: identity, then x_{2j-1} + x_{2j} for each
/// pair, then x_k alone when k is odd. n = k + ceil(k/2). k >= 2.
[[nodiscard]] LinearCode paired_parity(std::size_t k);

[[nodiscard]] LinearCode identity_code(std::size_t k);

/// Generator columns sorted, for comparing codes up to column permutation.
[[nodiscard]] std::vector<BitVector> sorted_columns(const BitMatrix& g);

}  // namespace batchcodes
