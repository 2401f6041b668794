#include "batchcodes/constructions.hpp"

#include <algorithm>

#include "batchcodes/errors.hpp"

namespace batchcodes {

namespace {

void require_at_least(std::size_t value, std::size_t minimum, const char* what) {
    if (value < minimum) {
        throw InvalidArgument(std::string(what) + " must be at least " + std::to_string(minimum));
    }
}

}  // namespace

LinearCode subcube(std::size_t ell, std::size_t m) {
    require_at_least(ell, 2, "ell");
    require_at_least(m, 1, "m");
    std::size_t k = 1;
    std::size_t n = 1;
    for (std::size_t j = 0; j < m; ++j) {
        k *= ell;
        n *= ell + 1;
        if (k > 24) throw CapacityError("subcube requires ell^m <= 24");
    }

    BitMatrix g(k, n);
    std::vector<std::size_t> position(m, 0);  // digits in [0, ell]; ell means "whole axis"
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t cell = 0; cell < k; ++cell) {
            // Decode the cell's digits (row-major, last axis fastest).
            std::size_t rest = cell;
            bool inside = true;
            for (std::size_t axis = m; axis-- > 0;) {
                const std::size_t digit = rest % ell;
                rest /= ell;
                if (position[axis] != ell && position[axis] != digit) inside = false;
            }
            if (inside) g.set(cell, col);
        }
        for (std::size_t axis = m; axis-- > 0;) {
            if (++position[axis] <= ell) break;
            position[axis] = 0;
        }
    }
    return LinearCode(std::move(g));
}

LinearCode simplex(std::size_t m) {
    require_at_least(m, 2, "m");
    if (m > 12) throw CapacityError("simplex requires m <= 12");
    std::vector<BitVector> columns;
    for (std::size_t i = 0; i < m; ++i) columns.push_back(BitVector::unit(m, i));
    const std::uint64_t count = std::uint64_t{1} << m;
    for (std::uint64_t v = 1; v < count; ++v) {
        if ((v & (v - 1)) == 0) continue;  // unit vectors already placed
        columns.push_back(BitVector::from_word(m, v));
    }
    return LinearCode(BitMatrix::from_columns(columns));
}

LinearCode triplicated_parity(std::size_t k) {
    require_at_least(k, 2, "k");
    BitMatrix g(k, 3 * k);
    for (std::size_t block = 0; block < 3; ++block) {
        const std::size_t base = block * k;
        for (std::size_t i = 0; i + 1 < k; ++i) g.set(i, base + i);
        for (std::size_t i = 0; i < k; ++i) g.set(i, base + k - 1);
    }
    return LinearCode(std::move(g));
}

LinearCode blockwise_subcube_allones(std::size_t kappa) {
    require_at_least(kappa, 1, "kappa");
    BitMatrix g(2 * kappa, 3 * kappa + 1);
    for (std::size_t b = 0; b < kappa; ++b) {
        g.set(2 * b, 3 * b);
        g.set(2 * b, 3 * b + 1);
        g.set(2 * b + 1, 3 * b + 1);
        g.set(2 * b + 1, 3 * b + 2);
    }
    for (std::size_t i = 0; i < 2 * kappa; ++i) g.set(i, 3 * kappa);
    return LinearCode(std::move(g));
}

LinearCode paired_parity(std::size_t k) {
    require_at_least(k, 2, "k");
    const std::size_t n = k + (k + 1) / 2;
    BitMatrix g(k, n);
    for (std::size_t i = 0; i < k; ++i) g.set(i, i);
    std::size_t col = k;
    for (std::size_t i = 0; i + 1 < k; i += 2, ++col) {
        g.set(i, col);
        g.set(i + 1, col);
    }
    if (k % 2 == 1) g.set(k - 1, col);
    return LinearCode(std::move(g));
}

LinearCode identity_code(std::size_t k) {
    require_at_least(k, 1, "k");
    return LinearCode(BitMatrix::identity(k));
}

std::vector<BitVector> sorted_columns(const BitMatrix& g) {
    std::vector<BitVector> cols;
    cols.reserve(g.cols());
    for (std::size_t j = 0; j < g.cols(); ++j) cols.push_back(g.column(j));
    std::sort(cols.begin(), cols.end());
    return cols;
}

}  // namespace batchcodes
