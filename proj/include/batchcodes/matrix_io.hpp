#pragma once

// Plain-text generator matrix format:
//
//     [k n]            optional header line
//     0110...          k rows of n characters from {0,1}
//
// Single spaces between characters are allowed. Blank trailing lines are
// ignored. Errors carry 1-based line and column numbers.

#include <filesystem>
#include <string>
#include <string_view>

#include "batchcodes/gf2.hpp"

namespace batchcodes {

[[nodiscard]] BitMatrix parse_matrix(std::string_view text);

/// Reads and parses a file; "-" reads standard input.
[[nodiscard]] BitMatrix read_matrix_file(const std::filesystem::path& path);

/// Header line followed by one row per line, no spaces.
[[nodiscard]] std::string format_matrix(const BitMatrix& m);

}  // namespace batchcodes
