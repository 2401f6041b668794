#include "batchcodes/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <vector>

#include "batchcodes/errors.hpp"

namespace batchcodes {

namespace {

struct Line {
    std::size_t number;
    std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 1;
    while (!text.empty()) {
        const std::size_t end = text.find('\n');
        std::string_view line = text.substr(0, end);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back({number++, line});
        if (end == std::string_view::npos) break;
        text.remove_prefix(end + 1);
    }
    while (!lines.empty() && lines.back().text.find_first_not_of(" \t") == std::string_view::npos) {
        lines.pop_back();
    }
    return lines;
}

std::optional<std::size_t> parse_count(std::string_view token) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || value == 0) return std::nullopt;
    return value;
}

// "k n": exactly two positive integers separated by one or more spaces.
std::optional<std::pair<std::size_t, std::size_t>> parse_header(std::string_view line) {
    const std::size_t first_end = line.find(' ');
    if (first_end == std::string_view::npos) return std::nullopt;
    const std::size_t second_begin = line.find_first_not_of(' ', first_end);
    if (second_begin == std::string_view::npos) return std::nullopt;
    const auto k = parse_count(line.substr(0, first_end));
    const auto n = parse_count(line.substr(second_begin));
    if (!k || !n) return std::nullopt;
    return std::pair{*k, *n};
}

// Characters from {0,1}; a single space may separate adjacent characters.
BitVector parse_row(const Line& line) {
    std::string bits;
    bool previous_space = true;
    for (std::size_t c = 0; c < line.text.size(); ++c) {
        const char ch = line.text[c];
        if (ch == '0' || ch == '1') {
            bits.push_back(ch);
            previous_space = false;
        } else if (ch == ' ' && !previous_space && c + 1 < line.text.size()) {
            previous_space = true;
        } else {
            throw ParseError(line.number, c + 1, std::string("unexpected character '") + ch + "'");
        }
    }
    if (bits.empty()) throw ParseError(line.number, 1, "empty matrix row");
    return BitVector::from_string(bits);
}

BitMatrix parse_rows(std::span<const Line> lines, std::optional<std::pair<std::size_t, std::size_t>> shape) {
    if (lines.empty()) throw ParseError(1, 1, "no matrix rows");
    std::vector<BitVector> rows;
    rows.reserve(lines.size());
    const std::size_t width = shape ? shape->second : 0;
    for (const Line& line : lines) {
        BitVector row = parse_row(line);
        const std::size_t expected = shape ? width : rows.empty() ? row.size() : rows.front().size();
        if (row.size() != expected) {
            throw ParseError(line.number, 1,
                             "row has " + std::to_string(row.size()) + " entries, expected " +
                                 std::to_string(expected));
        }
        rows.push_back(std::move(row));
    }
    if (shape && rows.size() != shape->first) {
        throw ParseError(lines.back().number, 1,
                         "header declares " + std::to_string(shape->first) + " rows, found " +
                             std::to_string(rows.size()));
    }
    return BitMatrix(std::move(rows));
}

}  // namespace

BitMatrix parse_matrix(std::string_view text) {
    const std::vector<Line> lines = split_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "empty matrix text");

    // A first line such as "1 1" is both a valid header and a valid row. It is
    // read as a header when the remaining lines agree with the declared shape.
    if (const auto header = parse_header(lines.front().text)) {
        const std::span<const Line> body(lines.begin() + 1, lines.end());
        try {
            return parse_rows(body, header);
        } catch (const ParseError&) {
            const bool could_be_row = lines.front().text.find_first_not_of("01 ") == std::string_view::npos;
            if (!could_be_row) throw;
        }
    }
    return parse_rows(lines, std::nullopt);
}

BitMatrix read_matrix_file(const std::filesystem::path& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open matrix file '" + path.string() + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    return parse_matrix(text);
}

std::string format_matrix(const BitMatrix& m) {
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += m.row(i).to_string();
        out += '\n';
    }
    return out;
}

}  // namespace batchcodes
