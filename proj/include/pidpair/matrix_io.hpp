#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pidpair/matrix.hpp"
#include "pidpair/ring.hpp"

// Text matrix format:
//
//     # optional comment lines (also trailing '#' comments)
//     <ring> <rows> <cols>
//     <rows*cols scalar tokens, row-major, any whitespace layout>
//
// <ring> is `int` or `polyq`. Integers are decimal with an optional minus;
// polyq entries are `poly[c0,c1,...,cd]` (coefficient of x^i, each `p/q`
// or `p`) or a bare rational constant.

namespace pidpair {

struct ParseError : std::runtime_error {
    ParseError(std::string source, std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          source(std::move(source)), line(line), column(column) {}

    std::string source;
    std::size_t line;
    std::size_t column;
};

enum class RingKind { Integer, PolyQ };

std::string_view ring_name(RingKind k);

struct Token {
    std::string text;
    std::size_t line = 0;
    std::size_t column = 0;
};

/// Header and entry tokens, before the entries are parsed in a ring.
struct RawMatrix {
    std::string source;
    RingKind ring = RingKind::Integer;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Token> entries;
};

/// Throws ParseError with the position of the offending token.
RawMatrix read_raw_matrix(std::string_view text, const std::string& source);
/// Reads a whole file; an unreadable file is reported as a ParseError at 0:0.
RawMatrix read_raw_matrix_file(const std::string& path);

template <EuclideanRing R>
Matrix<R> parse_entries(const RawMatrix& raw) {
    std::vector<R> e;
    e.reserve(raw.entries.size());
    for (const auto& tok : raw.entries) {
        try {
            e.push_back(R::parse(tok.text));
        } catch (const std::invalid_argument& ex) {
            throw ParseError(raw.source, tok.line, tok.column, ex.what());
        }
    }
    return Matrix<R>(raw.rows, raw.cols, std::move(e));
}

/// Header line plus one line per row; re-parses to an equal matrix.
template <EuclideanRing R>
std::string format_matrix(const Matrix<R>& m) {
    std::string out(ring_tag_of<R>());
    out += " " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j)
                out += ' ';
            out += m(i, j).to_string();
        }
        out += '\n';
    }
    return out;
}

template <EuclideanRing R>
std::string format_list(const std::vector<R>& xs) {
    std::string out;
    for (const auto& x : xs) {
        if (!out.empty())
            out += ' ';
        out += x.to_string();
    }
    return out;
}

} // namespace pidpair
