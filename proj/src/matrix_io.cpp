#include "pidpair/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace pidpair {

std::string_view ring_name(RingKind k) {
    return k == RingKind::Integer ? "int" : "polyq";
}

namespace {

class Lexer {
public:
    Lexer(std::string_view text, const std::string& source) : text_(text), source_(source) {}

    // Skips whitespace and comments; a `poly[` token extends to its `]` even
    // across spaces so "poly[1, 2]" reads as one entry.
    bool next(Token& out) {
        skip();
        if (pos_ >= text_.size())
            return false;
        out = Token{{}, line_, col_};
        bool bracket = false;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (!bracket && (is_space(c) || c == '#'))
                break;
            if (c == '\n')
                throw ParseError(source_, out.line, out.column, "unterminated '['");
            if (c == '[')
                bracket = true;
            else if (c == ']')
                bracket = false;
            if (!is_space(c))
                out.text += c;
            advance();
        }
        if (bracket)
            throw ParseError(source_, out.line, out.column, "unterminated '['");
        return true;
    }

    std::size_t line() const { return line_; }
    std::size_t column() const { return col_; }

private:
    static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    advance();
            } else if (is_space(c)) {
                advance();
            } else {
                return;
            }
        }
    }

    std::string_view text_;
    const std::string& source_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

std::size_t parse_dimension(const Token& tok, const std::string& source, const char* what) {
    std::size_t v = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || p != last)
        throw ParseError(source, tok.line, tok.column, std::string("expected ") + what + ", got '" + tok.text + "'");
    return v;
}

} // namespace

RawMatrix read_raw_matrix(std::string_view text, const std::string& source) {
    Lexer lex(text, source);
    RawMatrix raw;
    raw.source = source;

    Token tok;
    if (!lex.next(tok))
        throw ParseError(source, lex.line(), lex.column(), "missing header '<ring> <rows> <cols>'");
    if (tok.text == "int")
        raw.ring = RingKind::Integer;
    else if (tok.text == "polyq")
        raw.ring = RingKind::PolyQ;
    else
        throw ParseError(source, tok.line, tok.column, "unknown ring '" + tok.text + "' (expected int or polyq)");

    if (!lex.next(tok))
        throw ParseError(source, lex.line(), lex.column(), "missing row count");
    raw.rows = parse_dimension(tok, source, "row count");
    if (!lex.next(tok))
        throw ParseError(source, lex.line(), lex.column(), "missing column count");
    raw.cols = parse_dimension(tok, source, "column count");

    const std::size_t want = raw.rows * raw.cols;
    while (lex.next(tok)) {
        if (raw.entries.size() == want)
            throw ParseError(source, tok.line, tok.column,
                             "extra entry '" + tok.text + "' after " + std::to_string(want) + " entries");
        raw.entries.push_back(std::move(tok));
    }
    if (raw.entries.size() < want)
        throw ParseError(source, lex.line(), lex.column(),
                         "expected " + std::to_string(want) + " entries, found " + std::to_string(raw.entries.size()));
    return raw;
}

RawMatrix read_raw_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path, 0, 0, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return read_raw_matrix(ss.str(), path);
}

} // namespace pidpair
