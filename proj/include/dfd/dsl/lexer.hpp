#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dfd/dsl/parse_error.hpp"
#include "dfd/source_span.hpp"

namespace dfd::dsl {

enum class TokenKind : std::uint8_t {
    Word,    // keyword or stray identifier
    String,  // text holds the unescaped contents
    Number,  // digits and dots; validated as a process number by the parser
    LBrace,
    RBrace,
    End,
};

struct Token {
    TokenKind kind;
    std::string text;
    SourceSpan span;

    bool is_word(std::string_view w) const { return kind == TokenKind::Word && text == w; }
};

inline std::string describe(const Token& t) {
    switch (t.kind) {
        case TokenKind::Word: return "'" + t.text + "'";
        case TokenKind::String: return "string \"" + t.text + "\"";
        case TokenKind::Number: return "number " + t.text;
        case TokenKind::LBrace: return "'{'";
        case TokenKind::RBrace: return "'}'";
        case TokenKind::End: return "end of input";
    }
    return "token";
}

namespace detail {

/// Length of the UTF-8 sequence starting at `s[i]`, or 0 if malformed.
inline std::size_t utf8_sequence_length(std::string_view s, std::size_t i) {
    const auto b = static_cast<unsigned char>(s[i]);
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (b < 0x80) return 1;
    if ((b & 0xE0) == 0xC0) { len = 2; cp = b & 0x1F; }
    else if ((b & 0xF0) == 0xE0) { len = 3; cp = b & 0x0F; }
    else if ((b & 0xF8) == 0xF0) { len = 4; cp = b & 0x07; }
    else return 0;
    if (i + len > s.size()) return 0;
    for (std::size_t k = 1; k < len; ++k) {
        const auto c = static_cast<unsigned char>(s[i + k]);
        if ((c & 0xC0) != 0x80) return 0;
        cp = (cp << 6) | (c & 0x3F);
    }
    static constexpr std::uint32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return 0;
    return len;
}

}  // namespace detail

/// Splits DSL source into tokens. Lexical problems are appended to `errors`
/// and the offending bytes skipped, so parsing can still report grammar
/// errors further on. A leading UTF-8 byte-order mark is ignored.
class Lexer {
public:
    explicit Lexer(std::string_view source) : src_(source) {
        if (src_.substr(0, 3) == "\xEF\xBB\xBF") src_.remove_prefix(3);
    }

    std::vector<Token> run(std::vector<ParseError>& errors) {
        std::vector<Token> out;
        while (true) {
            skip_blank();
            if (at_end()) break;
            const char c = src_[pos_];
            const SourceSpan start{line_, column_, 1};
            if (c == '{' || c == '}') {
                advance(1);
                out.push_back({c == '{' ? TokenKind::LBrace : TokenKind::RBrace, std::string(1, c), start});
            } else if (c == '"') {
                lex_string(out, errors);
            } else if (is_digit(c) || c == '.') {
                const std::size_t begin = pos_;
                while (!at_end() && (is_digit(src_[pos_]) || src_[pos_] == '.')) advance(1);
                out.push_back({TokenKind::Number, std::string(src_.substr(begin, pos_ - begin)),
                               {start.line, start.column, pos_ - begin}});
            } else if (is_word_char(c)) {
                const std::size_t begin = pos_;
                while (!at_end() && (is_word_char(src_[pos_]) || is_digit(src_[pos_]))) advance(1);
                out.push_back({TokenKind::Word, std::string(src_.substr(begin, pos_ - begin)),
                               {start.line, start.column, pos_ - begin}});
            } else {
                const std::size_t len = detail::utf8_sequence_length(src_, pos_);
                if (len == 0) {
                    errors.push_back({start, "invalid UTF-8 byte", {}});
                    advance(1);
                } else {
                    errors.push_back({{start.line, start.column, len},
                                      "unexpected character '" + std::string(src_.substr(pos_, len)) + "'",
                                      {}});
                    advance(len);
                }
            }
        }
        out.push_back({TokenKind::End, "", {line_, column_, 0}});
        return out;
    }

private:
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }
    static bool is_word_char(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }

    bool at_end() const { return pos_ >= src_.size(); }

    void advance(std::size_t n) {
        for (std::size_t k = 0; k < n && !at_end(); ++k, ++pos_) {
            if (src_[pos_] == '\n') {
                ++line_;
                column_ = 1;
            } else {
                ++column_;
            }
        }
    }

    void skip_blank() {
        while (!at_end()) {
            const char c = src_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') {
                advance(1);
            } else if (c == '#') {
                while (!at_end() && src_[pos_] != '\n') advance(1);
            } else {
                break;
            }
        }
    }

    void lex_string(std::vector<Token>& out, std::vector<ParseError>& errors) {
        const SourceSpan start{line_, column_, 0};
        const std::size_t begin = pos_;
        advance(1);
        std::string text;
        while (true) {
            if (at_end() || src_[pos_] == '\n') {
                errors.push_back({{start.line, start.column, pos_ - begin}, "unterminated string", {"'\"'"}});
                return;
            }
            const char c = src_[pos_];
            if (c == '"') {
                advance(1);
                break;
            }
            if (c == '\\') {
                if (pos_ + 1 < src_.size() && (src_[pos_ + 1] == '"' || src_[pos_ + 1] == '\\')) {
                    text.push_back(src_[pos_ + 1]);
                    advance(2);
                    continue;
                }
                errors.push_back({{line_, column_, pos_ + 1 < src_.size() ? 2u : 1u},
                                  "invalid escape sequence; only \\\" and \\\\ are allowed",
                                  {}});
                advance(1);
                continue;
            }
            const std::size_t len = detail::utf8_sequence_length(src_, pos_);
            if (len == 0) {
                errors.push_back({{line_, column_, 1}, "invalid UTF-8 byte in string", {}});
                advance(1);
                continue;
            }
            text.append(src_.substr(pos_, len));
            advance(len);
        }
        out.push_back({TokenKind::String, std::move(text), {start.line, start.column, pos_ - begin}});
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

inline std::vector<Token> tokenize(std::string_view source, std::vector<ParseError>& errors) {
    return Lexer(source).run(errors);
}

}  // namespace dfd::dsl
