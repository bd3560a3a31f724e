#include "lexer.hpp"

#include <array>
#include <cctype>

namespace semdiff::detail {

namespace {

// Longest first, so "-[" wins over "-" and "]->" over "]".
constexpr std::array<std::string_view, 24> kPuncts = {
    "]->", "-[", "->", "--", "..", ":=", "==", "!=", "&&", "||", "{", "}",
    ";",   ":",  ",",  "[",  "]",  "(",  ")",  "!",  "*",  "/", "=", "-"};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

}  // namespace semdiff::detail

namespace semdiff {

std::string Diagnostic::format() const {
    if (pos.line == 0) return "error: " + message;
    return std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": error: " + message;
}

namespace {

std::string join_diagnostics(const std::vector<Diagnostic>& diagnostics) {
    std::string out;
    for (const auto& d : diagnostics) {
        if (!out.empty()) out += '\n';
        out += d.format();
    }
    return out;
}

}  // namespace

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(join_diagnostics(diagnostics)),
      diagnostics_(std::move(diagnostics)) {}

}  // namespace semdiff

namespace semdiff::detail {

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t i = 0;

    auto advance = [&](std::size_t n) {
        for (std::size_t j = 0; j < n; ++j) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
            ++i;
        }
    };

    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (text.substr(i, 2) == "//") {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }

        Token token;
        token.pos = {line, column};
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < text.size() && ident_char(text[j])) ++j;
            token.kind = TokenKind::Identifier;
            token.text = std::string(text.substr(i, j - i));
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            token.kind = TokenKind::Number;
            token.text = std::string(text.substr(i, j - i));
        } else {
            for (auto p : kPuncts) {
                if (text.substr(i, p.size()) == p) {
                    token.kind = TokenKind::Punct;
                    token.text = std::string(p);
                    break;
                }
            }
            if (token.text.empty()) {
                throw ParseError({{token.pos, std::string("unexpected character '") + c + "'"}});
            }
        }
        advance(token.text.size());
        tokens.push_back(std::move(token));
    }
    tokens.push_back({TokenKind::End, "", {line, column}});
    return tokens;
}

std::string describe(const Token& token) {
    switch (token.kind) {
        case TokenKind::End: return "end of input";
        case TokenKind::Identifier: return "identifier '" + token.text + "'";
        case TokenKind::Number: return "number '" + token.text + "'";
        case TokenKind::Punct: return "'" + token.text + "'";
    }
    return token.text;
}

TokenCursor::TokenCursor(std::string_view text) : tokens_(tokenize(text)) {}

const Token& TokenCursor::peek(std::size_t ahead) const {
    return tokens_[std::min(index_ + ahead, tokens_.size() - 1)];
}

bool TokenCursor::is(std::string_view punct_or_keyword) const {
    const Token& t = peek();
    return t.kind != TokenKind::End && t.kind != TokenKind::Number && t.text == punct_or_keyword;
}

bool TokenCursor::accept(std::string_view punct_or_keyword) {
    if (!is(punct_or_keyword)) return false;
    ++index_;
    return true;
}

const Token& TokenCursor::expect(std::string_view punct_or_keyword) {
    if (!is(punct_or_keyword)) fail_expected({punct_or_keyword});
    return tokens_[index_++];
}

const Token& TokenCursor::expect_identifier(std::string_view what) {
    if (!is_identifier()) fail("expected " + std::string(what) + ", found " + describe(peek()));
    return tokens_[index_++];
}

const Token& TokenCursor::expect_number() {
    if (peek().kind != TokenKind::Number) fail("expected number, found " + describe(peek()));
    return tokens_[index_++];
}

void TokenCursor::fail_expected(std::initializer_list<std::string_view> expected) const {
    std::string message = "expected ";
    std::size_t n = 0;
    for (auto e : expected) {
        if (n > 0) message += (n + 1 == expected.size()) ? " or " : ", ";
        message += "'" + std::string(e) + "'";
        ++n;
    }
    fail(message + ", found " + describe(peek()));
}

void TokenCursor::fail(const std::string& message) const {
    throw ParseError({{peek().pos, message}});
}

}  // namespace semdiff::detail
