#pragma once

// Shared tokenizer and recursive-descent helpers for the textual model
// languages (class diagrams, object models, activity diagrams, traces).

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "semdiff/diagnostics.hpp"

namespace semdiff::detail {

enum class TokenKind { Identifier, Number, Punct, End };

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;
    SourcePos pos;
};

/// Splits `text` into tokens. `//` comments run to end of line. Throws
/// ParseError on a character that starts no token.
std::vector<Token> tokenize(std::string_view text);

class TokenCursor {
public:
    explicit TokenCursor(std::string_view text);

    const Token& peek(std::size_t ahead = 0) const;
    bool at_end() const { return peek().kind == TokenKind::End; }

    bool is(std::string_view punct_or_keyword) const;
    bool is_identifier() const { return peek().kind == TokenKind::Identifier; }

    /// Consumes the next token if it matches.
    bool accept(std::string_view punct_or_keyword);

    const Token& expect(std::string_view punct_or_keyword);
    const Token& expect_identifier(std::string_view what = "identifier");
    const Token& expect_number();

    [[noreturn]] void fail_expected(std::initializer_list<std::string_view> expected) const;
    [[noreturn]] void fail(const std::string& message) const;

private:
    std::vector<Token> tokens_;
    std::size_t index_ = 0;
};

std::string describe(const Token& token);

}  // namespace semdiff::detail
