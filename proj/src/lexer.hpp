#pragma once

// Shared tokenizer for the propositional and first-order concrete syntax.
// Internal to the library.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "eqlog/errors.hpp"

namespace eqlog::detail {

enum class Tok : std::uint8_t {
    Ident,   // [a-z][A-Za-z0-9_]* that is not a keyword
    Var,     // [A-Z][A-Za-z0-9_]*
    KwNot,
    KwBot,
    KwTop,
    KwForall,
    KwExists,
    LParen,
    RParen,
    Comma,
    Dot,
    Amp,
    Pipe,
    Arrow,   // ->
    Minus,   // unary negation
    IfSym,   // :-
    Equals,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

class Lexer {
public:
    explicit Lexer(std::string_view text);

    const Token& peek() const { return tokens_[pos_]; }
    Token next() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }
    bool accept(Tok kind);
    Token expect(Tok kind, const char* what);
    [[noreturn]] void fail(const std::string& message) const;

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

const char* token_name(Tok kind);

} // namespace eqlog::detail
