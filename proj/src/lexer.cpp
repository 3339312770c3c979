#include "lexer.hpp"

#include <cctype>

namespace eqlog::detail {

const char* token_name(Tok kind) {
    switch (kind) {
    case Tok::Ident: return "identifier";
    case Tok::Var: return "variable";
    case Tok::KwNot: return "'not'";
    case Tok::KwBot: return "'bot'";
    case Tok::KwTop: return "'top'";
    case Tok::KwForall: return "'forall'";
    case Tok::KwExists: return "'exists'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Amp: return "'&'";
    case Tok::Pipe: return "'|'";
    case Tok::Arrow: return "'->'";
    case Tok::Minus: return "'-'";
    case Tok::IfSym: return "':-'";
    case Tok::Equals: return "'='";
    case Tok::End: return "end of input";
    }
    return "?";
}

Lexer::Lexer(std::string_view text) {
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    auto push = [&](Tok kind, std::string word, std::size_t at_col) {
        tokens_.push_back(Token{kind, std::move(word), line, at_col});
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        if (c == '%') { // comment to end of line
            while (i < text.size() && text[i] != '\n')
                ++i;
            continue;
        }
        std::size_t start_col = col;
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                       text[j] == '_'))
                ++j;
            std::string word(text.substr(i, j - i));
            col += j - i;
            i = j;
            if (word == "not")
                push(Tok::KwNot, word, start_col);
            else if (word == "bot")
                push(Tok::KwBot, word, start_col);
            else if (word == "top")
                push(Tok::KwTop, word, start_col);
            else if (word == "forall")
                push(Tok::KwForall, word, start_col);
            else if (word == "exists")
                push(Tok::KwExists, word, start_col);
            else if (std::isupper(static_cast<unsigned char>(word[0])))
                push(Tok::Var, word, start_col);
            else
                push(Tok::Ident, word, start_col);
            continue;
        }
        switch (c) {
        case '(': push(Tok::LParen, "(", start_col); break;
        case ')': push(Tok::RParen, ")", start_col); break;
        case ',': push(Tok::Comma, ",", start_col); break;
        case '.': push(Tok::Dot, ".", start_col); break;
        case '&': push(Tok::Amp, "&", start_col); break;
        case '|': push(Tok::Pipe, "|", start_col); break;
        case '=': push(Tok::Equals, "=", start_col); break;
        case '-':
            if (i + 1 < text.size() && text[i + 1] == '>') {
                push(Tok::Arrow, "->", start_col);
                ++i;
                ++col;
            } else {
                push(Tok::Minus, "-", start_col);
            }
            break;
        case ':':
            if (i + 1 < text.size() && text[i + 1] == '-') {
                push(Tok::IfSym, ":-", start_col);
                ++i;
                ++col;
            } else {
                throw ParseError("unexpected character ':'", line, start_col);
            }
            break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", line, start_col);
        }
        ++i;
        ++col;
    }
    tokens_.push_back(Token{Tok::End, "", line, col});
}

bool Lexer::accept(Tok kind) {
    if (peek().kind != kind)
        return false;
    next();
    return true;
}

Token Lexer::expect(Tok kind, const char* what) {
    if (peek().kind != kind)
        fail(std::string("expected ") + what + ", found " + token_name(peek().kind));
    return next();
}

void Lexer::fail(const std::string& message) const {
    throw ParseError(message, peek().line, peek().column);
}

} // namespace eqlog::detail
