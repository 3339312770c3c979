#include "eqlog/parser.hpp"

#include <algorithm>

#include "lexer.hpp"

namespace eqlog {

using detail::Lexer;
using detail::Tok;
using detail::Token;

namespace {

// Assembles the applied spelling "p(c1,c2)" of an atom. Argument identifiers
// must be lowercase; grounded atoms are opaque propositional names.
std::string parse_atom_name(Lexer& lex) {
    Token head = lex.expect(Tok::Ident, "atom");
    if (!lex.accept(Tok::LParen))
        return head.text;
    std::string name = head.text + "(";
    name += lex.expect(Tok::Ident, "argument identifier").text;
    while (lex.accept(Tok::Comma)) {
        name += ",";
        name += lex.expect(Tok::Ident, "argument identifier").text;
    }
    lex.expect(Tok::RParen, "')'");
    name += ")";
    return name;
}

Formula parse_implication(Lexer& lex);

Formula parse_primary(Lexer& lex) {
    switch (lex.peek().kind) {
    case Tok::KwBot:
        lex.next();
        return Formula::bottom();
    case Tok::KwTop:
        lex.next();
        return Formula::top();
    case Tok::LParen: {
        lex.next();
        Formula inner = parse_implication(lex);
        lex.expect(Tok::RParen, "')'");
        return inner;
    }
    case Tok::Ident: return Formula::atom(parse_atom_name(lex));
    default: lex.fail(std::string("expected formula, found ") + token_name(lex.peek().kind));
    }
}

Formula parse_unary(Lexer& lex) {
    if (lex.accept(Tok::KwNot) || lex.accept(Tok::Minus))
        return Formula::neg(parse_unary(lex));
    return parse_primary(lex);
}

Formula parse_conjunction(Lexer& lex) {
    Formula f = parse_unary(lex);
    while (lex.accept(Tok::Amp))
        f = Formula::conj(std::move(f), parse_unary(lex));
    return f;
}

Formula parse_disjunction(Lexer& lex) {
    Formula f = parse_conjunction(lex);
    while (lex.accept(Tok::Pipe))
        f = Formula::disj(std::move(f), parse_conjunction(lex));
    return f;
}

Formula parse_implication(Lexer& lex) {
    Formula lhs = parse_disjunction(lex);
    if (lex.accept(Tok::Arrow))
        return Formula::implies(std::move(lhs), parse_implication(lex));
    return lhs;
}

void append_unique(std::vector<std::string>& part, std::string atom, const Lexer& lex,
                   const char* where) {
    if (std::find(part.begin(), part.end(), atom) != part.end())
        throw ParseError("repeated atom '" + atom + "' in rule " + where, lex.peek().line,
                         lex.peek().column);
    part.push_back(std::move(atom));
}

// rule := heads? (":-" body?)? "."   heads := atom ("|" atom)*
// body := literal ("," literal)*     literal := "not"? atom
Rule parse_rule_body(Lexer& lex) {
    Rule rule;
    if (lex.peek().kind == Tok::Ident) {
        append_unique(rule.heads, parse_atom_name(lex), lex, "head");
        while (lex.accept(Tok::Pipe))
            append_unique(rule.heads, parse_atom_name(lex), lex, "head");
    }
    if (lex.accept(Tok::IfSym) && lex.peek().kind != Tok::Dot) {
        do {
            if (lex.accept(Tok::KwNot) || lex.accept(Tok::Minus))
                append_unique(rule.neg_body, parse_atom_name(lex), lex, "negative body");
            else
                append_unique(rule.pos_body, parse_atom_name(lex), lex, "positive body");
        } while (lex.accept(Tok::Comma));
    }
    return rule;
}

} // namespace

Formula parse_formula(std::string_view text) {
    Lexer lex(text);
    Formula f = parse_implication(lex);
    lex.accept(Tok::Dot);
    if (lex.peek().kind != Tok::End)
        lex.fail(std::string("trailing input: ") + token_name(lex.peek().kind));
    return f;
}

Theory parse_theory(std::string_view text) {
    Lexer lex(text);
    Theory theory;
    while (lex.peek().kind != Tok::End) {
        theory.push_back(parse_implication(lex));
        lex.expect(Tok::Dot, "'.' after formula");
    }
    return theory;
}

Program parse_program(std::string_view text) {
    Lexer lex(text);
    Program program;
    while (lex.peek().kind != Tok::End) {
        program.rules.push_back(parse_rule_body(lex));
        lex.expect(Tok::Dot, "'.' after rule");
    }
    return program;
}

Rule parse_rule(std::string_view text) {
    Lexer lex(text);
    Rule rule = parse_rule_body(lex);
    lex.accept(Tok::Dot);
    if (lex.peek().kind != Tok::End)
        lex.fail(std::string("trailing input: ") + token_name(lex.peek().kind));
    return rule;
}

} // namespace eqlog
