#pragma once

#include <string_view>

#include "eqlog/formula.hpp"
#include "eqlog/program.hpp"

namespace eqlog {

// Formula grammar (ASCII):
//   formula  := disj ("->" formula)?              (-> right-associative)
//   disj     := conj ("|" conj)*                  (left-associative)
//   conj     := unary ("&" unary)*                (left-associative)
//   unary    := ("not" | "-") unary | primary
//   primary  := "bot" | "top" | atom | "(" formula ")"
//   atom     := ident ("(" ident ("," ident)* ")")?   ident = [a-z][A-Za-z0-9_]*
Formula parse_formula(std::string_view text);

// One formula per statement, "."-terminated; "%" starts a line comment.
Theory parse_theory(std::string_view text);

// Rules  h1 | h2 :- b1, ..., not c1, ... .  Facts omit ":-"; constraints omit
// heads. Statement and comment syntax as for theories.
Program parse_program(std::string_view text);
Rule parse_rule(std::string_view text);

} // namespace eqlog
