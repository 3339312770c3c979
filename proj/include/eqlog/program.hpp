#pragma once

#include <string>
#include <vector>

#include "eqlog/formula.hpp"
#include "eqlog/vocabulary.hpp"

namespace eqlog {

// Ground disjunctive rule  K1 | ... | Kk :- L1, ..., Lm, not Lm+1, ..., not Ln.
// Each part is duplicate-free; any part may be empty (empty heads form a
// constraint, empty body a fact).
struct Rule {
    std::vector<std::string> heads;
    std::vector<std::string> pos_body;
    std::vector<std::string> neg_body;

    bool operator==(const Rule&) const = default;
};

struct Program {
    std::vector<Rule> rules;

    bool operator==(const Program&) const = default;
};

// L1 & ... & Lm & not Lm+1 & ... & not Ln -> K1 | ... | Kk.
// Empty body conjunction is top (and the degenerate top -> H collapses to H);
// empty head disjunction is bot.
Formula rule_to_formula(const Rule& rule);
Theory program_to_theory(const Program& program);

Vocabulary vocabulary_of(const Rule& rule);
Vocabulary vocabulary_of(const Program& program);

} // namespace eqlog
