#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "eqlog/vocabulary.hpp"

namespace eqlog {

// Immutable propositional formula over bot / atoms / & / | / ->.
// Negation and top are derived: not f == f -> bot, top == bot -> bot,
// so every recursion over formulas has exactly five cases.
class Formula {
public:
    enum class Kind : std::uint8_t { Bottom, Atom, And, Or, Implies };

    Formula() : Formula(bottom()) {}

    static Formula bottom();
    static Formula top();
    static Formula atom(std::string name); // validates the atom grammar
    static Formula conj(Formula lhs, Formula rhs);
    static Formula disj(Formula lhs, Formula rhs);
    static Formula implies(Formula lhs, Formula rhs);
    static Formula neg(Formula f) { return implies(std::move(f), bottom()); }

    Kind kind() const;
    const std::string& atom_name() const; // Kind::Atom only
    const Formula& lhs() const;           // binary kinds only
    const Formula& rhs() const;

    bool is_bottom() const { return kind() == Kind::Bottom; }
    bool is_top() const;      // structurally bot -> bot
    bool is_negation() const; // f -> bot, excluding top

    bool structurally_equal(const Formula& other) const;
    std::size_t node_count() const;

    // Constant-folding constructors: drop top/bot units, bot -> x == top,
    // x -> top == top, top -> x == x. No other rewriting.
    static Formula fold_and(Formula lhs, Formula rhs);
    static Formula fold_or(Formula lhs, Formula rhs);
    static Formula fold_implies(Formula lhs, Formula rhs);
    static Formula fold_neg(Formula f) { return fold_implies(std::move(f), bottom()); }

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct Formula::Node {
    Kind kind;
    std::string atom; // Kind::Atom
    Formula lhs;      // binary kinds
    Formula rhs;
};

using Theory = std::vector<Formula>;

Vocabulary vocabulary_of(const Formula& f);
Vocabulary vocabulary_of(const Theory& theory);

// Conjunction of all formulas of a theory; top when empty.
Formula theory_conjunction(const Theory& theory);

} // namespace eqlog
