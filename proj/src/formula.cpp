#include "eqlog/formula.hpp"

#include <algorithm>
#include <cassert>

#include "eqlog/errors.hpp"

namespace eqlog {

Formula Formula::bottom() {
    static const Formula instance{std::make_shared<const Node>(Node{Kind::Bottom, {}, {}, {}})};
    return instance;
}

Formula Formula::top() {
    static const Formula instance = implies(bottom(), bottom());
    return instance;
}

Formula Formula::atom(std::string name) {
    if (!is_valid_atom_name(name))
        throw Error("invalid atom name: '" + name + "'");
    return Formula{std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}, {}})};
}

Formula Formula::conj(Formula lhs, Formula rhs) {
    return Formula{
        std::make_shared<const Node>(Node{Kind::And, {}, std::move(lhs), std::move(rhs)})};
}

Formula Formula::disj(Formula lhs, Formula rhs) {
    return Formula{
        std::make_shared<const Node>(Node{Kind::Or, {}, std::move(lhs), std::move(rhs)})};
}

Formula Formula::implies(Formula lhs, Formula rhs) {
    return Formula{
        std::make_shared<const Node>(Node{Kind::Implies, {}, std::move(lhs), std::move(rhs)})};
}

Formula::Kind Formula::kind() const { return node_->kind; }

const std::string& Formula::atom_name() const {
    assert(kind() == Kind::Atom);
    return node_->atom;
}

const Formula& Formula::lhs() const {
    assert(kind() != Kind::Atom && kind() != Kind::Bottom);
    return node_->lhs;
}

const Formula& Formula::rhs() const {
    assert(kind() != Kind::Atom && kind() != Kind::Bottom);
    return node_->rhs;
}

bool Formula::is_top() const {
    return kind() == Kind::Implies && lhs().is_bottom() && rhs().is_bottom();
}

bool Formula::is_negation() const {
    return kind() == Kind::Implies && rhs().is_bottom() && !lhs().is_bottom();
}

bool Formula::structurally_equal(const Formula& other) const {
    if (node_ == other.node_)
        return true;
    if (kind() != other.kind())
        return false;
    switch (kind()) {
    case Kind::Bottom: return true;
    case Kind::Atom: return atom_name() == other.atom_name();
    default:
        return lhs().structurally_equal(other.lhs()) && rhs().structurally_equal(other.rhs());
    }
}

std::size_t Formula::node_count() const {
    switch (kind()) {
    case Kind::Bottom:
    case Kind::Atom: return 1;
    default: return 1 + lhs().node_count() + rhs().node_count();
    }
}

Formula Formula::fold_and(Formula lhs, Formula rhs) {
    if (lhs.is_bottom() || rhs.is_top())
        return lhs;
    if (rhs.is_bottom() || lhs.is_top())
        return rhs;
    return conj(std::move(lhs), std::move(rhs));
}

Formula Formula::fold_or(Formula lhs, Formula rhs) {
    if (lhs.is_top() || rhs.is_bottom())
        return lhs;
    if (rhs.is_top() || lhs.is_bottom())
        return rhs;
    return disj(std::move(lhs), std::move(rhs));
}

Formula Formula::fold_implies(Formula lhs, Formula rhs) {
    if (lhs.is_bottom() || rhs.is_top())
        return top();
    if (lhs.is_top())
        return rhs;
    return implies(std::move(lhs), std::move(rhs));
}

static void collect_atoms(const Formula& f, std::vector<std::string>& out) {
    switch (f.kind()) {
    case Formula::Kind::Bottom: return;
    case Formula::Kind::Atom: out.push_back(f.atom_name()); return;
    default:
        collect_atoms(f.lhs(), out);
        collect_atoms(f.rhs(), out);
    }
}

Vocabulary vocabulary_of(const Formula& f) {
    std::vector<std::string> atoms;
    collect_atoms(f, atoms);
    return Vocabulary(std::move(atoms));
}

Vocabulary vocabulary_of(const Theory& theory) {
    std::vector<std::string> atoms;
    for (const auto& f : theory)
        collect_atoms(f, atoms);
    return Vocabulary(std::move(atoms));
}

Formula theory_conjunction(const Theory& theory) {
    Formula acc = Formula::top();
    for (const auto& f : theory)
        acc = Formula::fold_and(std::move(acc), f);
    return acc;
}

} // namespace eqlog
