#include "eqlog/program.hpp"

namespace eqlog {

Formula rule_to_formula(const Rule& rule) {
    Formula body = Formula::top();
    for (const auto& atom : rule.pos_body)
        body = Formula::fold_and(std::move(body), Formula::atom(atom));
    for (const auto& atom : rule.neg_body)
        body = Formula::fold_and(std::move(body), Formula::neg(Formula::atom(atom)));

    Formula head = Formula::bottom();
    for (const auto& atom : rule.heads)
        head = Formula::fold_or(std::move(head), Formula::atom(atom));

    // fold_implies collapses the degenerate  top -> H  to H.
    return Formula::fold_implies(std::move(body), std::move(head));
}

Theory program_to_theory(const Program& program) {
    Theory theory;
    theory.reserve(program.rules.size());
    for (const auto& rule : program.rules)
        theory.push_back(rule_to_formula(rule));
    return theory;
}

Vocabulary vocabulary_of(const Rule& rule) {
    std::vector<std::string> atoms;
    atoms.reserve(rule.heads.size() + rule.pos_body.size() + rule.neg_body.size());
    atoms.insert(atoms.end(), rule.heads.begin(), rule.heads.end());
    atoms.insert(atoms.end(), rule.pos_body.begin(), rule.pos_body.end());
    atoms.insert(atoms.end(), rule.neg_body.begin(), rule.neg_body.end());
    return Vocabulary(std::move(atoms));
}

Vocabulary vocabulary_of(const Program& program) {
    std::vector<std::string> atoms;
    for (const auto& rule : program.rules) {
        atoms.insert(atoms.end(), rule.heads.begin(), rule.heads.end());
        atoms.insert(atoms.end(), rule.pos_body.begin(), rule.pos_body.end());
        atoms.insert(atoms.end(), rule.neg_body.begin(), rule.neg_body.end());
    }
    return Vocabulary(std::move(atoms));
}

} // namespace eqlog
