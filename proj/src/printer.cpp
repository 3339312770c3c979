#include "eqlog/printer.hpp"

namespace eqlog {

namespace {

// Precedence levels: -> (0, right-assoc) < | (1) < & (2) < not (3) < primary.
void render_into(const Formula& f, int min_prec, std::string& out) {
    if (f.is_top()) {
        out += "top";
        return;
    }
    if (f.is_negation()) {
        if (min_prec > 3) {
            out += "(";
            render_into(f, 0, out);
            out += ")";
            return;
        }
        out += "not ";
        render_into(f.lhs(), 3, out);
        return;
    }
    switch (f.kind()) {
    case Formula::Kind::Bottom: out += "bot"; return;
    case Formula::Kind::Atom: out += f.atom_name(); return;
    case Formula::Kind::And:
        if (min_prec > 2) {
            out += "(";
            render_into(f, 0, out);
            out += ")";
            return;
        }
        render_into(f.lhs(), 2, out);
        out += " & ";
        render_into(f.rhs(), 3, out);
        return;
    case Formula::Kind::Or:
        if (min_prec > 1) {
            out += "(";
            render_into(f, 0, out);
            out += ")";
            return;
        }
        render_into(f.lhs(), 1, out);
        out += " | ";
        render_into(f.rhs(), 2, out);
        return;
    case Formula::Kind::Implies:
        if (min_prec > 0) {
            out += "(";
            render_into(f, 0, out);
            out += ")";
            return;
        }
        render_into(f.lhs(), 1, out);
        out += " -> ";
        render_into(f.rhs(), 0, out);
        return;
    }
}

} // namespace

std::string render(const Formula& f) {
    std::string out;
    render_into(f, 0, out);
    return out;
}

std::string render(const Rule& rule) {
    std::string out;
    for (std::size_t i = 0; i < rule.heads.size(); ++i) {
        if (i)
            out += " | ";
        out += rule.heads[i];
    }
    if (!rule.pos_body.empty() || !rule.neg_body.empty() || rule.heads.empty()) {
        out += rule.heads.empty() ? ":-" : " :-";
        bool first = true;
        for (const auto& atom : rule.pos_body) {
            out += first ? " " : ", ";
            out += atom;
            first = false;
        }
        for (const auto& atom : rule.neg_body) {
            out += first ? " not " : ", not ";
            out += atom;
            first = false;
        }
    }
    out += ".";
    return out;
}

std::string render(const Program& program) {
    std::string out;
    for (const auto& rule : program.rules) {
        out += render(rule);
        out += "\n";
    }
    return out;
}

} // namespace eqlog
