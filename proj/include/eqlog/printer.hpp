#pragma once

#include <string>

#include "eqlog/formula.hpp"
#include "eqlog/program.hpp"

namespace eqlog {

// Minimal-parenthesis rendering; parse(render(x)) is structurally equal to x.
// f -> bot is resugared to "not f", bot -> bot to "top".
std::string render(const Formula& f);

// Rule syntax with trailing "."; one rule per line for programs.
std::string render(const Rule& rule);
std::string render(const Program& program);

} // namespace eqlog
