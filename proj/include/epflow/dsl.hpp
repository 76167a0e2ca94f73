#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "epflow/core.hpp"
#include "epflow/errors.hpp"

namespace epflow {

// Source form, one expression per construct:
//
//   file    := { def | expr }
//   def     := NAME "=" expr NEWLINE
//   expr    := "w" | "w*" | "_" | NAME | lattice
//   lattice := "[" [ row { ";" row } ] "]"
//   row     := expr { expr }
//
// `#` starts a comment running to end of line. Whitespace separates cells
// and is otherwise insignificant; a newline only matters as a definition
// terminator at bracket depth zero. Names start with a letter (never `_`)
// and may continue with letters, digits, and underscores. Definitions may
// reference earlier definitions only, so resolution is acyclic by
// construction; references are substituted at parse time.

struct ParseOptions {
  // Bracket nesting beyond this raises ResourceError.
  std::size_t max_depth = 512;
};

struct SourceProgram {
  std::vector<std::pair<std::string, Template>> definitions;
  std::optional<Template> main;
};

SourceProgram parse_program(std::string_view text, const ParseOptions& opts = {});

// The program's main expression; throws ParseError when the text has none.
Template parse_expression(std::string_view text, const ParseOptions& opts = {});

// As parse_expression, then rejects holes (EvalError).
Action parse_action(std::string_view text, const ParseOptions& opts = {});

// Canonical form: cells joined by single spaces, rows by " ; ", the empty
// lattice printed "[]", atoms "w" / "w*", holes "_". parse is a left
// inverse of print on hole-free expressions and on templates.
std::string print_canonical(const Action& a);
std::string print_canonical(const ProcessLattice& l);
std::string print_canonical(const Template& t);

}  // namespace epflow
