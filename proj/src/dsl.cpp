#include "epflow/dsl.hpp"

#include <cctype>
#include <map>

namespace epflow {

namespace {

enum class TokKind {
  lbracket,
  rbracket,
  semi,
  fail_atom,
  succeed_atom,
  hole,
  name,
  equals,
  newline,
  end,
};

struct Token {
  TokKind kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_name_char(char c) {
  return c == '_' || std::isalnum(static_cast<unsigned char>(c));
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> toks;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  const auto push = [&](TokKind k, std::string text, std::size_t l, std::size_t c) {
    toks.push_back({k, std::move(text), l, c});
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '\n') {
      push(TokKind::newline, "\n", line, col);
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++col;
      continue;
    }
    const std::size_t tl = line;
    const std::size_t tc = col;
    if (c == '[') {
      push(TokKind::lbracket, "[", tl, tc);
      ++i;
      ++col;
      continue;
    }
    if (c == ']') {
      push(TokKind::rbracket, "]", tl, tc);
      ++i;
      ++col;
      continue;
    }
    if (c == ';') {
      push(TokKind::semi, ";", tl, tc);
      ++i;
      ++col;
      continue;
    }
    if (c == '=') {
      push(TokKind::equals, "=", tl, tc);
      ++i;
      ++col;
      continue;
    }
    if (c == '_' || is_name_start(c)) {
      std::size_t j = i + 1;
      while (j < src.size() && is_name_char(src[j])) ++j;
      std::string word(src.substr(i, j - i));
      col += j - i;
      i = j;
      if (word == "_") {
        push(TokKind::hole, word, tl, tc);
      } else if (word[0] == '_') {
        throw ParseError("names may not begin with '_': '" + word + "'", tl, tc);
      } else if (word == "w") {
        if (i < src.size() && src[i] == '*') {
          ++i;
          ++col;
          push(TokKind::succeed_atom, "w*", tl, tc);
        } else {
          push(TokKind::fail_atom, "w", tl, tc);
        }
      } else {
        push(TokKind::name, word, tl, tc);
      }
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", tl, tc);
  }
  push(TokKind::end, "", line, col);
  return toks;
}

class Parser {
public:
  Parser(std::string_view src, const ParseOptions& opts)
      : toks_(tokenize(src)), opts_(opts) {}

  SourceProgram parse_file() {
    SourceProgram prog;
    for (;;) {
      skip_newlines();
      if (peek().kind == TokKind::end) break;
      if (peek().kind == TokKind::name && peek(1).kind == TokKind::equals) {
        const Token name = advance();
        advance();  // '='
        if (names_.count(name.text))
          throw ParseError("duplicate definition '" + name.text + "'", name.line, name.col);
        Template body = parse_expr(0);
        const Token& after = peek();
        if (after.kind != TokKind::newline && after.kind != TokKind::end)
          throw ParseError("expected newline after definition of '" + name.text + "'",
                           after.line, after.col);
        names_.emplace(name.text, body);
        prog.definitions.emplace_back(name.text, std::move(body));
        continue;
      }
      const Token& at = peek();
      Template expr = parse_expr(0);
      if (prog.main)
        throw ParseError("multiple top-level expressions", at.line, at.col);
      prog.main = std::move(expr);
      const Token& after = peek();
      if (after.kind != TokKind::newline && after.kind != TokKind::end)
        throw ParseError("expected end of input after expression", after.line, after.col);
    }
    return prog;
  }

private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = i_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& advance() { return toks_[i_++]; }
  void skip_newlines() {
    while (peek().kind == TokKind::newline) advance();
  }

  Template parse_expr(std::size_t depth) {
    const Token& t = peek();
    switch (t.kind) {
      case TokKind::fail_atom:
        advance();
        return Template::atom(Episodic::fail);
      case TokKind::succeed_atom:
        advance();
        return Template::atom(Episodic::succeed);
      case TokKind::hole:
        advance();
        return Template::hole();
      case TokKind::name: {
        const Token tok = advance();
        const auto it = names_.find(tok.text);
        if (it == names_.end())
          throw ParseError("unknown name '" + tok.text + "'", tok.line, tok.col);
        return it->second;
      }
      case TokKind::lbracket:
        return parse_lattice(depth);
      default:
        throw ParseError("expected an expression, found '" + describe(t) + "'", t.line, t.col);
    }
  }

  Template parse_lattice(std::size_t depth) {
    if (depth >= opts_.max_depth)
      throw ResourceError("expression nesting exceeds depth limit (limit " +
                          std::to_string(opts_.max_depth) + ")");
    advance();  // '['
    skip_newlines();
    std::vector<std::vector<Template>> rows;
    if (peek().kind != TokKind::rbracket) {
      for (;;) {
        const Token rowStart = peek();
        std::vector<Template> row;
        while (starts_expr(peek().kind)) {
          row.push_back(parse_expr(depth + 1));
          skip_newlines();
        }
        if (row.empty()) {
          const Token& t = peek();
          throw ParseError("expected an expression, found '" + describe(t) + "'", t.line,
                           t.col);
        }
        if (!rows.empty() && row.size() != rows.front().size())
          throw ParseError("ragged rows: row " + std::to_string(rows.size() + 1) + " has " +
                               std::to_string(row.size()) + " cells, expected " +
                               std::to_string(rows.front().size()),
                           rowStart.line, rowStart.col);
        rows.push_back(std::move(row));
        if (peek().kind == TokKind::semi) {
          advance();
          skip_newlines();
          continue;
        }
        break;
      }
    }
    const Token& t = peek();
    if (t.kind != TokKind::rbracket)
      throw ParseError("expected ']', found '" + describe(t) + "'", t.line, t.col);
    advance();
    if (rows.empty()) return Template::grid(0, 0, {});
    const std::size_t n = rows.front().size();
    std::vector<Template> cells;
    cells.reserve(rows.size() * n);
    for (auto& row : rows)
      for (auto& cell : row) cells.push_back(std::move(cell));
    return Template::grid(rows.size(), n, std::move(cells));
  }

  static bool starts_expr(TokKind k) {
    switch (k) {
      case TokKind::fail_atom:
      case TokKind::succeed_atom:
      case TokKind::hole:
      case TokKind::name:
      case TokKind::lbracket:
        return true;
      default:
        return false;
    }
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case TokKind::end:
        return "end of input";
      case TokKind::newline:
        return "newline";
      default:
        return t.text;
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  ParseOptions opts_;
  std::map<std::string, Template> names_;
};

void print_template(const Template& t, std::string& out) {
  if (t.is_hole()) {
    out += '_';
    return;
  }
  if (t.is_atom()) {
    out += to_text(t.atom_value());
    return;
  }
  out += '[';
  for (std::size_t i = 0; i < t.rows(); ++i) {
    if (i > 0) out += " ; ";
    for (std::size_t j = 0; j < t.cols(); ++j) {
      if (j > 0) out += ' ';
      print_template(t.cells()[i * t.cols() + j], out);
    }
  }
  out += ']';
}

void print_action(const Action& a, std::string& out) {
  if (a.is_episodic()) {
    out += to_text(a.episodic());
    return;
  }
  const ProcessLattice& l = a.flow();
  out += '[';
  for (std::size_t i = 0; i < l.rows(); ++i) {
    if (i > 0) out += " ; ";
    for (std::size_t j = 0; j < l.cols(); ++j) {
      if (j > 0) out += ' ';
      print_action(l.cell(i, j), out);
    }
  }
  out += ']';
}

}  // namespace

SourceProgram parse_program(std::string_view text, const ParseOptions& opts) {
  return Parser(text, opts).parse_file();
}

Template parse_expression(std::string_view text, const ParseOptions& opts) {
  SourceProgram prog = parse_program(text, opts);
  if (!prog.main) throw ParseError("no expression", 1, 1);
  return *std::move(prog.main);
}

Action parse_action(std::string_view text, const ParseOptions& opts) {
  return parse_expression(text, opts).to_action();
}

std::string print_canonical(const Action& a) {
  std::string out;
  print_action(a, out);
  return out;
}

std::string print_canonical(const ProcessLattice& l) { return print_canonical(Action(l)); }

std::string print_canonical(const Template& t) {
  std::string out;
  print_template(t, out);
  return out;
}

}  // namespace epflow
