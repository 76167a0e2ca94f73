#include "epflow/core.hpp"

#include <string>

namespace epflow {

namespace {

// Recursive status of one action. The walk over a flow is iterative; only
// nested flows recurse, guarded by the depth limit.
Episodic walk_status(const Action& a, std::size_t depth, const InspectOptions& opts) {
  if (a.is_episodic()) return a.episodic();
  if (depth >= opts.depth_limit)
    throw ResourceError("inspection recursion depth limit exceeded (limit " +
                        std::to_string(opts.depth_limit) + ")");
  const ProcessLattice& l = a.flow();
  if (l.is_empty()) return Episodic::succeed;
  const std::size_t m = l.rows();
  const std::size_t n = l.cols();
  std::size_t p = 0;
  std::size_t q = 0;
  while (p < m && q < n) {
    if (walk_status(l.cell(p, q), depth + 1, opts) == Episodic::fail)
      ++p;
    else
      ++q;
  }
  return q == n ? Episodic::succeed : Episodic::fail;
}

}  // namespace

ProcessLattice make_row(std::vector<Action> cells) {
  const std::size_t n = cells.size();
  return ProcessLattice(n == 0 ? 0 : 1, n, std::move(cells));
}

ProcessLattice make_column(std::vector<Action> cells) {
  const std::size_t n = cells.size();
  return ProcessLattice(n, n == 0 ? 0 : 1, std::move(cells));
}

ProcessLattice ProcessLattice::from_rows(const std::vector<std::vector<Action>>& rows) {
  if (rows.empty()) return ProcessLattice();
  const std::size_t n = rows.front().size();
  std::vector<Action> cells;
  cells.reserve(rows.size() * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw std::invalid_argument("ragged rows");
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return ProcessLattice(rows.size(), n, std::move(cells));
}

const Action& EpisodeElement::payload() const {
  if (!payload_) throw EvalError("episode element w carries no payload");
  return *payload_;
}

InspectionOutcome inspect(const ProcessLattice& l, const InspectOptions& opts) {
  InspectionOutcome out{EpisodeElement::fail(), 0, 0, {}};
  if (l.is_empty()) {
    out.element = EpisodeElement::succeed(Action(Episodic::fail));
    return out;
  }
  const std::size_t m = l.rows();
  const std::size_t n = l.cols();
  std::size_t p = 0;
  std::size_t q = 0;
  while (p < m && q < n) {
    const Episodic r = walk_status(l.cell(p, q), 1, opts);
    out.trace.push_back({p + 1, q + 1, r, r == Episodic::fail ? Move::down : Move::right});
    if (r == Episodic::fail)
      ++p;
    else
      ++q;
  }
  out.failures = p;
  out.successes = q;
  if (q == n)
    out.element = EpisodeElement::succeed(l.cell(p, n - 1));
  else
    out.element = EpisodeElement::fail();
  return out;
}

InspectionOutcome inspect(const Action& a, const InspectOptions& opts) {
  if (a.is_flow()) return inspect(a.flow(), opts);
  InspectionOutcome out{EpisodeElement::fail(), 0, 0, {}};
  if (a.episodic() == Episodic::succeed)
    out.element = EpisodeElement::succeed(Action(Episodic::fail));
  return out;
}

Episodic inspection_status(const Action& a, const InspectOptions& opts) {
  return walk_status(a, 0, opts);
}

Episodic inspection_status(const ProcessLattice& l, const InspectOptions& opts) {
  return walk_status(Action(l), 0, opts);
}

Episodic reduce(const EpisodeElement& e) noexcept {
  return e.succeeded() ? Episodic::succeed : Episodic::fail;
}

Episodic reduce_inverse(const EpisodeElement& e) noexcept { return star(reduce(e)); }

EpisodeElement collect(const ProcessLattice& f, std::size_t x, std::size_t y) {
  if (x < f.rows() && y >= 1 && y <= f.cols()) return EpisodeElement::succeed(f.cell(x, y - 1));
  return EpisodeElement::fail();
}

Action episodic_inverse(const Action& a) {
  if (a.is_episodic()) return Action(star(a.episodic()));
  return Action(episodic_inverse(a.flow()));
}

ProcessLattice episodic_inverse(const ProcessLattice& l) {
  if (l.is_empty()) return ProcessLattice();
  const std::size_t m = l.rows();
  const std::size_t n = l.cols();
  std::vector<Action> cells;
  cells.reserve(m * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) cells.push_back(episodic_inverse(l.cell(j, i)));
  return ProcessLattice(n, m, std::move(cells));
}

ProcessLattice bar(const EpisodeElement& e) {
  if (!e.succeeded()) throw EvalError("bar undefined on w");
  return make_row({Action(Episodic::succeed), e.payload()});
}

Action hat(const ProcessLattice& l) {
  if (l.rows() == 1 && l.cols() == 2 && l.cell(0, 0) == Action(Episodic::succeed))
    return l.cell(0, 1);
  throw EvalError("hat undefined: expected the 1 x 2 form [w* a]");
}

Action hat(const EpisodeElement& e) {
  if (!e.succeeded()) throw EvalError("hat undefined on w");
  return e.payload();
}

bool structural_eq(const Action& a, const Action& b) { return a == b; }

bool structural_eq(const ProcessLattice& a, const ProcessLattice& b) { return a == b; }

Template Template::hole() { return Template(); }

Template Template::atom(Episodic e) {
  Template t;
  t.node_ = e;
  return t;
}

Template Template::grid(std::size_t rows, std::size_t cols, std::vector<Template> cells) {
  if (rows * cols != cells.size())
    throw std::invalid_argument("template shape does not match cell count");
  Template t;
  if (cells.empty())
    t.node_ = Grid{0, 0, {}};
  else
    t.node_ = Grid{rows, cols, std::move(cells)};
  return t;
}

Template Template::from_action(const Action& a) {
  if (a.is_episodic()) return atom(a.episodic());
  const ProcessLattice& l = a.flow();
  std::vector<Template> cells;
  cells.reserve(l.cells().size());
  for (const Action& c : l.cells()) cells.push_back(from_action(c));
  return grid(l.rows(), l.cols(), std::move(cells));
}

bool Template::has_holes() const {
  if (is_hole()) return true;
  if (is_atom()) return false;
  for (const Template& c : cells())
    if (c.has_holes()) return true;
  return false;
}

Action Template::to_action() const {
  if (is_hole()) throw EvalError("expression contains holes");
  if (is_atom()) return Action(atom_value());
  std::vector<Action> out;
  out.reserve(cells().size());
  for (const Template& c : cells()) out.push_back(c.to_action());
  return Action(ProcessLattice(rows(), cols(), std::move(out)));
}

Action Template::substitute(const ProcessLattice& input) const {
  if (is_hole()) return Action(input);
  if (is_atom()) return Action(atom_value());
  std::vector<Action> out;
  out.reserve(cells().size());
  for (const Template& c : cells()) out.push_back(c.substitute(input));
  return Action(ProcessLattice(rows(), cols(), std::move(out)));
}

ProcessLattice compose(const ProcessLattice& input, const Template& program) {
  const Action r = program.substitute(input);
  if (!r.is_flow()) throw EvalError("program does not produce a lattice");
  return r.flow();
}

}  // namespace epflow
