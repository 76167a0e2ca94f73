#include "epflow/entropy.hpp"

namespace epflow {

unsigned degree_of(LossLabel label) noexcept {
  switch (label) {
    case LossLabel::identity:
      return 0;
    case LossLabel::gamma_dot:
      return 1;
    case LossLabel::gamma_ddot:
    case LossLabel::gamma_dddot:
      return 2;
    case LossLabel::gamma:
      return 3;
  }
  return 3;
}

const char* label_name(LossLabel label) noexcept {
  switch (label) {
    case LossLabel::identity:
      return "identity";
    case LossLabel::gamma_dot:
      return "gamma-dot";
    case LossLabel::gamma_ddot:
      return "gamma-ddot";
    case LossLabel::gamma_dddot:
      return "gamma-dddot";
    case LossLabel::gamma:
      return "gamma";
  }
  return "gamma";
}

LossDegree degrees_of_loss(const Action& before, const Action& after) {
  const auto make = [](LossLabel l) { return LossDegree{l, degree_of(l)}; };
  if (structural_eq(before, after)) return make(LossLabel::identity);
  const bool chi_equal = canonical_invariant(before) == canonical_invariant(after);
  if (same_type(before, after) && chi_equal) return make(LossLabel::gamma_dot);
  if (chi_equal) return make(LossLabel::gamma_ddot);
  if (precedes(before, after) || precedes(after, before)) return make(LossLabel::gamma_dddot);
  return make(LossLabel::gamma);
}

std::optional<std::string> State::check(const ProcessLattice& l) {
  if (l.is_empty()) return std::nullopt;
  if (l.rows() != 1) return "a state is a single row";
  for (std::size_t j = 0; j < l.cols(); ++j) {
    const Action& cell = l.cell(0, j);
    const std::string where = "slot " + std::to_string(j + 1);
    if (cell.is_episodic()) {
      if (cell.episodic() != Episodic::succeed)
        return where + " is w, which is neither freed nor occupied";
      continue;
    }
    const ProcessLattice& slot = cell.flow();
    if (slot.rows() != 1 || slot.cols() != 2)
      return where + " is not the 1 x 2 occupied form [w* payload]";
    if (!(slot.cell(0, 0) == Action(Episodic::succeed)))
      return where + " does not start with w*";
    if (!slot.cell(0, 1).is_flow()) return where + " payload is not a flow";
  }
  return std::nullopt;
}

State::State(ProcessLattice lattice) : lattice_(std::move(lattice)) {
  if (const auto reason = check(lattice_)) throw EvalError("invalid state: " + *reason);
}

const Action& State::slot(std::size_t index) const {
  if (index < 1 || index > size()) throw EvalError("reference index out of range");
  return lattice_.cell(0, index - 1);
}

bool State::is_freed(std::size_t index) const {
  return slot(index) == Action(Episodic::succeed);
}

Action reference_lattice(const Reference& r) { return r.state.slot(r.index); }

State run_state(const State& s, const Template& program, const InspectOptions& opts) {
  const ProcessLattice composed = compose(s.lattice(), program);
  const InspectionOutcome out = inspect(composed, opts);
  if (!out.element.succeeded()) throw EvalError("program failed");
  const Action& payload = out.element.payload();
  if (!payload.is_flow()) throw EvalError("result is not a state: payload is episodic");
  if (const auto reason = State::check(payload.flow()))
    throw EvalError("result is not a state: " + *reason);
  return State(payload.flow());
}

bool freed_through(const State& s, const Template& program, std::size_t index,
                   const InspectOptions& opts) {
  if (index < 1 || index > s.size()) throw EvalError("reference index out of range");
  const State after = run_state(s, program, opts);
  return index <= after.size() && after.is_freed(index);
}

bool freed_through(const State& s, const Template& program, const InspectOptions& opts) {
  const State after = run_state(s, program, opts);
  for (std::size_t i = 1; i <= s.size(); ++i)
    if (i > after.size() || !after.is_freed(i)) return false;
  return true;
}

std::vector<LossDegree> analyze_references(const State& s, const Template& program,
                                           const std::vector<std::size_t>& indices,
                                           const InspectOptions& opts) {
  for (const std::size_t i : indices)
    if (i < 1 || i > s.size()) throw EvalError("reference index out of range");
  const State after = run_state(s, program, opts);
  std::vector<LossDegree> out;
  out.reserve(indices.size());
  for (const std::size_t i : indices)
    out.push_back(degrees_of_loss(reference_lattice({s, i}), reference_lattice({after, i})));
  return out;
}

std::vector<LossDegree> analyze_references_literal(const State& s, const Template& program,
                                                   const InspectOptions& opts) {
  const State after = run_state(s, program, opts);
  if (after.size() < s.size()) throw EvalError("reference index out of range");
  // Row of realized references over the result; for index k the reference
  // realizes to the k-th slot cell, so the row is the result's own row.
  std::vector<Action> realized;
  realized.reserve(s.size());
  for (std::size_t i = 1; i <= s.size(); ++i)
    realized.push_back(reference_lattice({after, i}));
  const ProcessLattice row = make_row(std::move(realized));
  const ProcessLattice wrapped(1, 1, {Action(row)});
  const InspectionOutcome out = inspect(wrapped, opts);
  if (!out.element.succeeded()) throw EvalError("reference row failed inspection");
  const Action landed = hat(out.element);
  if (!landed.is_flow() || !(landed.flow() == row))
    throw EvalError("reference row did not read back");
  std::vector<LossDegree> degrees;
  degrees.reserve(s.size());
  for (std::size_t i = 1; i <= s.size(); ++i)
    degrees.push_back(degrees_of_loss(reference_lattice({s, i}),
                                      landed.flow().cell(0, i - 1)));
  return degrees;
}

}  // namespace epflow
