#pragma once

#include <string>
#include <vector>

#include "epflow/core.hpp"
#include "epflow/typing.hpp"

namespace epflow {

// How much of a value's identity survives a rewrite, coarsest last.
enum class LossLabel : unsigned char {
  identity,     // structurally unchanged
  gamma_dot,    // same type and same content invariant
  gamma_ddot,   // same content invariant only
  gamma_dddot,  // one side's step block occurs inside the other's structure
  gamma,        // nothing retained
};

unsigned degree_of(LossLabel label) noexcept;  // 0, 1, 2, 2, 3
const char* label_name(LossLabel label) noexcept;

struct LossDegree {
  LossLabel label;
  unsigned degree;

  friend bool operator==(const LossDegree&, const LossDegree&) = default;
};

/// First matching rule wins: structural equality, then type-and-invariant
/// agreement, then invariant agreement, then precedence in either
/// direction, else total loss. Symmetric and total.
LossDegree degrees_of_loss(const Action& before, const Action& after);

/// Single-row lattice of slots. A slot is either freed (the bare atom w*)
/// or occupied: a 1 x 2 flow [w* payload] whose payload is itself a flow.
/// The empty lattice is the state with no slots.
class State {
public:
  // Throws EvalError when the lattice is not state-shaped.
  explicit State(ProcessLattice lattice);

  // Reason the lattice is not a state, or nullopt when it is one.
  static std::optional<std::string> check(const ProcessLattice& l);

  const ProcessLattice& lattice() const noexcept { return lattice_; }
  std::size_t size() const noexcept { return lattice_.cols(); }

  // 1-based, like every position the calculus exposes.
  const Action& slot(std::size_t index) const;
  bool is_freed(std::size_t index) const;

  friend bool operator==(const State& a, const State& b) { return a.lattice_ == b.lattice_; }

private:
  ProcessLattice lattice_;
};

/// Handle into a state: the slot's owner plus a 1-based index.
struct Reference {
  State state;
  std::size_t index;
};

// The referenced slot cell itself. Throws EvalError when the index is out
// of range.
Action reference_lattice(const Reference& r);

/// Applies a program to a state: composes, walks, and reads the landing
/// payload back as the new state. Throws EvalError when the walk fails
/// ("program failed") or the payload is not state-shaped.
State run_state(const State& s, const Template& program, const InspectOptions& opts = {});

/// Whether running the program leaves slot `index` freed; the one-argument
/// form asks it of every slot of `s`. A slot that no longer exists in the
/// result does not count as freed.
bool freed_through(const State& s, const Template& program, std::size_t index,
                   const InspectOptions& opts = {});
bool freed_through(const State& s, const Template& program, const InspectOptions& opts = {});

/// Loss degree of each requested reference across the run: the slot cell
/// before against the slot cell after. A reference is dead exactly when its
/// label is gamma.
std::vector<LossDegree> analyze_references(const State& s, const Template& program,
                                           const std::vector<std::size_t>& indices,
                                           const InspectOptions& opts = {});

/// Same analysis phrased as one nested expression: realize every reference
/// over the result as a single row, walk that row wrapped as a 1 x 1
/// lattice, and read the landing payload back. Covers every slot of `s`.
std::vector<LossDegree> analyze_references_literal(const State& s, const Template& program,
                                                   const InspectOptions& opts = {});

}  // namespace epflow
