#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "epflow/errors.hpp"

namespace epflow {

// The two atoms of the calculus. `fail` prints as `w`, `succeed` as `w*`.
enum class Episodic : unsigned char { fail, succeed };

constexpr Episodic star(Episodic e) noexcept {
  return e == Episodic::fail ? Episodic::succeed : Episodic::fail;
}

constexpr const char* to_text(Episodic e) noexcept {
  return e == Episodic::fail ? "w" : "w*";
}

class Action;

/// Rectangular grid of actions, stored row-major. There is a single empty
/// lattice: any grid with zero cells normalizes to 0 x 0.
class ProcessLattice {
public:
  ProcessLattice() noexcept;
  // Throws std::invalid_argument when rows * cols != cells.size().
  ProcessLattice(std::size_t rows, std::size_t cols, std::vector<Action> cells);
  static ProcessLattice from_rows(const std::vector<std::vector<Action>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_empty() const noexcept { return rows_ == 0; }

  // 0-based storage access. The calculus itself speaks 1-based; only the
  // walk implementation and printers poke at cells directly.
  const Action& cell(std::size_t row, std::size_t col) const;
  const std::vector<Action>& cells() const noexcept { return cells_; }

  friend bool operator==(const ProcessLattice& a, const ProcessLattice& b);

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Action> cells_;
};

/// An episodic atom, or a flow carrying a process lattice.
class Action {
public:
  Action(Episodic e) : value_(e) {}
  Action(ProcessLattice flow) : value_(std::move(flow)) {}

  bool is_episodic() const noexcept { return std::holds_alternative<Episodic>(value_); }
  bool is_flow() const noexcept { return !is_episodic(); }
  Episodic episodic() const { return std::get<Episodic>(value_); }
  const ProcessLattice& flow() const { return std::get<ProcessLattice>(value_); }

  friend bool operator==(const Action& a, const Action& b) { return a.value_ == b.value_; }

private:
  std::variant<Episodic, ProcessLattice> value_;
};

inline ProcessLattice::ProcessLattice() noexcept : rows_(0), cols_(0) {}

inline ProcessLattice::ProcessLattice(std::size_t rows, std::size_t cols,
                                      std::vector<Action> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (rows_ * cols_ != cells_.size())
    throw std::invalid_argument("lattice shape does not match cell count");
  if (cells_.empty()) {
    rows_ = 0;
    cols_ = 0;
  }
}

inline const Action& ProcessLattice::cell(std::size_t row, std::size_t col) const {
  return cells_[row * cols_ + col];
}

inline bool operator==(const ProcessLattice& a, const ProcessLattice& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
}

// Single-row and single-column builders; unary encodings live on these.
ProcessLattice make_row(std::vector<Action> cells);
ProcessLattice make_column(std::vector<Action> cells);

/// Result of inspecting an action: failure, or success carrying the payload
/// the walk landed on.
class EpisodeElement {
public:
  static EpisodeElement fail() { return EpisodeElement(); }
  static EpisodeElement succeed(Action payload) {
    EpisodeElement e;
    e.payload_ = std::move(payload);
    return e;
  }

  bool succeeded() const noexcept { return payload_.has_value(); }
  // pre: succeeded()
  const Action& payload() const;

  friend bool operator==(const EpisodeElement& a, const EpisodeElement& b) {
    return a.payload_ == b.payload_;
  }

private:
  EpisodeElement() = default;
  std::optional<Action> payload_;
};

enum class Move : unsigned char { right, down };

// One top-level step of the walk. row/col are the 1-based position before
// the move; `reduced` is what the visited cell reduced to.
struct TraceStep {
  std::size_t row;
  std::size_t col;
  Episodic reduced;
  Move move;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct InspectionOutcome {
  EpisodeElement element;
  std::size_t failures = 0;   // final row position - 1
  std::size_t successes = 0;  // final column position - 1
  std::vector<TraceStep> trace;
};

struct InspectOptions {
  // Nested flows deeper than this raise ResourceError.
  std::size_t depth_limit = 512;
};

/// Inspection walk. Cursors start at (1,1); each step reduces the current
/// cell, moving right on success and down on failure. Falling off the right
/// edge succeeds with the last cell of the current row as payload; falling
/// off the bottom fails. The empty lattice succeeds with payload w.
/// Episodic actions skip the walk: w fails, w* succeeds with payload w.
InspectionOutcome inspect(const ProcessLattice& l, const InspectOptions& opts = {});
InspectionOutcome inspect(const Action& a, const InspectOptions& opts = {});

// Success/failure status alone, without trace or payload.
Episodic inspection_status(const Action& a, const InspectOptions& opts = {});
Episodic inspection_status(const ProcessLattice& l, const InspectOptions& opts = {});

Episodic reduce(const EpisodeElement& e) noexcept;
Episodic reduce_inverse(const EpisodeElement& e) noexcept;

/// Element selection by walk counts: Succeed(cell at row x+1, column y)
/// exactly when that position indexes a cell (x failures then landing in
/// column y), Fail otherwise. x is 0-based-as-a-count, y is 1-based.
EpisodeElement collect(const ProcessLattice& f, std::size_t x, std::size_t y);

/// Transpose with every cell starred, recursively. An involution.
Action episodic_inverse(const Action& a);
ProcessLattice episodic_inverse(const ProcessLattice& l);

/// bar embeds a successful element as the 1 x 2 lattice [w* payload];
/// hat is its partial inverse. Both throw EvalError off their domains.
ProcessLattice bar(const EpisodeElement& e);
Action hat(const ProcessLattice& l);
Action hat(const EpisodeElement& e);

bool structural_eq(const Action& a, const Action& b);
bool structural_eq(const ProcessLattice& a, const ProcessLattice& b);

/// Lattice-shaped expression whose leaves are actions or holes. Substitution
/// replaces every hole, at any depth, with the input as a flow action.
class Template {
public:
  static Template hole();
  static Template atom(Episodic e);
  static Template grid(std::size_t rows, std::size_t cols, std::vector<Template> cells);
  static Template from_action(const Action& a);

  bool is_hole() const noexcept { return std::holds_alternative<HoleTag>(node_); }
  bool is_atom() const noexcept { return std::holds_alternative<Episodic>(node_); }
  bool is_grid() const noexcept { return std::holds_alternative<Grid>(node_); }

  Episodic atom_value() const { return std::get<Episodic>(node_); }
  std::size_t rows() const { return std::get<Grid>(node_).rows; }
  std::size_t cols() const { return std::get<Grid>(node_).cols; }
  const std::vector<Template>& cells() const { return std::get<Grid>(node_).cells; }

  bool has_holes() const;
  // Throws EvalError when holes remain.
  Action to_action() const;
  Action substitute(const ProcessLattice& input) const;

  friend bool operator==(const Template& a, const Template& b) { return a.node_ == b.node_; }

private:
  struct HoleTag {
    friend bool operator==(const HoleTag&, const HoleTag&) noexcept { return true; }
  };
  struct Grid {
    std::size_t rows;
    std::size_t cols;
    std::vector<Template> cells;
    friend bool operator==(const Grid&, const Grid&) = default;
  };

  Template() : node_(HoleTag{}) {}
  std::variant<HoleTag, Episodic, Grid> node_;
};

/// Applies a program to a lattice: substitutes the input at every hole and
/// returns the resulting lattice. Left-associate for chains. Throws
/// EvalError when the substituted program is a bare episodic.
ProcessLattice compose(const ProcessLattice& input, const Template& program);

}  // namespace epflow
