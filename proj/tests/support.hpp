#pragma once

// Deterministic value generators and tiny oracles shared by the test
// binaries. Every test seeds its own engine so a failure reproduces exactly.

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "epflow/core.hpp"

namespace epflow::testgen {

using Rng = std::mt19937;

struct GenOptions {
  std::size_t max_rows = 4;
  std::size_t max_cols = 4;
  std::size_t max_nesting = 2;     // flow levels allowed below the one being built
  double flow_cell_chance = 0.25;  // chance a cell is itself a flow
  double empty_chance = 0.1;       // chance a requested lattice is the empty one
  double hole_chance = 0.2;        // template leaves only
  bool allow_empty = true;
};

inline Episodic episodic(Rng& rng) {
  return std::bernoulli_distribution(0.5)(rng) ? Episodic::succeed : Episodic::fail;
}

inline ProcessLattice lattice(Rng& rng, const GenOptions& o, std::size_t level = 0);

inline Action action(Rng& rng, const GenOptions& o, std::size_t level = 0) {
  if (level < o.max_nesting && std::bernoulli_distribution(o.flow_cell_chance)(rng))
    return Action(lattice(rng, o, level + 1));
  return Action(episodic(rng));
}

inline ProcessLattice lattice(Rng& rng, const GenOptions& o, std::size_t level) {
  if (o.allow_empty && std::bernoulli_distribution(o.empty_chance)(rng))
    return ProcessLattice();
  const std::size_t m = std::uniform_int_distribution<std::size_t>(1, o.max_rows)(rng);
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, o.max_cols)(rng);
  std::vector<Action> cells;
  cells.reserve(m * n);
  for (std::size_t i = 0; i < m * n; ++i) cells.push_back(action(rng, o, level));
  return ProcessLattice(m, n, std::move(cells));
}

inline Template template_grid(Rng& rng, const GenOptions& o, std::size_t level = 0);

inline Template template_leaf(Rng& rng, const GenOptions& o, std::size_t level) {
  if (level < o.max_nesting && std::bernoulli_distribution(o.flow_cell_chance)(rng))
    return template_grid(rng, o, level + 1);
  if (std::bernoulli_distribution(o.hole_chance)(rng)) return Template::hole();
  return Template::atom(episodic(rng));
}

inline Template template_grid(Rng& rng, const GenOptions& o, std::size_t level) {
  if (o.allow_empty && std::bernoulli_distribution(o.empty_chance)(rng))
    return Template::grid(0, 0, {});
  const std::size_t m = std::uniform_int_distribution<std::size_t>(1, o.max_rows)(rng);
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, o.max_cols)(rng);
  std::vector<Template> cells;
  cells.reserve(m * n);
  for (std::size_t i = 0; i < m * n; ++i) cells.push_back(template_leaf(rng, o, level));
  return Template::grid(m, n, std::move(cells));
}

// Leaf census: how many w and w* an action contributes to its content
// invariant. Empty flows count one of each.
struct LeafCount {
  std::uint64_t fails = 0;
  std::uint64_t succeeds = 0;
};

inline void count_leaves(const Action& a, LeafCount& c) {
  if (a.is_episodic()) {
    if (a.episodic() == Episodic::fail)
      ++c.fails;
    else
      ++c.succeeds;
    return;
  }
  const ProcessLattice& f = a.flow();
  if (f.is_empty()) {
    ++c.fails;
    ++c.succeeds;
    return;
  }
  for (const Action& cell : f.cells()) count_leaves(cell, c);
}

inline LeafCount count_leaves(const Action& a) {
  LeafCount c;
  count_leaves(a, c);
  return c;
}

}  // namespace epflow::testgen
