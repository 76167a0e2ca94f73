#pragma once

#include <optional>

#include "epflow/core.hpp"

namespace epflow {

enum class ConnectiveKind {
  logical_or,
  logical_and,
  logical_not,
  implies,
  implies_alt,
  iff,
};

/// Lattice shape of a connective over operand actions:
///
///   or          [a b ; b w*]
///   and         [a b]
///   not         [a']           (a' the episodic inverse of a)
///   implies     [a' b ; b w*]
///   implies_alt [a b ; w* a']
///   iff         [a b ; b' a']
///
/// Throws EvalError on an arity mismatch.
ProcessLattice encode_connective(ConnectiveKind k, const Action& a,
                                 const std::optional<Action>& b = std::nullopt);

/// Truth value by walking the encoding. `not` evaluates as the star of the
/// operand's own reduction so the truth table holds for flow operands too;
/// its encoding stays the structural inverse.
Episodic eval_connective(ConnectiveKind k, const Action& a,
                         const std::optional<Action>& b = std::nullopt,
                         const InspectOptions& opts = {});

/// Cell-wise equality predicate evaluated inside the calculus. Dimension
/// mismatch reads back w; matching lattices flatten into a single row whose
/// entry for each cell pair is the iff encoding when both are episodic, the
/// recursive eqpl value when both are flows, and w otherwise; the row is
/// then walked. Agrees with structural equality.
Episodic eqpl(const ProcessLattice& a, const ProcessLattice& b, const InspectOptions& opts = {});

}  // namespace epflow
