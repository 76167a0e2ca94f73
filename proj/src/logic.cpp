#include "epflow/logic.hpp"

namespace epflow {

namespace {

const Action& require_binary(ConnectiveKind k, const std::optional<Action>& b) {
  if (!b) throw EvalError("connective expects two operands");
  (void)k;
  return *b;
}

}  // namespace

ProcessLattice encode_connective(ConnectiveKind k, const Action& a,
                                 const std::optional<Action>& b) {
  const Action t(Episodic::succeed);
  switch (k) {
    case ConnectiveKind::logical_not:
      if (b) throw EvalError("connective expects one operand");
      return ProcessLattice(1, 1, {episodic_inverse(a)});
    case ConnectiveKind::logical_and:
      return make_row({a, require_binary(k, b)});
    case ConnectiveKind::logical_or: {
      const Action& rhs = require_binary(k, b);
      return ProcessLattice(2, 2, {a, rhs, rhs, t});
    }
    case ConnectiveKind::implies: {
      const Action& rhs = require_binary(k, b);
      return ProcessLattice(2, 2, {episodic_inverse(a), rhs, rhs, t});
    }
    case ConnectiveKind::implies_alt: {
      const Action& rhs = require_binary(k, b);
      return ProcessLattice(2, 2, {a, rhs, t, episodic_inverse(a)});
    }
    case ConnectiveKind::iff: {
      const Action& rhs = require_binary(k, b);
      return ProcessLattice(2, 2, {a, rhs, episodic_inverse(rhs), episodic_inverse(a)});
    }
  }
  throw EvalError("unknown connective");
}

Episodic eval_connective(ConnectiveKind k, const Action& a, const std::optional<Action>& b,
                         const InspectOptions& opts) {
  if (k == ConnectiveKind::logical_not) {
    if (b) throw EvalError("connective expects one operand");
    return star(inspection_status(a, opts));
  }
  return inspection_status(encode_connective(k, a, b), opts);
}

Episodic eqpl(const ProcessLattice& a, const ProcessLattice& b, const InspectOptions& opts) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return Episodic::fail;
  std::vector<Action> cells;
  cells.reserve(a.cells().size());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Action& x = a.cell(i, j);
      const Action& y = b.cell(i, j);
      if (x.is_episodic() && y.is_episodic())
        cells.push_back(Action(encode_connective(ConnectiveKind::iff, x, y)));
      else if (x.is_flow() && y.is_flow())
        cells.push_back(Action(eqpl(x.flow(), y.flow(), opts)));
      else
        cells.push_back(Action(Episodic::fail));
    }
  }
  return inspection_status(make_row(std::move(cells)), opts);
}

}  // namespace epflow
