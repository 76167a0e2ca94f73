#include "epflow/numerics.hpp"

#include <numeric>

namespace epflow {

namespace {

// Top row of a lattice whose colift is >= 0; every such cell reduces to
// success, so concatenations stay faithful to the walk.
void append_top_row(const ProcessLattice& l, std::vector<Action>& out) {
  for (std::size_t j = 0; j < l.cols(); ++j) out.push_back(l.cell(0, j));
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw EvalError("zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const std::int64_t g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

ProcessLattice lift_int(std::int64_t n) {
  if (n == 0) return ProcessLattice();
  std::vector<Action> cells;
  if (n > 0) {
    cells.assign(static_cast<std::size_t>(n), Action(Episodic::succeed));
    return make_row(std::move(cells));
  }
  cells.assign(static_cast<std::size_t>(-n), Action(Episodic::fail));
  cells.push_back(Action(Episodic::succeed));
  return make_column(std::move(cells));
}

std::int64_t colift_int(const ProcessLattice& l, const InspectOptions& opts) {
  const InspectionOutcome out = inspect(l, opts);
  if (!out.element.succeeded()) throw EvalError("not an integer encoding: inspection failed");
  if (out.failures == 0) return static_cast<std::int64_t>(out.successes);
  return -static_cast<std::int64_t>(out.failures);
}

ProcessLattice int_add(const ProcessLattice& a, const ProcessLattice& b,
                       const InspectOptions& opts) {
  const std::int64_t av = colift_int(a, opts);
  const std::int64_t bv = colift_int(b, opts);
  if (av < 0 || bv < 0) return lift_int(av + bv);
  std::vector<Action> cells;
  append_top_row(a, cells);
  append_top_row(b, cells);
  return make_row(std::move(cells));
}

ProcessLattice int_sub(const ProcessLattice& a, const ProcessLattice& b,
                       const InspectOptions& opts) {
  const std::int64_t av = colift_int(a, opts);
  const std::int64_t bv = colift_int(b, opts);
  if (av < 0 || bv < 0) return lift_int(av - bv);
  if (av >= bv) return lift_int(av - bv);
  // Structural negative form: the row of b-a successes then w, inverted.
  std::vector<Action> cells(static_cast<std::size_t>(bv - av), Action(Episodic::succeed));
  cells.push_back(Action(Episodic::fail));
  return episodic_inverse(make_row(std::move(cells)));
}

ProcessLattice int_neg(const ProcessLattice& a, const InspectOptions& opts) {
  return lift_int(-colift_int(a, opts));
}

ProcessLattice lift_rat(const Rational& r) {
  if (r.num() == 0) return ProcessLattice();
  const std::int64_t n = r.num() > 0 ? r.num() : -r.num();
  const std::int64_t d = r.num() > 0 ? r.den() : -r.den();
  std::vector<Action> cells(static_cast<std::size_t>(n), Action(Episodic::succeed));
  cells.push_back(Action(lift_int(d)));
  return make_row(std::move(cells));
}

Rational colift_rat(const ProcessLattice& l, const InspectOptions& opts) {
  if (l.is_empty()) return Rational();
  const InspectionOutcome out = inspect(l, opts);
  if (!out.element.succeeded()) throw EvalError("not a rational encoding: inspection failed");
  const Action& payload = out.element.payload();
  if (!payload.is_flow()) throw EvalError("not a rational encoding: payload is episodic");
  std::int64_t den = 0;
  try {
    den = colift_int(payload.flow(), opts);
  } catch (const EvalError&) {
    throw EvalError("not a rational encoding: payload is not an integer encoding");
  }
  if (den == 0) throw EvalError("not a rational encoding: zero denominator");
  return Rational(static_cast<std::int64_t>(out.successes) - 1, den);
}

}  // namespace epflow
