#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <optional>

#include "epflow/dsl.hpp"
#include "epflow/logic.hpp"
#include "support.hpp"

using namespace epflow;

namespace {

ProcessLattice lat(const char* text) { return parse_action(text).flow(); }

const Action W{Episodic::fail};
const Action WS{Episodic::succeed};

Action atom(bool v) { return v ? WS : W; }

Episodic ep(bool v) { return v ? Episodic::succeed : Episodic::fail; }

}  // namespace

TEST_CASE("connective encodings take the documented shapes") {
  CHECK(encode_connective(ConnectiveKind::logical_and, WS, W) == lat("[w* w]"));
  CHECK(encode_connective(ConnectiveKind::logical_or, W, W) == lat("[w w ; w w*]"));
  CHECK(encode_connective(ConnectiveKind::iff, W, W) == lat("[w w ; w* w*]"));
  CHECK(encode_connective(ConnectiveKind::logical_not, W) == lat("[w*]"));
  CHECK(encode_connective(ConnectiveKind::logical_not, WS) == lat("[w]"));
  CHECK(encode_connective(ConnectiveKind::implies, WS, W) == lat("[w w ; w w*]"));
  CHECK(encode_connective(ConnectiveKind::implies_alt, WS, W) == lat("[w* w ; w* w]"));
  // Flow operands embed unchanged; not inverts them structurally.
  CHECK(encode_connective(ConnectiveKind::logical_not, parse_action("[w* w]")) ==
        lat("[[w ; w*]]"));
}

TEST_CASE("connective arity is checked") {
  CHECK_THROWS_AS(encode_connective(ConnectiveKind::logical_or, W), EvalError);
  CHECK_THROWS_AS(encode_connective(ConnectiveKind::logical_not, W, WS), EvalError);
  CHECK_THROWS_AS(eval_connective(ConnectiveKind::iff, W), EvalError);
  CHECK_THROWS_AS(eval_connective(ConnectiveKind::logical_not, W, WS), EvalError);
}

TEST_CASE("truth tables match the classical connectives") {
  for (const bool a : {false, true}) {
    CHECK(eval_connective(ConnectiveKind::logical_not, atom(a)) == ep(!a));
    for (const bool b : {false, true}) {
      CHECK(eval_connective(ConnectiveKind::logical_or, atom(a), atom(b)) == ep(a || b));
      CHECK(eval_connective(ConnectiveKind::logical_and, atom(a), atom(b)) == ep(a && b));
      CHECK(eval_connective(ConnectiveKind::implies, atom(a), atom(b)) == ep(!a || b));
      CHECK(eval_connective(ConnectiveKind::implies_alt, atom(a), atom(b)) == ep(!a || b));
      CHECK(eval_connective(ConnectiveKind::iff, atom(a), atom(b)) == ep(a == b));
    }
  }
}

TEST_CASE("the two implication encodings agree") {
  for (const bool a : {false, true})
    for (const bool b : {false, true})
      CHECK(eval_connective(ConnectiveKind::implies, atom(a), atom(b)) ==
            eval_connective(ConnectiveKind::implies_alt, atom(a), atom(b)));
}

TEST_CASE("connectives accept flow operands via their reductions") {
  // The empty flow reduces to success, so its negation is failure; walking
  // the structural encoding [[]] would wrongly succeed.
  CHECK(eval_connective(ConnectiveKind::logical_not, Action(ProcessLattice())) ==
        Episodic::fail);

  // Flows with no empty sublattice anywhere: agreement is exact. The empty
  // flow is excluded below because it breaks inversion, not reduction; the
  // boundary has its own case.
  testgen::Rng rng(201);
  testgen::GenOptions o;
  o.allow_empty = false;
  const std::array<ConnectiveKind, 5> binary = {
      ConnectiveKind::logical_or, ConnectiveKind::logical_and, ConnectiveKind::implies,
      ConnectiveKind::implies_alt, ConnectiveKind::iff};
  for (int i = 0; i < 200; ++i) {
    const Action a = testgen::action(rng, o);
    const Action b = testgen::action(rng, o);
    const Action ra = Action(inspection_status(a));
    const Action rb = Action(inspection_status(b));
    for (const ConnectiveKind k : binary)
      CHECK(eval_connective(k, a, b) == eval_connective(k, ra, rb));
    CHECK(eval_connective(ConnectiveKind::logical_not, a) ==
          eval_connective(ConnectiveKind::logical_not, ra));
  }
}

TEST_CASE("the empty flow is the boundary of the reduction agreement") {
  // [] is its own structural inverse yet reduces to success, so every
  // encoding that embeds an inverted operand reads the empty operand as
  // false where its reduction says true. or and and embed operands plain
  // and still agree; not is evaluated by reduction on purpose.
  const Action empty = Action(ProcessLattice());
  const Action t = Action(Episodic::succeed);
  const Action f = Action(Episodic::fail);

  CHECK(eval_connective(ConnectiveKind::logical_or, empty, f) == Episodic::succeed);
  CHECK(eval_connective(ConnectiveKind::logical_and, empty, f) == Episodic::fail);
  CHECK(eval_connective(ConnectiveKind::logical_and, empty, t) == Episodic::succeed);
  CHECK(eval_connective(ConnectiveKind::logical_not, empty) == Episodic::fail);

  // Reduction says T -> F = F, but the walked encodings land on success.
  CHECK(eval_connective(ConnectiveKind::implies, t, f) == Episodic::fail);
  CHECK(eval_connective(ConnectiveKind::implies, empty, f) == Episodic::succeed);
  CHECK(eval_connective(ConnectiveKind::implies_alt, empty, f) == Episodic::succeed);
  CHECK(eval_connective(ConnectiveKind::iff, empty, f) == Episodic::succeed);
  CHECK(eval_connective(ConnectiveKind::iff, f, empty) == Episodic::succeed);

  // The plain operand position stays faithful even when empty.
  CHECK(eval_connective(ConnectiveKind::implies, f, empty) == Episodic::succeed);
  CHECK(eval_connective(ConnectiveKind::implies, t, empty) == Episodic::succeed);
}

TEST_CASE("eqpl compares cell-wise inside the calculus") {
  CHECK(eqpl(lat("[w* w]"), lat("[w* w]")) == Episodic::succeed);
  CHECK(eqpl(lat("[w* w]"), lat("[w w]")) == Episodic::fail);
  CHECK(eqpl(lat("[w*]"), lat("[w* w*]")) == Episodic::fail);
  CHECK(eqpl(lat("[w w]"), lat("[w ; w]")) == Episodic::fail);
  CHECK(eqpl(ProcessLattice(), ProcessLattice()) == Episodic::succeed);
  CHECK(eqpl(ProcessLattice(), lat("[w]")) == Episodic::fail);

  // Nested flows recurse; mixed cell kinds count as unequal.
  CHECK(eqpl(lat("[[w*] w]"), lat("[[w*] w]")) == Episodic::succeed);
  CHECK(eqpl(lat("[[w*] w]"), lat("[[w] w]")) == Episodic::fail);
  CHECK(eqpl(lat("[w [w]]"), lat("[w w]")) == Episodic::fail);
  CHECK(eqpl(lat("[[] w*]"), lat("[[] w*]")) == Episodic::succeed);
}

TEST_CASE("eqpl agrees with structural equality") {
  testgen::Rng rng(202);
  const testgen::GenOptions o;
  for (int i = 0; i < 500; ++i) {
    const ProcessLattice a = testgen::lattice(rng, o);
    const ProcessLattice b = (i % 2 == 0) ? a : testgen::lattice(rng, o);
    const bool eq = structural_eq(a, b);
    CHECK(eqpl(a, b) == (eq ? Episodic::succeed : Episodic::fail));
    CHECK(eqpl(a, b) == eqpl(b, a));
    CHECK(eqpl(a, a) == Episodic::succeed);
  }
}

TEST_CASE("eqpl rejects any dimension mismatch outright") {
  testgen::Rng rng(203);
  testgen::GenOptions o;
  o.allow_empty = false;
  for (int i = 0; i < 100; ++i) {
    const ProcessLattice a = testgen::lattice(rng, o);
    const ProcessLattice b = testgen::lattice(rng, o);
    if (a.rows() != b.rows() || a.cols() != b.cols())
      CHECK(eqpl(a, b) == Episodic::fail);
  }
}
