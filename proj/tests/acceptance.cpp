// Acceptance suite. Runs thirteen independent criteria, prints one line per
// criterion with its wall-clock time, and exits nonzero if any criterion
// fails its checks or overruns its time budget. Every random suite is
// seeded, so a failure here reproduces exactly.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "epflow/cli.hpp"
#include "epflow/core.hpp"
#include "epflow/dsl.hpp"
#include "epflow/entropy.hpp"
#include "epflow/logic.hpp"
#include "epflow/numerics.hpp"
#include "epflow/typing.hpp"
#include "support.hpp"

using namespace epflow;
namespace gen = epflow::testgen;

namespace {

const Action W{Episodic::fail};
const Action WS{Episodic::succeed};

struct Check {
  bool ok = true;
  std::string why;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

struct CliRun {
  int code;
  std::string out;
};

CliRun run_cli_line(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str()};
}

Action flow(const std::string& text) { return parse_action(text); }

ProcessLattice lat(const std::string& text) { return parse_action(text).flow(); }

Episodic truth(bool b) { return b ? Episodic::succeed : Episodic::fail; }

// 1: the two display forms for small integers, through the CLI.
void c01(Check& c) {
  const CliRun two = run_cli_line({"int", "lift", "2"});
  c.expect(two.code == 0 && two.out == "[w* w*]\n", "lift 2 display");
  const CliRun neg = run_cli_line({"int", "lift", "-5"});
  c.expect(neg.code == 0 && neg.out == "[w ; w ; w ; w ; w ; w*]\n", "lift -5 display");
  c.expect(print_canonical(lift_int(2)) == "[w* w*]", "lift 2 canonical text");
  c.expect(print_canonical(lift_int(-5)) == "[w ; w ; w ; w ; w ; w*]", "lift -5 canonical text");
}

// 2: colift inverts lift across the signed range.
void c02(Check& c) {
  for (std::int64_t n = -200; n <= 200; ++n)
    c.expect(colift_int(lift_int(n)) == n, "round trip at " + std::to_string(n));
}

// 3: add and sub read back as arithmetic on both structural branches; neg
// reads back as negation.
void c03(Check& c) {
  for (std::int64_t a = 0; a <= 40; ++a) {
    const ProcessLattice la = lift_int(a);
    for (std::int64_t b = 0; b <= 40; ++b) {
      const ProcessLattice lb = lift_int(b);
      c.expect(colift_int(int_add(la, lb)) == a + b,
               "add " + std::to_string(a) + "+" + std::to_string(b));
      c.expect(colift_int(int_sub(la, lb)) == a - b,
               "sub " + std::to_string(a) + "-" + std::to_string(b));
    }
  }
  for (std::int64_t a = -40; a <= 40; ++a)
    c.expect(colift_int(int_neg(lift_int(a))) == -a, "neg " + std::to_string(a));
}

// 4: rational lift round trips over a signed grid; the worked 3/2 form
// reads back.
void c04(Check& c) {
  for (std::int64_t p = 0; p <= 12; ++p) {
    for (std::int64_t q = -12; q <= 12; ++q) {
      if (q == 0) continue;
      const Rational r(p, q);
      c.expect(colift_rat(lift_rat(r)) == r,
               "round trip at " + std::to_string(p) + "/" + std::to_string(q));
    }
  }
  c.expect(colift_rat(lat("[w* w* w* [w* w*]]")) == Rational(3, 2), "worked 3/2 form");
}

// 5: the connectives match the classical tables, the two implication
// encodings agree, and flow operands behave like their reductions.
void c05(Check& c) {
  const bool vals[2] = {false, true};
  for (const bool a : vals) {
    for (const bool b : vals) {
      const Action A{truth(a)};
      const Action B{truth(b)};
      c.expect(eval_connective(ConnectiveKind::logical_or, A, B) == truth(a || b), "or table");
      c.expect(eval_connective(ConnectiveKind::logical_and, A, B) == truth(a && b), "and table");
      c.expect(eval_connective(ConnectiveKind::implies, A, B) == truth(!a || b),
               "implies table");
      c.expect(eval_connective(ConnectiveKind::implies_alt, A, B) == truth(!a || b),
               "implies-alt table");
      c.expect(eval_connective(ConnectiveKind::implies, A, B) ==
                   eval_connective(ConnectiveKind::implies_alt, A, B),
               "implication encodings agree");
      c.expect(eval_connective(ConnectiveKind::iff, A, B) == truth(a == b), "iff table");
    }
    c.expect(eval_connective(ConnectiveKind::logical_not, Action{truth(a)}) == truth(!a),
             "not table");
  }

  // No empty sublattices: the empty flow is its own structural inverse yet
  // reduces to success, so the inverse-bearing encodings cannot track
  // reductions across it. Inversion laws are scoped the same way.
  gen::Rng rng(6005);
  gen::GenOptions o;
  o.allow_empty = false;
  const ConnectiveKind binary[] = {ConnectiveKind::logical_or, ConnectiveKind::logical_and,
                                   ConnectiveKind::implies, ConnectiveKind::implies_alt,
                                   ConnectiveKind::iff};
  for (int i = 0; i < 200; ++i) {
    const Action A{gen::lattice(rng, o)};
    const Action B{gen::lattice(rng, o)};
    const Action ra{inspection_status(A)};
    const Action rb{inspection_status(B)};
    for (const ConnectiveKind k : binary)
      c.expect(eval_connective(k, A, B) == eval_connective(k, ra, rb),
               "flow operands at sample " + std::to_string(i));
    c.expect(eval_connective(ConnectiveKind::logical_not, A) ==
                 eval_connective(ConnectiveKind::logical_not, ra),
             "not on flow at sample " + std::to_string(i));
  }
}

// 6: inversion dualizes the walk and is an involution.
void c06(Check& c) {
  gen::Rng rng(6006);
  gen::GenOptions o;
  o.allow_empty = false;
  for (int i = 0; i < 1000; ++i) {
    const ProcessLattice l = gen::lattice(rng, o);
    const ProcessLattice inv = episodic_inverse(l);
    const std::string at = " at sample " + std::to_string(i);
    c.expect(inspection_status(inv) == star(inspection_status(l)), "status duality" + at);
    c.expect(inspect(l).successes == inspect(inv).failures, "count duality" + at);
    c.expect(episodic_inverse(inv) == l, "involution" + at);
  }
}

// 7: the trivially succeeding element appears exactly on the empty lattice.
void c07(Check& c) {
  const auto trivial = [](const ProcessLattice& l) {
    const InspectionOutcome o = inspect(l);
    return o.element.succeeded() && o.element.payload() == W;
  };
  c.expect(trivial(ProcessLattice()), "empty lattice");
  gen::Rng rng(6007);
  gen::GenOptions o;
  o.allow_empty = false;
  for (int i = 0; i < 1000; ++i)
    c.expect(!trivial(gen::lattice(rng, o)), "non-empty sample " + std::to_string(i));
}

// 8: the cellwise predicate agrees with structural equality; a dimension
// mismatch always reads back w.
void c08(Check& c) {
  gen::Rng rng(6008);
  const gen::GenOptions o;
  for (int i = 0; i < 500; ++i) {
    const ProcessLattice a = gen::lattice(rng, o);
    const ProcessLattice b = i % 2 == 0 ? a : gen::lattice(rng, o);
    const bool same = structural_eq(a, b);
    const std::string at = " at sample " + std::to_string(i);
    c.expect((eqpl(a, b) == Episodic::succeed) == same, "oracle equivalence" + at);
    if (a.rows() != b.rows() || a.cols() != b.cols())
      c.expect(eqpl(a, b) == Episodic::fail, "dimension mismatch" + at);
  }
}

// 9: sharing a type is an equivalence; non-empty flows precede themselves;
// the full structure has dimensions 2m x n and the partial structure is its
// top-left (2m-1) x (n-1) block.
void c09(Check& c) {
  gen::Rng rng(6009);
  const gen::GenOptions o;
  std::vector<Action> sample;
  for (int i = 0; i < 200; ++i) sample.push_back(gen::action(rng, o, 0));
  // Episodic leaves at the top level keep the sample mixed.
  const std::size_t n = sample.size();
  std::vector<std::vector<bool>> same(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) same[i][j] = same_type(sample[i], sample[j]);
  for (std::size_t i = 0; i < n; ++i) c.expect(same[i][i], "reflexive at " + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      c.expect(same[i][j] == same[j][i], "symmetric at " + std::to_string(i));
  for (std::size_t i = 0; i < n && c.ok; ++i)
    for (std::size_t j = 0; j < n && c.ok; ++j)
      for (std::size_t k = 0; k < n && c.ok; ++k)
        if (same[i][j] && same[j][k])
          c.expect(same[i][k], "transitive at " + std::to_string(i));

  gen::GenOptions nonempty = o;
  nonempty.allow_empty = false;
  for (int i = 0; i < 200; ++i) {
    const ProcessLattice l = gen::lattice(rng, nonempty);
    const std::string at = " at sample " + std::to_string(i);
    c.expect(precedes(Action{l}, Action{l}), "self-precedence" + at);
    const MorphismStructure mu = morphism_structure(l);
    c.expect(mu.rows() == 2 * l.rows() && mu.cols() == l.cols(), "mu dimensions" + at);
    const MorphismStructure pi = partial_morphism_structure(l);
    c.expect(pi.rows() == 2 * l.rows() - 1 && pi.cols() == l.cols() - 1, "pi dimensions" + at);
    bool block = true;
    for (std::size_t r = 0; r < pi.rows(); ++r)
      for (std::size_t q = 0; q < pi.cols(); ++q)
        if (!(pi.at(r, q) == mu.at(r, q))) block = false;
    c.expect(block, "pi is the top-left block" + at);
  }
}

// 10: the five canonical classifications, plus symmetry and totality.
void c10(Check& c) {
  const auto label_of = [](const Action& a, const Action& b) {
    return degrees_of_loss(a, b).label;
  };
  c.expect(label_of(flow("[w* w*]"), flow("[w* w*]")) == LossLabel::identity, "identity pair");
  c.expect(label_of(flow("[w* w]"), flow("[w w*]")) == LossLabel::gamma_dot, "one degree pair");
  c.expect(label_of(flow("[w* w]"), flow("[w* ; w]")) == LossLabel::gamma_ddot,
           "two degree pair");
  c.expect(label_of(flow("[w* w*]"), flow("[w* w* ; w w]")) == LossLabel::gamma_dddot,
           "precedence pair");
  c.expect(label_of(flow("[w* [w]]"), WS) == LossLabel::gamma, "three degree pair");

  gen::Rng rng(6010);
  const gen::GenOptions o;
  for (int i = 0; i < 500; ++i) {
    const Action a = gen::action(rng, o, 0);
    const Action b = gen::action(rng, o, 0);
    const LossDegree ab = degrees_of_loss(a, b);
    const LossDegree ba = degrees_of_loss(b, a);
    const std::string at = " at sample " + std::to_string(i);
    c.expect(ab.label == ba.label && ab.degree == ba.degree, "symmetric" + at);
    c.expect(ab.degree == degree_of(ab.label) && ab.degree <= 3, "total" + at);
    c.expect(degrees_of_loss(a, a).degree == 0, "reflexively lossless" + at);
  }
}

// 11: routing a fully occupied state onto a freed row costs every
// reference all three degrees; the literal one-expression analysis agrees.
void c11(Check& c) {
  const Action occupied1{make_row({WS, flow("[w*]")})};
  const Action occupied2{make_row({WS, flow("[w* w*]")})};
  const Action occupied3{make_row({WS, flow("[w ; w*]")})};
  const State s(make_row({occupied1, occupied2, occupied3}));
  const ProcessLattice freed_row = make_row({WS, WS, WS});
  const Template program =
      Template::grid(1, 2, {Template::hole(), Template::from_action(Action{freed_row})});

  c.expect(freed_through(s, program), "every slot is freed");
  const std::vector<LossDegree> degrees = analyze_references(s, program, {1, 2, 3});
  c.expect(degrees.size() == 3, "three analyses");
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    c.expect(degrees[i].label == LossLabel::gamma, "gamma at reference " + std::to_string(i + 1));
    c.expect(degrees[i].degree == 3, "degree 3 at reference " + std::to_string(i + 1));
  }
  const std::vector<LossDegree> literal = analyze_references_literal(s, program);
  c.expect(literal.size() == 3, "three literal analyses");
  for (std::size_t i = 0; i < literal.size(); ++i)
    c.expect(literal[i] == degrees[i], "literal agreement at " + std::to_string(i + 1));
}

// 12: the canonical printer and the parser are mutually inverse.
void c12(Check& c) {
  gen::Rng rng(6012);
  const gen::GenOptions o;
  for (int i = 0; i < 500; ++i) {
    const Action a = gen::action(rng, o, 0);
    c.expect(parse_action(print_canonical(a)) == a, "action sample " + std::to_string(i));
  }
  for (int i = 0; i < 500; ++i) {
    const Template t = gen::template_grid(rng, o, 0);
    c.expect(parse_expression(print_canonical(t)) == t, "template sample " + std::to_string(i));
  }
}

// 13: the traced inspection output matches the stored golden file.
void c13(Check& c) {
  std::ifstream in(std::string(EPFLOW_GOLDEN_DIR) + "/inspect_trace.golden", std::ios::binary);
  c.expect(in.good(), "golden file opens");
  std::ostringstream buf;
  buf << in.rdbuf();
  const CliRun r = run_cli_line({"inspect", "[w* w ; w w*]", "--trace"});
  c.expect(r.code == 0, "inspect exits 0");
  c.expect(r.out == buf.str(), "byte-exact trace");
}

struct Criterion {
  const char* description;
  long budget_ms;
  void (*run)(Check&);
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"canonical unary integer displays", 100, c01},
      {"integer lift round trip", 1000, c02},
      {"arithmetic reads back through encodings", 5000, c03},
      {"rational lift round trip", 1000, c04},
      {"connective truth tables and flow operands", 2000, c05},
      {"inversion duality laws", 5000, c06},
      {"trivial success only on the empty lattice", 1000, c07},
      {"cellwise equality matches structural equality", 2000, c08},
      {"type equivalence, self-precedence, structure shapes", 2000, c09},
      {"loss classification coverage and symmetry", 2000, c10},
      {"freed references lose all three degrees", 500, c11},
      {"printer and parser round trip", 2000, c12},
      {"golden traced inspection", 500, c13},
  };

  bool all_ok = true;
  int number = 0;
  for (const Criterion& cr : criteria) {
    ++number;
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("unexpected exception: ") + e.what());
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    if (check.ok && elapsed > cr.budget_ms) {
      check.ok = false;
      check.why = "time budget exceeded: " + std::to_string(elapsed) + " ms > " +
                  std::to_string(cr.budget_ms) + " ms";
    }
    all_ok = all_ok && check.ok;
    std::cout << "criterion " << (number < 10 ? "0" : "") << number << " "
              << (check.ok ? "PASS" : "FAIL") << " (" << elapsed << " ms) " << cr.description;
    if (!check.ok) std::cout << ": " << check.why;
    std::cout << "\n";
  }
  std::cout << (all_ok ? "acceptance: all 13 criteria passed"
                       : "acceptance: at least one criterion failed")
            << std::endl;
  return all_ok ? 0 : 1;
}
