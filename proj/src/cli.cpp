#include "epflow/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "epflow/dsl.hpp"
#include "epflow/entropy.hpp"
#include "epflow/logic.hpp"
#include "epflow/numerics.hpp"
#include "epflow/typing.hpp"

namespace epflow::cli {

namespace {

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void fail(int code, std::string message) {
  throw CliError{code, std::move(message)};
}

constexpr const char* usage_text =
    "usage: epflow COMMAND [ARGS] [--cap N] [--depth N] [--registry PATH]\n"
    "  inspect EXPR [--trace]\n"
    "  reduce EXPR\n"
    "  invert EXPR\n"
    "  int lift N | int colift EXPR | int add A B | int sub A B | int neg A\n"
    "  rat lift P/Q | rat colift EXPR\n"
    "  logic or|and|not|implies|implies-alt|iff A [B]\n"
    "  eqpl A B [--check]\n"
    "  type mu EXPR | type same A B | type precedes A B\n"
    "  chi EXPR\n"
    "  entropy A B\n"
    "  state run STATE PROGRAM | state refs STATE PROGRAM [--literal] I...\n"
    "Expression arguments may be literal text or @file.epf.";

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(exit_parse_error, "cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::int64_t parse_int_arg(const std::string& s, const char* what) {
  std::int64_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    fail(exit_parse_error, std::string("invalid ") + what + " '" + s + "'");
  return v;
}

std::size_t parse_size_arg(const std::string& s, const char* what) {
  const std::int64_t v = parse_int_arg(s, what);
  if (v < 1) fail(exit_parse_error, std::string("invalid ") + what + " '" + s + "'");
  return static_cast<std::size_t>(v);
}

struct Invocation {
  std::vector<std::string> pos;
  bool trace = false;
  bool check = false;
  bool literal = false;
  CliConfig cfg;
};

void apply_config_file(const std::string& path, CliConfig& cfg) {
  const std::string text = read_file(path);
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto trim = [](std::string s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.pop_back();
      return s;
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      fail(exit_parse_error, path + ":" + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "magnitude_cap")
      cfg.magnitude_cap = parse_int_arg(value, "magnitude_cap");
    else if (key == "depth_limit")
      cfg.depth_limit = parse_size_arg(value, "depth_limit");
    else if (key == "registry")
      cfg.registry_path = value;
    else
      fail(exit_parse_error, path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
}

Invocation parse_invocation(const std::vector<std::string>& args) {
  Invocation inv;
  if (const char* env = std::getenv(config_env_var); env && *env)
    apply_config_file(env, inv.cfg);
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    const auto flag_value = [&](const char* flag) -> const std::string& {
      if (i + 1 >= args.size())
        fail(exit_parse_error, std::string("option ") + flag + " expects a value");
      return args[++i];
    };
    if (a == "--trace")
      inv.trace = true;
    else if (a == "--check")
      inv.check = true;
    else if (a == "--literal")
      inv.literal = true;
    else if (a == "--cap")
      inv.cfg.magnitude_cap = parse_int_arg(flag_value("--cap"), "cap");
    else if (a == "--depth")
      inv.cfg.depth_limit = parse_size_arg(flag_value("--depth"), "depth");
    else if (a == "--registry")
      inv.cfg.registry_path = flag_value("--registry");
    else if (a.size() >= 2 && a[0] == '-' && a[1] == '-')
      fail(exit_parse_error, "unknown option '" + a + "'");
    else
      inv.pos.push_back(a);
  }
  if (inv.cfg.magnitude_cap < 0) fail(exit_parse_error, "magnitude cap must be nonnegative");
  return inv;
}

// Expression arguments are literal text or @file; diagnostics carry the
// file name when one was involved.
struct ExprSource {
  std::string text;
  std::optional<std::string> file;
};

ExprSource load_arg(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::string path = arg.substr(1);
    std::string text = read_file(path);
    return {std::move(text), std::move(path)};
  }
  return {arg, std::nullopt};
}

Template arg_template(const std::string& arg, const CliConfig& cfg) {
  const ExprSource src = load_arg(arg);
  try {
    return parse_expression(src.text, ParseOptions{cfg.depth_limit});
  } catch (const ParseError& e) {
    fail(exit_parse_error, (src.file ? *src.file + ":" : std::string()) + e.what());
  }
}

Action arg_action(const std::string& arg, const CliConfig& cfg) {
  return arg_template(arg, cfg).to_action();
}

ProcessLattice arg_lattice(const std::string& arg, const CliConfig& cfg) {
  const Action a = arg_action(arg, cfg);
  if (!a.is_flow()) fail(exit_eval_error, "expected a process lattice, got an episodic");
  return a.flow();
}

void expect_args(const Invocation& inv, std::size_t count, const char* usage) {
  if (inv.pos.size() != count) fail(exit_parse_error, std::string("usage: epflow ") + usage);
}

void reject_flag(bool set, const char* flag, const char* where) {
  if (set)
    fail(exit_parse_error,
         std::string("option ") + flag + " is only valid for " + where);
}

InspectOptions inspect_options(const CliConfig& cfg) { return InspectOptions{cfg.depth_limit}; }

int cmd_inspect(const Invocation& inv, std::ostream& out) {
  expect_args(inv, 2, "inspect EXPR [--trace]");
  const Action a = arg_action(inv.pos[1], inv.cfg);
  const InspectionOutcome o = inspect(a, inspect_options(inv.cfg));
  if (inv.trace) {
    out << "# trace v1\n";
    for (const TraceStep& s : o.trace)
      out << "(" << s.row << "," << s.col << ") " << to_text(s.reduced) << " -> "
          << (s.move == Move::right ? "right" : "down") << "\n";
  }
  if (o.element.succeeded())
    out << "(w*, " << print_canonical(o.element.payload()) << ")\n";
  else
    out << "w\n";
  out << "F=" << o.failures << " S=" << o.successes << "\n";
  return exit_ok;
}

int cmd_reduce(const Invocation& inv, std::ostream& out) {
  expect_args(inv, 2, "reduce EXPR");
  out << to_text(inspection_status(arg_action(inv.pos[1], inv.cfg), inspect_options(inv.cfg)))
      << "\n";
  return exit_ok;
}

int cmd_invert(const Invocation& inv, std::ostream& out) {
  expect_args(inv, 2, "invert EXPR");
  out << print_canonical(episodic_inverse(arg_action(inv.pos[1], inv.cfg))) << "\n";
  return exit_ok;
}

void check_cap(std::int64_t n, const CliConfig& cfg) {
  const std::int64_t mag = n < 0 ? -n : n;
  if (mag > cfg.magnitude_cap)
    fail(exit_resource_error, "magnitude cap exceeded: |" + std::to_string(n) + "| > " +
                                  std::to_string(cfg.magnitude_cap));
}

int cmd_int(const Invocation& inv, std::ostream& out) {
  if (inv.pos.size() < 2)
    fail(exit_parse_error, "usage: epflow int lift|colift|add|sub|neg ...");
  const std::string& op = inv.pos[1];
  const InspectOptions opts = inspect_options(inv.cfg);
  if (op == "lift") {
    expect_args(inv, 3, "int lift N");
    const std::int64_t n = parse_int_arg(inv.pos[2], "integer");
    check_cap(n, inv.cfg);
    out << print_canonical(lift_int(n)) << "\n";
    return exit_ok;
  }
  if (op == "colift") {
    expect_args(inv, 3, "int colift EXPR");
    out << colift_int(arg_lattice(inv.pos[2], inv.cfg), opts) << "\n";
    return exit_ok;
  }
  if (op == "neg") {
    expect_args(inv, 3, "int neg A");
    out << print_canonical(int_neg(arg_lattice(inv.pos[2], inv.cfg), opts)) << "\n";
    return exit_ok;
  }
  if (op == "add" || op == "sub") {
    expect_args(inv, 4, op == "add" ? "int add A B" : "int sub A B");
    const ProcessLattice a = arg_lattice(inv.pos[2], inv.cfg);
    const ProcessLattice b = arg_lattice(inv.pos[3], inv.cfg);
    out << print_canonical(op == "add" ? int_add(a, b, opts) : int_sub(a, b, opts)) << "\n";
    return exit_ok;
  }
  fail(exit_parse_error, "unknown int operation '" + op + "'");
}

Rational parse_rational_arg(const std::string& s, const CliConfig& cfg) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    const std::int64_t n = parse_int_arg(s, "rational");
    check_cap(n, cfg);
    return Rational(n, 1);
  }
  const std::int64_t num = parse_int_arg(s.substr(0, slash), "rational");
  const std::int64_t den = parse_int_arg(s.substr(slash + 1), "rational");
  check_cap(num, cfg);
  check_cap(den, cfg);
  return Rational(num, den);
}

int cmd_rat(const Invocation& inv, std::ostream& out) {
  if (inv.pos.size() < 2) fail(exit_parse_error, "usage: epflow rat lift|colift ...");
  const std::string& op = inv.pos[1];
  if (op == "lift") {
    expect_args(inv, 3, "rat lift P/Q");
    out << print_canonical(lift_rat(parse_rational_arg(inv.pos[2], inv.cfg))) << "\n";
    return exit_ok;
  }
  if (op == "colift") {
    expect_args(inv, 3, "rat colift EXPR");
    out << colift_rat(arg_lattice(inv.pos[2], inv.cfg), inspect_options(inv.cfg)).to_string()
        << "\n";
    return exit_ok;
  }
  fail(exit_parse_error, "unknown rat operation '" + op + "'");
}

int cmd_logic(const Invocation& inv, std::ostream& out) {
  if (inv.pos.size() < 2)
    fail(exit_parse_error, "usage: epflow logic or|and|not|implies|implies-alt|iff A [B]");
  const std::string& name = inv.pos[1];
  ConnectiveKind kind;
  bool unary = false;
  if (name == "or")
    kind = ConnectiveKind::logical_or;
  else if (name == "and")
    kind = ConnectiveKind::logical_and;
  else if (name == "not") {
    kind = ConnectiveKind::logical_not;
    unary = true;
  } else if (name == "implies")
    kind = ConnectiveKind::implies;
  else if (name == "implies-alt")
    kind = ConnectiveKind::implies_alt;
  else if (name == "iff")
    kind = ConnectiveKind::iff;
  else
    fail(exit_parse_error, "unknown connective '" + name + "'");
  const InspectOptions opts = inspect_options(inv.cfg);
  if (unary) {
    expect_args(inv, 3, "logic not A");
    out << to_text(eval_connective(kind, arg_action(inv.pos[2], inv.cfg), std::nullopt, opts))
        << "\n";
    return exit_ok;
  }
  expect_args(inv, 4, "logic CONNECTIVE A B");
  out << to_text(eval_connective(kind, arg_action(inv.pos[2], inv.cfg),
                                 arg_action(inv.pos[3], inv.cfg), opts))
      << "\n";
  return exit_ok;
}

int cmd_eqpl(const Invocation& inv, std::ostream& out) {
  expect_args(inv, 3, "eqpl A B [--check]");
  const Episodic r = eqpl(arg_lattice(inv.pos[1], inv.cfg), arg_lattice(inv.pos[2], inv.cfg),
                          inspect_options(inv.cfg));
  out << to_text(r) << "\n";
  if (inv.check && r == Episodic::fail) return exit_check_false;
  return exit_ok;
}

int cmd_type(const Invocation& inv, std::ostream& out) {
  if (inv.pos.size() < 2) fail(exit_parse_error, "usage: epflow type mu|same|precedes ...");
  const std::string& op = inv.pos[1];
  if (op == "mu") {
    expect_args(inv, 3, "type mu EXPR");
    out << morphism_structure(arg_lattice(inv.pos[2], inv.cfg)).to_string() << "\n";
    return exit_ok;
  }
  if (op == "same" || op == "precedes") {
    expect_args(inv, 4, op == "same" ? "type same A B" : "type precedes A B");
    const Action a = arg_action(inv.pos[2], inv.cfg);
    const Action b = arg_action(inv.pos[3], inv.cfg);
    out << ((op == "same" ? same_type(a, b) : precedes(a, b)) ? "true" : "false") << "\n";
    return exit_ok;
  }
  fail(exit_parse_error, "unknown type operation '" + op + "'");
}

int cmd_chi(const Invocation& inv, std::ostream& out) {
  expect_args(inv, 2, "chi EXPR");
  out << canonical_invariant(arg_action(inv.pos[1], inv.cfg)).to_string() << "\n";
  return exit_ok;
}

int cmd_entropy(const Invocation& inv, std::ostream& out) {
  expect_args(inv, 3, "entropy A B");
  const LossDegree d =
      degrees_of_loss(arg_action(inv.pos[1], inv.cfg), arg_action(inv.pos[2], inv.cfg));
  out << "degree=" << d.degree << " label=" << label_name(d.label) << "\n";
  return exit_ok;
}

int cmd_state(const Invocation& inv, std::ostream& out) {
  if (inv.pos.size() < 2) fail(exit_parse_error, "usage: epflow state run|refs ...");
  const std::string& op = inv.pos[1];
  const InspectOptions opts = inspect_options(inv.cfg);
  if (op == "run") {
    expect_args(inv, 4, "state run STATE PROGRAM");
    const State s(arg_lattice(inv.pos[2], inv.cfg));
    const State result = run_state(s, arg_template(inv.pos[3], inv.cfg), opts);
    out << print_canonical(result.lattice()) << "\n";
    return exit_ok;
  }
  if (op == "refs") {
    if (inv.pos.size() < 5)
      fail(exit_parse_error, "usage: epflow state refs STATE PROGRAM [--literal] I...");
    const State s(arg_lattice(inv.pos[2], inv.cfg));
    const Template program = arg_template(inv.pos[3], inv.cfg);
    std::vector<std::size_t> indices;
    for (std::size_t i = 4; i < inv.pos.size(); ++i) {
      const std::int64_t v = parse_int_arg(inv.pos[i], "index");
      if (v < 1 || static_cast<std::size_t>(v) > s.size())
        fail(exit_eval_error, "reference index out of range");
      indices.push_back(static_cast<std::size_t>(v));
    }
    std::vector<LossDegree> degrees;
    if (inv.literal) {
      const std::vector<LossDegree> all = analyze_references_literal(s, program, opts);
      for (const std::size_t i : indices) degrees.push_back(all[i - 1]);
    } else {
      degrees = analyze_references(s, program, indices, opts);
    }
    for (std::size_t k = 0; k < indices.size(); ++k) {
      const LossDegree& d = degrees[k];
      out << "ref " << indices[k] << ": degree=" << d.degree << " label="
          << label_name(d.label);
      if (d.label == LossLabel::gamma) out << " (dead)";
      out << "\n";
    }
    return exit_ok;
  }
  fail(exit_parse_error, "unknown state operation '" + op + "'");
}

int dispatch(const Invocation& inv, std::ostream& out) {
  if (inv.pos.empty()) fail(exit_parse_error, usage_text);
  if (inv.cfg.registry_path) {
    try {
      InvariantRegistry::load(*inv.cfg.registry_path);
    } catch (const ParseError& e) {
      fail(exit_parse_error, *inv.cfg.registry_path + ":" + e.what());
    } catch (const EvalError& e) {
      fail(exit_parse_error, e.what());
    }
  }
  const std::string& cmd = inv.pos[0];
  if (cmd != "inspect") reject_flag(inv.trace, "--trace", "inspect");
  if (cmd != "eqpl") reject_flag(inv.check, "--check", "eqpl");
  if (cmd != "state") reject_flag(inv.literal, "--literal", "state refs");
  if (cmd == "inspect") return cmd_inspect(inv, out);
  if (cmd == "reduce") return cmd_reduce(inv, out);
  if (cmd == "invert") return cmd_invert(inv, out);
  if (cmd == "int") return cmd_int(inv, out);
  if (cmd == "rat") return cmd_rat(inv, out);
  if (cmd == "logic") return cmd_logic(inv, out);
  if (cmd == "eqpl") return cmd_eqpl(inv, out);
  if (cmd == "type") return cmd_type(inv, out);
  if (cmd == "chi") return cmd_chi(inv, out);
  if (cmd == "entropy") return cmd_entropy(inv, out);
  if (cmd == "state") return cmd_state(inv, out);
  fail(exit_parse_error, "unknown command '" + cmd + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(parse_invocation(args), out);
  } catch (const CliError& e) {
    err << "epflow: " << e.message << "\n";
    return e.code;
  } catch (const ParseError& e) {
    err << "epflow: " << e.what() << "\n";
    return exit_parse_error;
  } catch (const ResourceError& e) {
    err << "epflow: " << e.what() << "\n";
    return exit_resource_error;
  } catch (const Error& e) {
    err << "epflow: " << e.what() << "\n";
    return exit_eval_error;
  } catch (const std::exception& e) {
    err << "epflow: " << e.what() << "\n";
    return exit_eval_error;
  }
}

}  // namespace epflow::cli
