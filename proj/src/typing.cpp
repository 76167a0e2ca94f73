#include "epflow/typing.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "epflow/logic.hpp"
#include "epflow/numerics.hpp"

namespace epflow {

TypeSignature TypeSignature::atom() { return TypeSignature(); }

TypeSignature TypeSignature::composite(std::size_t rows, std::size_t cols,
                                       std::vector<TypeSignature> cells) {
  if (rows * cols != cells.size())
    throw std::invalid_argument("signature shape does not match cell count");
  TypeSignature s;
  s.atom_ = false;
  if (cells.empty()) {
    s.rows_ = 0;
    s.cols_ = 0;
  } else {
    s.rows_ = rows;
    s.cols_ = cols;
    s.cells_ = std::move(cells);
  }
  return s;
}

std::string TypeSignature::to_string() const {
  if (atom_) return "ep";
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i > 0) out += " ; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) out += ' ';
      out += cells_[i * cols_ + j].to_string();
    }
  }
  out += ']';
  return out;
}

TypeSignature type_signature(const Action& a) {
  if (a.is_episodic()) return TypeSignature::atom();
  return type_signature(a.flow());
}

TypeSignature type_signature(const ProcessLattice& l) {
  std::vector<TypeSignature> cells;
  cells.reserve(l.cells().size());
  for (const Action& c : l.cells()) cells.push_back(type_signature(c));
  return TypeSignature::composite(l.rows(), l.cols(), std::move(cells));
}

std::string MorphismDescriptor::to_string() const {
  switch (kind) {
    case MorphismKind::step_success:
      return "s(" + dom.to_string() + "->" + cod->to_string() + ")";
    case MorphismKind::step_failure:
      return "f(" + dom.to_string() + "->" + cod->to_string() + ")";
    case MorphismKind::exit_success:
      return "S(" + dom.to_string() + ")";
    case MorphismKind::exit_failure:
      return "F(" + dom.to_string() + ")";
  }
  return "?";
}

MorphismStructure::MorphismStructure(std::size_t rows, std::size_t cols,
                                     std::vector<MorphismDescriptor> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (rows_ * cols_ != cells_.size())
    throw std::invalid_argument("structure shape does not match cell count");
}

bool MorphismStructure::contains_block(const MorphismStructure& pattern) const {
  if (pattern.rows_ > rows_ || pattern.cols_ > cols_) return false;
  for (std::size_t di = 0; di + pattern.rows_ <= rows_; ++di) {
    for (std::size_t dj = 0; dj + pattern.cols_ <= cols_; ++dj) {
      bool match = true;
      for (std::size_t i = 0; match && i < pattern.rows_; ++i)
        for (std::size_t j = 0; match && j < pattern.cols_; ++j)
          if (!(pattern.at(i, j) == at(i + di, j + dj))) match = false;
      if (match) return true;
    }
  }
  return false;
}

std::string MorphismStructure::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i > 0) out += '\n';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) out += ' ';
      out += at(i, j).to_string();
    }
  }
  return out;
}

MorphismStructure morphism_structure(const ProcessLattice& l) {
  if (l.is_empty()) throw EvalError("the empty lattice has no morphism structure");
  const std::size_t m = l.rows();
  const std::size_t n = l.cols();
  std::vector<MorphismDescriptor> cells;
  cells.reserve(2 * m * n);
  for (std::size_t r = 0; r < 2 * m; ++r) {
    if (r % 2 == 0) {
      // Success row of lattice row i = r/2: steps right, then the exit.
      const std::size_t i = r / 2;
      for (std::size_t j = 0; j + 1 < n; ++j)
        cells.push_back({MorphismKind::step_success, type_signature(l.cell(i, j)),
                         type_signature(l.cell(i, j + 1))});
      cells.push_back({MorphismKind::exit_success, type_signature(l.cell(i, n - 1)),
                       std::nullopt});
    } else if (r + 1 < 2 * m) {
      // Failure row between lattice rows i and i+1.
      const std::size_t i = (r - 1) / 2;
      for (std::size_t j = 0; j < n; ++j)
        cells.push_back({MorphismKind::step_failure, type_signature(l.cell(i, j)),
                         type_signature(l.cell(i + 1, j))});
    } else {
      // Bottom row: failure exits out of the last lattice row.
      for (std::size_t j = 0; j < n; ++j)
        cells.push_back({MorphismKind::exit_failure, type_signature(l.cell(m - 1, j)),
                         std::nullopt});
    }
  }
  return MorphismStructure(2 * m, n, std::move(cells));
}

MorphismStructure partial_morphism_structure(const ProcessLattice& l) {
  if (l.is_empty()) throw EvalError("the empty lattice has no morphism structure");
  const std::size_t m = l.rows();
  const std::size_t n = l.cols();
  std::vector<MorphismDescriptor> cells;
  if (n > 1) {
    cells.reserve((2 * m - 1) * (n - 1));
    for (std::size_t r = 0; r < 2 * m - 1; ++r) {
      const std::size_t i = r / 2;
      for (std::size_t j = 0; j + 1 < n; ++j) {
        if (r % 2 == 0)
          cells.push_back({MorphismKind::step_success, type_signature(l.cell(i, j)),
                           type_signature(l.cell(i, j + 1))});
        else
          cells.push_back({MorphismKind::step_failure, type_signature(l.cell(i, j)),
                           type_signature(l.cell(i + 1, j))});
      }
    }
  }
  return MorphismStructure(2 * m - 1, n - 1, std::move(cells));
}

bool same_type(const Action& a, const Action& b) {
  if (a.is_episodic() || b.is_episodic()) return a.is_episodic() == b.is_episodic();
  return type_signature(a) == type_signature(b);
}

bool precedes(const Action& a, const Action& b) {
  if (!a.is_flow() || !b.is_flow()) return false;
  if (a.flow().is_empty() || b.flow().is_empty()) return false;
  return morphism_structure(b.flow()).contains_block(partial_morphism_structure(a.flow()));
}

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Invariant Invariant::initial(std::uint64_t prime) {
  if (!is_prime(prime)) throw EvalError("not a prime: " + std::to_string(prime));
  Invariant v;
  v.exponents_[prime] = 1;
  return v;
}

bool Invariant::divides(const Invariant& other) const {
  for (const auto& [prime, exp] : exponents_) {
    const auto it = other.exponents_.find(prime);
    if (it == other.exponents_.end() || it->second < exp) return false;
  }
  return true;
}

std::uint64_t Invariant::numeric_value(std::uint64_t cap) const {
  std::uint64_t acc = 1;
  for (const auto& [prime, exp] : exponents_) {
    for (std::uint64_t k = 0; k < exp; ++k) {
      if (acc > cap / prime)
        throw ResourceError("invariant product exceeds magnitude cap (cap " +
                            std::to_string(cap) + ")");
      acc *= prime;
    }
  }
  if (acc > cap)
    throw ResourceError("invariant product exceeds magnitude cap (cap " + std::to_string(cap) +
                        ")");
  return acc;
}

std::string Invariant::to_string() const {
  if (exponents_.empty()) return "1";
  std::string out;
  for (const auto& [prime, exp] : exponents_) {
    if (!out.empty()) out += " * ";
    out += std::to_string(prime) + "^" + std::to_string(exp);
  }
  return out;
}

Invariant operator*(const Invariant& a, const Invariant& b) {
  Invariant out = a;
  for (const auto& [prime, exp] : b.exponents_) out.exponents_[prime] += exp;
  return out;
}

Invariant invariant_mul(const Invariant& a, const Invariant& b) { return a * b; }

bool invariant_divides(const Invariant& a, const Invariant& b) { return a.divides(b); }

Invariant canonical_invariant(const Action& a) {
  if (a.is_episodic())
    return Invariant::initial(a.episodic() == Episodic::fail ? 2 : 3);
  return canonical_invariant(a.flow());
}

Invariant canonical_invariant(const ProcessLattice& l) {
  if (l.is_empty()) return Invariant::initial(2) * Invariant::initial(3);
  Invariant out;
  for (const Action& c : l.cells()) out = out * canonical_invariant(c);
  return out;
}

Invariant canonical_invariant(const EpisodeElement& e) {
  if (!e.succeeded()) return Invariant::initial(2);
  return Invariant::initial(3) * canonical_invariant(e.payload());
}

ProcessLattice lift_invariant(const Invariant& x, std::uint64_t cap) {
  return lift_int(static_cast<std::int64_t>(x.numeric_value(cap)));
}

TaggedLattice make_union(const Invariant& type_invariant, const Invariant& variant_invariant,
                         const Action& value, std::uint64_t cap) {
  if (!variant_invariant.divides(type_invariant)) throw EvalError("variant not in union");
  ProcessLattice lattice = make_row({Action(lift_invariant(type_invariant, cap)),
                                     Action(lift_invariant(variant_invariant, cap)), value});
  return {std::move(lattice), {StructureKind::union_structure, type_invariant}};
}

TaggedLattice make_intersection(const std::vector<std::pair<Invariant, Action>>& bindings,
                                const ProcessLattice& selector, std::uint64_t cap,
                                const InspectOptions& opts) {
  if (bindings.empty()) throw EvalError("intersection requires at least one binding");
  std::vector<Action> cells;
  cells.reserve(bindings.size() * 2);
  Invariant product;
  for (const auto& [key, value] : bindings) {
    cells.push_back(Action(eqpl(selector, lift_invariant(key, cap), opts)));
    cells.push_back(value);
    product = product * key;
  }
  ProcessLattice lattice(bindings.size(), 2, std::move(cells));
  return {std::move(lattice), {StructureKind::intersection_structure, product}};
}

namespace {

bool valid_registry_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (const char c : name)
    if (c != '_' && !std::isalnum(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

InvariantRegistry InvariantRegistry::parse(std::string_view text) {
  InvariantRegistry reg;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    ++lineno;
    const std::size_t nl = text.find('\n', start);
    std::string_view line =
        text.substr(start, nl == std::string_view::npos ? text.size() - start : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const auto trim = [](std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
      return s;
    };
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("expected 'name = prime'", lineno, 1);
    const std::string_view name = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!valid_registry_name(name))
      throw ParseError("invalid name '" + std::string(name) + "'", lineno, 1);
    std::uint64_t prime = 0;
    try {
      std::size_t used = 0;
      prime = std::stoull(std::string(value), &used);
      if (used != value.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw ParseError("invalid prime '" + std::string(value) + "'", lineno, 1);
    }
    if (prime < 5 || !is_prime(prime))
      throw ParseError("registry primes start at 5 and must be prime, got '" +
                           std::string(value) + "'",
                       lineno, 1);
    for (const auto& [n, p] : reg.entries_) {
      if (n == name) throw ParseError("duplicate name '" + std::string(name) + "'", lineno, 1);
      if (p == prime)
        throw ParseError("duplicate prime " + std::to_string(prime), lineno, 1);
    }
    reg.entries_.emplace_back(std::string(name), prime);
  }
  return reg;
}

InvariantRegistry InvariantRegistry::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw EvalError("cannot open registry file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::optional<std::uint64_t> InvariantRegistry::prime_of(std::string_view name) const {
  for (const auto& [n, p] : entries_)
    if (n == name) return p;
  return std::nullopt;
}

Invariant InvariantRegistry::invariant_of(std::string_view name) const {
  const auto p = prime_of(name);
  if (!p) throw EvalError("unknown invariant name '" + std::string(name) + "'");
  return Invariant::initial(*p);
}

}  // namespace epflow
