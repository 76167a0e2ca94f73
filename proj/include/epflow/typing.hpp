#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "epflow/core.hpp"

namespace epflow {

/// Shape skeleton of an action. Both episodic atoms collapse to the same
/// leaf, so w and w* are interchangeable for typing; a flow keeps its
/// dimensions and the signatures of its cells.
class TypeSignature {
public:
  static TypeSignature atom();
  static TypeSignature composite(std::size_t rows, std::size_t cols,
                                 std::vector<TypeSignature> cells);

  bool is_atom() const noexcept { return atom_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<TypeSignature>& cells() const noexcept { return cells_; }

  friend bool operator==(const TypeSignature& a, const TypeSignature& b) {
    return a.atom_ == b.atom_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.cells_ == b.cells_;
  }

  // "ep" for the atom; composites print like lattices: "[ep ep ; ep ep]".
  std::string to_string() const;

private:
  TypeSignature() : atom_(true), rows_(0), cols_(0) {}
  bool atom_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<TypeSignature> cells_;
};

TypeSignature type_signature(const Action& a);
TypeSignature type_signature(const ProcessLattice& l);

// The four descriptor roles: a step taken on success (to the right neighbour),
// a step taken on failure (to the neighbour below), and the two boundary
// exits a walk can take off the right edge or the bottom edge.
enum class MorphismKind : unsigned char {
  step_success,
  step_failure,
  exit_success,
  exit_failure,
};

struct MorphismDescriptor {
  MorphismKind kind;
  TypeSignature dom;
  // Engaged for steps; exits target the success / failure marks instead.
  std::optional<TypeSignature> cod;

  friend bool operator==(const MorphismDescriptor&, const MorphismDescriptor&) = default;

  std::string to_string() const;
};

/// Rectangular grid of descriptors. Unlike lattices these keep literal
/// dimensions, including zero-column grids.
class MorphismStructure {
public:
  MorphismStructure(std::size_t rows, std::size_t cols, std::vector<MorphismDescriptor> cells);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const MorphismDescriptor& at(std::size_t row, std::size_t col) const {
    return cells_[row * cols_ + col];
  }

  // True when `pattern` appears as a contiguous block at some offset.
  // Patterns with zero rows or columns occur wherever their dimensions fit.
  bool contains_block(const MorphismStructure& pattern) const;

  friend bool operator==(const MorphismStructure& a, const MorphismStructure& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
  }

  // One line per row, descriptors joined by single spaces.
  std::string to_string() const;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<MorphismDescriptor> cells_;
};

/// Full structure of a non-empty m x n lattice, a 2m x n grid: odd grid row
/// 2i-1 holds the success steps of lattice row i and its success exit in
/// the last column; even grid row 2i (i < m) holds the failure steps from
/// lattice row i down to row i+1; the final grid row 2m holds the failure
/// exits of the bottom lattice row. Throws EvalError on the empty lattice.
MorphismStructure morphism_structure(const ProcessLattice& l);

/// Steps only: the top-left (2m-1) x (n-1) block of the full structure.
MorphismStructure partial_morphism_structure(const ProcessLattice& l);

/// Signature equivalence. Episodics are all alike; flows agree exactly when
/// their full morphism structures (equivalently, signatures) agree; an
/// episodic never shares a type with a flow.
bool same_type(const Action& a, const Action& b);

/// True when both operands are non-empty flows and the partial structure of
/// `a` occurs as a contiguous block inside the full structure of `b`.
bool precedes(const Action& a, const Action& b);

/// Element of the free abelian group on primes, kept as prime -> positive
/// exponent. The default-constructed value is the identity.
class Invariant {
public:
  Invariant() = default;
  // Throws EvalError unless `prime` is prime.
  static Invariant initial(std::uint64_t prime);

  const std::map<std::uint64_t, std::uint64_t>& exponents() const noexcept {
    return exponents_;
  }
  bool is_identity() const noexcept { return exponents_.empty(); }

  bool divides(const Invariant& other) const;

  // Realized numeric product; throws ResourceError above `cap`.
  std::uint64_t numeric_value(std::uint64_t cap) const;

  // "2^1 * 3^2"; the identity prints "1".
  std::string to_string() const;

  friend Invariant operator*(const Invariant& a, const Invariant& b);
  friend bool operator==(const Invariant&, const Invariant&) = default;

private:
  std::map<std::uint64_t, std::uint64_t> exponents_;
};

Invariant invariant_mul(const Invariant& a, const Invariant& b);
bool invariant_divides(const Invariant& a, const Invariant& b);

inline constexpr std::uint64_t default_magnitude_cap = 1'000'000;

/// Content invariant of an action: w contributes the prime 2, w* the prime
/// 3, a flow the product of its cells, and the empty flow 2 * 3.
Invariant canonical_invariant(const Action& a);
Invariant canonical_invariant(const ProcessLattice& l);
// Failure reads as w; success contributes 3 times its payload.
Invariant canonical_invariant(const EpisodeElement& e);

/// Unary encoding of an invariant's numeric product (the identity lifts to
/// [w*]). Throws ResourceError when the product exceeds `cap`.
ProcessLattice lift_invariant(const Invariant& x, std::uint64_t cap = default_magnitude_cap);

enum class StructureKind : unsigned char {
  union_structure,
  intersection_structure,
  primitive_structure,
};

// Sidecar metadata for built composite lattices; never encoded into cells.
struct StructuralInvariant {
  StructureKind kind;
  Invariant value;

  friend bool operator==(const StructuralInvariant&, const StructuralInvariant&) = default;
};

struct TaggedLattice {
  ProcessLattice lattice;
  StructuralInvariant invariant;
};

/// Union shape [T V value]: the lifted whole-type invariant, the lifted
/// variant invariant, then the value. Requires the variant to divide the
/// type (EvalError "variant not in union" otherwise).
TaggedLattice make_union(const Invariant& type_invariant, const Invariant& variant_invariant,
                         const Action& value, std::uint64_t cap = default_magnitude_cap);

/// Intersection shape, one row per binding: [eqpl(selector, lifted key)
/// value]. A walk falls through rows until the selector matches a key, then
/// exits right through that value. Requires at least one binding.
TaggedLattice make_intersection(const std::vector<std::pair<Invariant, Action>>& bindings,
                                const ProcessLattice& selector,
                                std::uint64_t cap = default_magnitude_cap,
                                const InspectOptions& opts = {});

/// Named user invariants, drawn from primes 5 and up (2 and 3 are reserved
/// for episodic content). File format: one `name = prime` per line, `#`
/// comments; names and primes must be unique.
class InvariantRegistry {
public:
  static InvariantRegistry parse(std::string_view text);
  static InvariantRegistry load(const std::filesystem::path& path);

  std::optional<std::uint64_t> prime_of(std::string_view name) const;
  // Throws EvalError for an unknown name.
  Invariant invariant_of(std::string_view name) const;
  const std::vector<std::pair<std::string, std::uint64_t>>& entries() const noexcept {
    return entries_;
  }

private:
  std::vector<std::pair<std::string, std::uint64_t>> entries_;
};

}  // namespace epflow
