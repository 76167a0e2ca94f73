#pragma once

#include <cstdint>
#include <string>

#include "epflow/core.hpp"

namespace epflow {

/// Normalized rational: lowest terms, positive denominator, sign on the
/// numerator. Zero is 0/1.
class Rational {
public:
  Rational() noexcept : num_(0), den_(1) {}
  // Throws EvalError on a zero denominator.
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  friend bool operator==(const Rational&, const Rational&) = default;

  // "3/2", "-3/2"; integral values print bare ("0", "5").
  std::string to_string() const;

private:
  std::int64_t num_;
  std::int64_t den_;
};

/// Unary integer encoding: 0 is the empty lattice, n > 0 the 1 x n row of
/// w*, n < 0 the (|n|+1) x 1 column of |n| w followed by w*.
ProcessLattice lift_int(std::int64_t n);

/// Reads the encoding back off the walk: the success count when the walk
/// never fell a row, the negated failure count otherwise. Throws EvalError
/// when inspection fails.
std::int64_t colift_int(const ProcessLattice& l, const InspectOptions& opts = {});

// Addition concatenates the top rows when both operands colift to values
// >= 0 (every top-row cell of such an operand reduces to success); any
// negative operand falls back to lift of the sum.
ProcessLattice int_add(const ProcessLattice& a, const ProcessLattice& b,
                       const InspectOptions& opts = {});

// Subtraction keeps the structural forms on nonnegative operands: a row of
// a-b successes when a >= b, the inverse of the row of b-a successes
// followed by w otherwise. Negative operands fall back to lift of the
// difference.
ProcessLattice int_sub(const ProcessLattice& a, const ProcessLattice& b,
                       const InspectOptions& opts = {});

ProcessLattice int_neg(const ProcessLattice& a, const InspectOptions& opts = {});

/// Rational encoding for n/d in lowest terms: the 1 x (|n|+1) row of |n|
/// successes followed by the integer encoding of d carrying the sign.
/// Zero is the empty lattice.
ProcessLattice lift_rat(const Rational& r);

/// (successes - 1) / colift of the landing payload. The empty lattice reads
/// back as zero. Throws EvalError when inspection fails, when the payload
/// is episodic or not an integer encoding, or when the denominator is zero.
Rational colift_rat(const ProcessLattice& l, const InspectOptions& opts = {});

}  // namespace epflow
