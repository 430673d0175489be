#pragma once

#include <stdexcept>
#include <string>

namespace ramacf {

class BigReal;

/// Argument outside the mathematical domain of an operation
/// (q outside (0,1), vanishing product factor, non-convergent theta shift, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An iterative scheme failed to stabilize within its depth/level cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-side contract was violated (e.g. the min_poly precision floor).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Precision policy shared by every module: a public operation computes at
// working_bits + guard_bits internally and rounds once, at the end, to
// working_bits. Results are asserted accurate to 2^-working_bits.
struct PrecisionContext {
  long working_bits;
  long guard_bits;

  explicit PrecisionContext(long working = 256, long guard = 64)
      : working_bits(working), guard_bits(guard) {
    if (working_bits < 64) throw DomainError("PrecisionContext: working_bits must be >= 64");
    if (guard_bits < 0) throw DomainError("PrecisionContext: guard_bits must be >= 0");
  }

  long internal_bits() const { return working_bits + guard_bits; }

  /// 2^-working_bits, the accuracy promised by public operations.
  BigReal tolerance() const;

  /// 2^-(working_bits+guard_bits), the truncation threshold used inside kernels.
  BigReal internal_epsilon() const;

  /// Context for sub-evaluations feeding a composite operation: its working
  /// precision covers this context's internal precision.
  PrecisionContext raised() const { return PrecisionContext(internal_bits(), guard_bits); }

  PrecisionContext doubled() const { return PrecisionContext(2 * working_bits, guard_bits); }
};

}  // namespace ramacf
