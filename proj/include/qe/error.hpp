#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qe {

/// Base class for every domain error raised by the library. The CLI maps
/// these to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// h/n fails the membership condition at prime p: h(tau_p) mod p^k is
/// `residue`, not zero.
class NotMember : public Error {
 public:
  NotMember(mpz_class p, unsigned k, mpz_class residue);

  const mpz_class& prime() const { return prime_; }
  unsigned precision() const { return precision_; }
  const mpz_class& residue() const { return residue_; }

 private:
  mpz_class prime_;
  unsigned precision_;
  mpz_class residue_;
};

/// Raised when a terminating loop runs past its step budget. Termination is
/// guaranteed, so this always indicates a defect.
class StepBudgetExceeded : public Error {
 public:
  explicit StepBudgetExceeded(std::size_t budget);
};

}  // namespace qe
