#include "qe/error.hpp"

namespace qe {

NotMember::NotMember(mpz_class p, unsigned k, mpz_class residue)
    : Error("not a member: h(tau_" + p.get_str() + ") = " + residue.get_str() + " mod " + p.get_str() + "^" +
            std::to_string(k)),
      prime_(std::move(p)),
      precision_(k),
      residue_(std::move(residue)) {}

StepBudgetExceeded::StepBudgetExceeded(std::size_t budget)
    : Error("step budget of " + std::to_string(budget) + " exceeded") {}

}  // namespace qe
