// Error taxonomy shared by every zetalim module.
//
// Each failure mode gets its own exception type so callers (and the CLI's
// exit-code mapping) can distinguish budget exhaustion, malformed inputs,
// and internal consistency violations without string matching.
#pragma once

#include <stdexcept>
#include <string>

namespace zetalim {

// Coarse classes used by the CLI to pick an exit code.
enum class error_kind {
  parse,          // malformed input files / flags          -> exit 2
  budget,         // enumeration budget exceeded            -> exit 3
  inconsistency,  // violated mathematical invariant        -> exit 4
  domain,         // arguments outside an operation domain  -> exit 4
};

class error : public std::runtime_error {
 public:
  error(error_kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  error_kind kind() const noexcept { return kind_; }

 private:
  error_kind kind_;
};

#define ZETALIM_DEFINE_ERROR(NAME, KIND)                          \
  class NAME : public error {                                     \
   public:                                                        \
    explicit NAME(const std::string& what)                        \
        : error(error_kind::KIND, std::string(#NAME ": ") + what) {} \
  }

// ffcore
ZETALIM_DEFINE_ERROR(budget_exceeded, budget);
ZETALIM_DEFINE_ERROR(bad_model, parse);
ZETALIM_DEFINE_ERROR(non_integral_inversion, inconsistency);
ZETALIM_DEFINE_ERROR(negative_count, inconsistency);

// lfunc
ZETALIM_DEFINE_ERROR(insufficient_depth, domain);
ZETALIM_DEFINE_ERROR(non_integral_coefficient, inconsistency);
ZETALIM_DEFINE_ERROR(no_convergence, inconsistency);
ZETALIM_DEFINE_ERROR(pole_proximity, domain);
ZETALIM_DEFINE_ERROR(pole_at_s, domain);

// analytic
ZETALIM_DEFINE_ERROR(near_pole, domain);
ZETALIM_DEFINE_ERROR(near_zero_of_zeta, domain);
ZETALIM_DEFINE_ERROR(quadrature_failure, inconsistency);

// asymfam
ZETALIM_DEFINE_ERROR(domain_error, domain);
ZETALIM_DEFINE_ERROR(too_few_members, domain);
ZETALIM_DEFINE_ERROR(no_convergence_at_half, domain);
ZETALIM_DEFINE_ERROR(infeasible_targets, domain);

// nfquad
ZETALIM_DEFINE_ERROR(not_fundamental, domain);
ZETALIM_DEFINE_ERROR(overflow_budget, budget);

// zcli
ZETALIM_DEFINE_ERROR(parse_error, parse);

#undef ZETALIM_DEFINE_ERROR

}  // namespace zetalim
