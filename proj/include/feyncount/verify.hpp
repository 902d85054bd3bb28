#pragma once

#include <cstdint>

#include "feyncount/count.hpp"
#include "feyncount/counting.hpp"
#include "feyncount/report.hpp"

namespace feyncount {

struct SuiteOptions {
  Order max_order = 4;
  /// Exponential-cost checks (three-path agreement, coefficient recursion)
  /// run only for orders whose 2^m composition terms fit in this budget.
  std::uint64_t term_budget = kDefaultTermBudget;
  /// Lifts the oracle cap to order 5 for matching enumeration.
  bool oracle_override = false;
  bool run_oracle = true;
  unsigned workers = 1;
};

/// (2m+1)! against sum_n binom(m,n) (2n)! N_c(m-n), m = 1..m_max.
VerificationReport verify_convolution(Order m_max);

/// recurrence = closed form = (2m)!! * Arques-Walsh, m = 1..m_max.
VerificationReport verify_three_paths(Order m_max, std::uint64_t term_budget = kDefaultTermBudget);

/// Remainder of N_cm modulo (2m)!! is zero, m = 1..m_max.
VerificationReport verify_divisibility(Order m_max);

/// Stream length = 2^(n-1) and grouping by part multiset is lossless.
VerificationReport verify_compositions(unsigned n_max_count, unsigned n_max_multiset);

/// Oracle totals, connected counts, vacuum counts and (up to the census
/// cap) orbit structure against the formulas, m = 1..m_max.
VerificationReport verify_oracle(Order m_max, bool allow_order_5 = false, unsigned workers = 1);

/// Every identity suite, capped per SuiteOptions. Throws std::domain_error
/// when max_order < 1.
VerificationReport run_verification_suite(const SuiteOptions& options);

/// Largest m with 2^m <= budget.
Order exponential_order_cap(std::uint64_t term_budget);

}  // namespace feyncount
