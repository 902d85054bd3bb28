#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "feyncount/count.hpp"
#include "feyncount/report.hpp"

namespace feyncount {

/// Thrown when an exponential-cost path would sum more composition terms
/// than the configured budget allows.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string what_path, std::uint64_t terms, std::uint64_t budget);
  std::uint64_t terms() const noexcept { return terms_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t terms_;
  std::uint64_t budget_;
};

/// Raised when an exact division that must hold does not. Always a bug.
class ExactnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Cap on composition terms summed by closed_form / arques_walsh.
/// 2^20 admits the Arques-Walsh sum up to m = 20.
inline constexpr std::uint64_t kDefaultTermBudget = std::uint64_t{1} << 20;

// --- factorial-type quantities ---------------------------------------------

/// n!, served from a process-wide write-once cache safe for concurrent use.
const Count& factorial(unsigned n);

Count binomial(unsigned n, unsigned k);

/// k!! for even k; throws std::domain_error for odd k.
Count double_factorial(unsigned k);

/// All m-order diagrams: (2m+1)!.
Count total_diagrams(Order m);

/// m-order bubble (vacuum) diagrams: (2m)!.
Count bubble_diagrams(Order m);

// --- connected diagrams ----------------------------------------------------

/// N_c0..N_c(m_max) from the convolution
///   (2m+1)! = sum_{n=0}^{m} binom(m,n) (2n)! N_c(m-n).
std::vector<Count> connected_sequence(Order m_max);

/// Connected m-order diagrams via the convolution recurrence. O(m^2).
Count connected_recurrence(Order m);

/// Signed expansion coefficient C_n^m, 1 <= n <= m:
///   sum over compositions (a_1..a_i) of m-n of
///   (-1)^i prod (2a_j)! * m! / (a_1! ... a_i! n!),  with C_m^m = 1.
/// Throws std::domain_error outside 1 <= n <= m.
Count coefficient(unsigned n, Order m);

/// Number of composition terms behind C_n^m (2^(m-n-1), or 1 when n = m).
std::uint64_t coefficient_term_count(unsigned n, Order m);

/// Composition terms summed by connected_closed_form(m): 2^(m-1).
std::uint64_t closed_form_term_count(Order m);

/// Composition terms summed by arques_walsh(m): 2^m.
std::uint64_t arques_walsh_term_count(Order m);

/// The individual summands C_n^m (N_n - N_dn), indexed n = 1..m
/// (element 0 holds n = 1).
std::vector<Count> closed_form_terms(Order m, std::uint64_t term_budget = kDefaultTermBudget);

/// Connected m-order diagrams via sum_n C_n^m (N_n - N_dn). Returns 1 at m = 0.
Count connected_closed_form(Order m, std::uint64_t term_budget = kDefaultTermBudget);

/// Rooted-map count
///   N(m) = 2^-(m+1) sum over compositions (a_1..a_k) of m+1 of
///          (-1)^(k-1) prod (2a_j)!/a_j!.
/// Throws ExactnessError if the signed sum is not divisible by 2^(m+1).
Count arques_walsh(Order m, std::uint64_t term_budget = kDefaultTermBudget);

/// The undivided signed composition sum behind arques_walsh(m).
Count arques_walsh_numerator(Order m, std::uint64_t term_budget = kDefaultTermBudget);

/// Distinct connected diagrams N_cm / (2m)!!, exact.
Count distinct_connected(Order m);

/// Exact quotient; throws ExactnessError if denominator does not divide.
Count exact_divide(const Count& numerator, const Count& denominator, const char* context);

// --- identity suites -------------------------------------------------------

/// Checks C_s^{m+1} = -sum_{n=s}^{m} binom(m+1, m-n+1) (2(m-n+1))! C_s^n
/// for every 1 <= s <= m <= m_max. One report row per (s, m).
VerificationReport verify_coefficient_recursion(Order m_max);

/// Checks 2 (n+1)! N_n = n! N_d(n+1) and 2 N_dn = N_d1 N_dn for 1 <= n <= m_max.
VerificationReport verify_rewrite_identities(Order m_max);

// --- tables ----------------------------------------------------------------

enum class Method { Recurrence, ClosedForm, ArquesWalsh, All };

struct CountRow {
  Order m = 0;
  Count total;      // N_m
  Count bubbles;    // N_dm
  Count connected;  // N_cm
  Count distinct;   // N_cm / (2m)!!
};

/// Raised by Method::All when the three paths disagree on a row.
class MethodDisagreement : public std::runtime_error {
 public:
  MethodDisagreement(Order m, Count recurrence, Count closed_form, Count arques_walsh_scaled);
  Order order() const noexcept { return m_; }
  const Count& recurrence() const noexcept { return recurrence_; }
  const Count& closed_form() const noexcept { return closed_form_; }
  const Count& arques_walsh_scaled() const noexcept { return aw_; }

 private:
  Order m_;
  Count recurrence_;
  Count closed_form_;
  Count aw_;
};

/// Rows m = 0..max_order. Exponential methods check the budget for
/// max_order before any work is done.
std::vector<CountRow> count_table(Order max_order, Method method,
                                  std::uint64_t term_budget = kDefaultTermBudget);

Method parse_method(const std::string& name);
std::string method_name(Method method);

}  // namespace feyncount
