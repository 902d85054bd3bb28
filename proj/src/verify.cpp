#include "feyncount/verify.hpp"

#include <algorithm>
#include <set>

#include "feyncount/compositions.hpp"
#include "feyncount/wick_oracle.hpp"

namespace feyncount {

namespace {
std::string m_param(Order m) { return "m=" + std::to_string(m); }
}  // namespace

Order exponential_order_cap(std::uint64_t term_budget) {
  Order m = 0;
  while (m < 63 && (std::uint64_t{1} << (m + 1)) <= term_budget) ++m;
  return m;
}

VerificationReport verify_convolution(Order m_max) {
  VerificationReport report;
  const auto nc = connected_sequence(m_max);
  for (Order m = 1; m <= m_max; ++m) {
    Count rhs = 0;
    for (Order n = 0; n <= m; ++n) rhs += binomial(m, n) * bubble_diagrams(n) * nc[m - n];
    report.add("convolution", m_param(m), total_diagrams(m).str(), rhs.str());
  }
  return report;
}

VerificationReport verify_three_paths(Order m_max, std::uint64_t term_budget) {
  VerificationReport report;
  const auto nc = connected_sequence(m_max);
  for (Order m = 1; m <= m_max; ++m) {
    report.add("closed-form", m_param(m), nc[m].str(),
               connected_closed_form(m, term_budget).str());
    report.add("arques-walsh", m_param(m), nc[m].str(),
               (double_factorial(2 * m) * arques_walsh(m, term_budget)).str());
  }
  return report;
}

VerificationReport verify_divisibility(Order m_max) {
  VerificationReport report;
  const auto nc = connected_sequence(m_max);
  for (Order m = 1; m <= m_max; ++m) {
    Count q, r;
    boost::multiprecision::divide_qr(nc[m], double_factorial(2 * m), q, r);
    report.add("divisibility-remainder", m_param(m), "0", r.str());
  }
  return report;
}

VerificationReport verify_compositions(unsigned n_max_count, unsigned n_max_multiset) {
  VerificationReport report;
  for (unsigned n = 1; n <= n_max_count; ++n) {
    std::set<std::vector<unsigned>> seen;
    std::uint64_t streamed = 0;
    for (const auto& c : enumerate_compositions(n)) {
      seen.insert(c.parts());
      ++streamed;
    }
    const std::string p = "n=" + std::to_string(n);
    report.add("composition-count", p, count_compositions(n).str(), std::to_string(streamed));
    report.add("composition-distinct", p, count_compositions(n).str(),
               std::to_string(seen.size()));
  }
  for (unsigned n = 1; n <= n_max_multiset; ++n) {
    std::set<PartMultiset> multisets;
    for (const auto& c : enumerate_compositions(n)) multisets.insert(part_multiset(c));
    Count sum = 0;
    for (const auto& ms : multisets) sum += multiset_multiplicity(ms);
    report.add("multiset-multiplicity-sum", "n=" + std::to_string(n),
               count_compositions(n).str(), sum.str());
  }
  return report;
}

VerificationReport verify_oracle(Order m_max, bool allow_order_5, unsigned workers) {
  VerificationReport report;
  const Order matching_cap = allow_order_5 ? oracle::kAbsoluteMaxOrder : oracle::kDefaultMaxOrder;
  const oracle::OracleOptions opts{allow_order_5, workers};
  for (Order m = 1; m <= std::min(m_max, matching_cap); ++m) {
    const auto census = oracle::enumerate_matchings(m, opts);
    report.add("oracle-total", m_param(m), total_diagrams(m).str(), census.total.str());
    report.add("oracle-connected", m_param(m), connected_recurrence(m).str(),
               census.connected.str());
    report.add("oracle-vacuum", m_param(m), bubble_diagrams(m).str(),
               oracle::enumerate_vacuum_matchings(m, opts).str());
    if (m > oracle::kDefaultMaxOrder) continue;
    const auto orbits = oracle::orbit_census(m, opts);
    report.add("oracle-orbits", m_param(m), arques_walsh(m).str(), orbits.orbit_count.str());
    // A free action leaves a single histogram bin at (2m)!!.
    std::string sizes;
    for (const auto& [size, freq] : orbits.orbit_sizes) {
      if (!sizes.empty()) sizes += ' ';
      sizes += std::to_string(size) + ":" + std::to_string(freq);
    }
    report.add("oracle-orbit-sizes", m_param(m),
               double_factorial(2 * m).str() + ":" + orbits.orbit_count.str(), sizes);
  }
  return report;
}

VerificationReport run_verification_suite(const SuiteOptions& options) {
  if (options.max_order < 1) throw std::domain_error("verify: max order must be at least 1");
  const Order m = options.max_order;
  const Order exp_cap = std::min(m, exponential_order_cap(options.term_budget));

  VerificationReport report;
  report.append(verify_convolution(m));
  report.append(verify_coefficient_recursion(exp_cap));
  report.append(verify_rewrite_identities(m));
  report.append(verify_three_paths(exp_cap, options.term_budget));
  report.append(verify_divisibility(m));
  report.append(verify_compositions(std::min(m, 16u), std::min(m, 10u)));
  if (options.run_oracle)
    report.append(verify_oracle(m, options.oracle_override, options.workers));
  return report;
}

}  // namespace feyncount
