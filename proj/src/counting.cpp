#include "feyncount/counting.hpp"

#include <deque>
#include <limits>
#include <mutex>
#include <shared_mutex>

#include "feyncount/compositions.hpp"

namespace feyncount {

namespace {

class FactorialCache {
 public:
  const Count& get(unsigned n) {
    {
      std::shared_lock lock(mutex_);
      if (n < table_.size()) return table_[n];
    }
    std::unique_lock lock(mutex_);
    if (table_.empty()) table_.emplace_back(1);
    while (table_.size() <= n) {
      const auto k = static_cast<unsigned>(table_.size());
      table_.push_back(table_.back() * k);
    }
    return table_[n];
  }

 private:
  std::shared_mutex mutex_;
  // deque: references stay valid while the table grows.
  std::deque<Count> table_;
};

FactorialCache& factorial_cache() {
  static FactorialCache cache;
  return cache;
}

std::uint64_t pow2_saturating(unsigned e) {
  if (e >= 64) return std::numeric_limits<std::uint64_t>::max();
  return std::uint64_t{1} << e;
}

void check_budget(const char* path, std::uint64_t terms, std::uint64_t budget) {
  if (terms > budget) throw BudgetExceeded(path, terms, budget);
}

// (2a)!/a! for a = 0..n, the per-part weight of the rooted-map sum.
std::vector<Count> part_weights(unsigned n) {
  std::vector<Count> w(n + 1);
  for (unsigned a = 0; a <= n; ++a) w[a] = factorial(2 * a) / factorial(a);
  return w;
}

}  // namespace

BudgetExceeded::BudgetExceeded(std::string what_path, std::uint64_t terms, std::uint64_t budget)
    : std::runtime_error(what_path + " needs " + std::to_string(terms) +
                         " composition terms, over the term budget of " +
                         std::to_string(budget)),
      terms_(terms),
      budget_(budget) {}

MethodDisagreement::MethodDisagreement(Order m, Count recurrence, Count closed_form,
                                       Count arques_walsh_scaled)
    : std::runtime_error("methods disagree at m = " + std::to_string(m) +
                         ": recurrence " + recurrence.str() + ", closed-form " +
                         closed_form.str() + ", (2m)!!*arques-walsh " +
                         arques_walsh_scaled.str()),
      m_(m),
      recurrence_(std::move(recurrence)),
      closed_form_(std::move(closed_form)),
      aw_(std::move(arques_walsh_scaled)) {}

const Count& factorial(unsigned n) { return factorial_cache().get(n); }

Count binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

Count double_factorial(unsigned k) {
  if (k % 2 != 0) throw std::domain_error("double_factorial: argument must be even");
  // k!! = 2^(k/2) (k/2)!
  return factorial(k / 2) << (k / 2);
}

Count total_diagrams(Order m) { return factorial(2 * m + 1); }

Count bubble_diagrams(Order m) { return factorial(2 * m); }

Count exact_divide(const Count& numerator, const Count& denominator, const char* context) {
  Count q, r;
  boost::multiprecision::divide_qr(numerator, denominator, q, r);
  if (r != 0)
    throw ExactnessError(std::string(context) + ": " + numerator.str() +
                         " is not divisible by " + denominator.str());
  return q;
}

std::vector<Count> connected_sequence(Order m_max) {
  std::vector<Count> nc(m_max + 1);
  nc[0] = 1;
  for (Order m = 1; m <= m_max; ++m) {
    Count acc = total_diagrams(m);
    for (Order n = 1; n <= m; ++n) acc -= binomial(m, n) * bubble_diagrams(n) * nc[m - n];
    nc[m] = std::move(acc);
  }
  return nc;
}

Count connected_recurrence(Order m) { return connected_sequence(m).back(); }

std::uint64_t coefficient_term_count(unsigned n, Order m) {
  if (n < 1 || n > m) throw std::domain_error("coefficient: requires 1 <= n <= m");
  return n == m ? 1 : pow2_saturating(m - n - 1);
}

std::uint64_t closed_form_term_count(Order m) { return m == 0 ? 1 : pow2_saturating(m - 1); }

std::uint64_t arques_walsh_term_count(Order m) { return pow2_saturating(m); }

Count coefficient(unsigned n, Order m) {
  if (n < 1 || n > m) throw std::domain_error("coefficient: requires 1 <= n <= m");
  if (n == m) return 1;
  const Count& m_fact = factorial(m);
  const Count& n_fact = factorial(n);
  Count sum = 0;
  for (const Composition& c : enumerate_compositions(m - n)) {
    // Chained binomials telescope into the multinomial m!/(a_1!...a_i! n!).
    Count denom = n_fact;
    Count bubbles = 1;
    for (unsigned a : c) {
      denom *= factorial(a);
      bubbles *= bubble_diagrams(a);
    }
    Count term = bubbles * exact_divide(m_fact, denom, "coefficient multinomial");
    if (c.size() % 2 == 1)
      sum -= term;
    else
      sum += term;
  }
  return sum;
}

std::vector<Count> closed_form_terms(Order m, std::uint64_t term_budget) {
  check_budget("closed-form", closed_form_term_count(m), term_budget);
  std::vector<Count> terms;
  terms.reserve(m);
  for (unsigned n = 1; n <= m; ++n)
    terms.push_back(coefficient(n, m) * (total_diagrams(n) - bubble_diagrams(n)));
  return terms;
}

Count connected_closed_form(Order m, std::uint64_t term_budget) {
  if (m == 0) return 1;
  Count sum = 0;
  for (const Count& t : closed_form_terms(m, term_budget)) sum += t;
  return sum;
}

Count arques_walsh_numerator(Order m, std::uint64_t term_budget) {
  check_budget("arques-walsh", arques_walsh_term_count(m), term_budget);
  const auto weights = part_weights(m + 1);
  Count sum = 0;
  for (const Composition& c : enumerate_compositions(m + 1)) {
    Count term = 1;
    for (unsigned a : c) term *= weights[a];
    if (c.size() % 2 == 1)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

Count arques_walsh(Order m, std::uint64_t term_budget) {
  return exact_divide(arques_walsh_numerator(m, term_budget), Count(1) << (m + 1),
                      "arques_walsh");
}

Count distinct_connected(Order m) {
  return exact_divide(connected_recurrence(m), double_factorial(2 * m), "distinct_connected");
}

VerificationReport verify_coefficient_recursion(Order m_max) {
  // table[n][s] = C_s^n from the composition sum, n <= m_max + 1.
  std::vector<std::vector<Count>> table(m_max + 2);
  for (unsigned n = 1; n <= m_max + 1; ++n) {
    table[n].resize(n + 1);
    for (unsigned s = 1; s <= n; ++s) table[n][s] = coefficient(s, n);
  }
  VerificationReport report;
  for (Order m = 1; m <= m_max; ++m) {
    for (unsigned s = 1; s <= m; ++s) {
      Count rhs = 0;
      for (unsigned n = s; n <= m; ++n) {
        const unsigned k = m - n + 1;
        rhs -= binomial(m + 1, k) * bubble_diagrams(k) * table[n][s];
      }
      report.add("coefficient-recursion", "s=" + std::to_string(s) + ",m=" + std::to_string(m),
                 table[m + 1][s].str(), rhs.str());
    }
  }
  return report;
}

VerificationReport verify_rewrite_identities(Order m_max) {
  VerificationReport report;
  for (Order n = 1; n <= m_max; ++n) {
    const std::string p = "n=" + std::to_string(n);
    // N_n = (n!/2) N_d(n+1) / (n+1)!, cleared of denominators.
    report.add("rewrite-total", p, (2 * factorial(n + 1) * total_diagrams(n)).str(),
               (factorial(n) * bubble_diagrams(n + 1)).str());
    // N_dn = N_d1 N_dn / 2
    report.add("rewrite-bubble", p, (2 * bubble_diagrams(n)).str(),
               (bubble_diagrams(1) * bubble_diagrams(n)).str());
  }
  return report;
}

std::vector<CountRow> count_table(Order max_order, Method method, std::uint64_t term_budget) {
  if (method == Method::ClosedForm || method == Method::All)
    check_budget("closed-form", closed_form_term_count(max_order), term_budget);
  if (method == Method::ArquesWalsh || method == Method::All)
    check_budget("arques-walsh", arques_walsh_term_count(max_order), term_budget);

  std::vector<Count> recurrence;
  if (method == Method::Recurrence || method == Method::All)
    recurrence = connected_sequence(max_order);

  std::vector<CountRow> rows;
  rows.reserve(max_order + 1);
  for (Order m = 0; m <= max_order; ++m) {
    CountRow row;
    row.m = m;
    row.total = total_diagrams(m);
    row.bubbles = bubble_diagrams(m);
    const Count dfact = double_factorial(2 * m);
    switch (method) {
      case Method::Recurrence:
        row.connected = recurrence[m];
        row.distinct = exact_divide(row.connected, dfact, "distinct_connected");
        break;
      case Method::ClosedForm:
        row.connected = connected_closed_form(m, term_budget);
        row.distinct = exact_divide(row.connected, dfact, "distinct_connected");
        break;
      case Method::ArquesWalsh:
        row.distinct = arques_walsh(m, term_budget);
        row.connected = row.distinct * dfact;
        break;
      case Method::All: {
        Count closed = connected_closed_form(m, term_budget);
        Count aw = arques_walsh(m, term_budget);
        Count aw_scaled = aw * dfact;
        if (closed != recurrence[m] || aw_scaled != recurrence[m])
          throw MethodDisagreement(m, recurrence[m], closed, aw_scaled);
        row.connected = recurrence[m];
        row.distinct = std::move(aw);
        break;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Method parse_method(const std::string& name) {
  if (name == "recurrence") return Method::Recurrence;
  if (name == "closed-form") return Method::ClosedForm;
  if (name == "arques-walsh") return Method::ArquesWalsh;
  if (name == "all") return Method::All;
  throw std::invalid_argument("unknown method '" + name +
                              "' (expected recurrence, closed-form, arques-walsh or all)");
}

std::string method_name(Method method) {
  switch (method) {
    case Method::Recurrence: return "recurrence";
    case Method::ClosedForm: return "closed-form";
    case Method::ArquesWalsh: return "arques-walsh";
    case Method::All: return "all";
  }
  return "unknown";
}

}  // namespace feyncount
