#include <catch_amalgamated.hpp>

#include <functional>
#include <thread>

#include "feyncount/compositions.hpp"
#include "feyncount/counting.hpp"

using namespace feyncount;

namespace {

// Test-side oracles; they share nothing with the library beyond Count.

Count slow_factorial(unsigned n) {
  Count f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

Count slow_binomial(unsigned n, unsigned k) {
  Count b = 1;
  for (unsigned j = 1; j <= k; ++j) b = b * (n - k + j) / j;
  return b;
}

void for_each_tuple(unsigned n, const std::function<void(const std::vector<unsigned>&)>& fn) {
  std::vector<unsigned> prefix;
  std::function<void(unsigned)> rec = [&](unsigned left) {
    if (left == 0) {
      fn(prefix);
      return;
    }
    for (unsigned a = 1; a <= left; ++a) {
      prefix.push_back(a);
      rec(left - a);
      prefix.pop_back();
    }
  };
  rec(n);
}

// C_n^m with the chain binom(m, m-a1) binom(m-a1, m-a1-a2) ... kept unexpanded.
Count chained_coefficient(unsigned n, unsigned m) {
  if (n == m) return 1;
  Count sum = 0;
  for_each_tuple(m - n, [&](const std::vector<unsigned>& a) {
    Count term = 1;
    unsigned rest = m;
    for (unsigned aj : a) {
      term *= slow_factorial(2 * aj) * slow_binomial(rest, rest - aj);
      rest -= aj;
    }
    if (a.size() % 2) term = -term;
    sum += term;
  });
  return sum;
}

// Convolution recurrence in plain 64-bit arithmetic (exact for m <= 8).
std::vector<std::int64_t> small_connected(unsigned m_max) {
  auto fact = [](unsigned n) {
    std::int64_t f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
  };
  auto binom = [&](unsigned n, unsigned k) { return fact(n) / (fact(k) * fact(n - k)); };
  std::vector<std::int64_t> nc{1};
  for (unsigned m = 1; m <= m_max; ++m) {
    std::int64_t v = fact(2 * m + 1);
    for (unsigned n = 1; n <= m; ++n) v -= binom(m, n) * fact(2 * n) * nc[m - n];
    nc.push_back(v);
  }
  return nc;
}

}  // namespace

TEST_CASE("factorial totals", "[counting]") {
  CHECK(total_diagrams(0) == 1);
  CHECK(total_diagrams(1) == 6);
  CHECK(total_diagrams(4) == 362880);
  CHECK(bubble_diagrams(0) == 1);
  CHECK(bubble_diagrams(2) == 24);
  CHECK(bubble_diagrams(3) == 720);
  for (unsigned n = 0; n <= 40; ++n) CHECK(factorial(n) == slow_factorial(n));
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("double factorial", "[counting]") {
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(2) == 2);
  CHECK(double_factorial(8) == 2 * 4 * 6 * 8);
  CHECK_THROWS_AS(double_factorial(7), std::domain_error);
  for (unsigned k = 2; k <= 40; k += 2) {
    Count p = 1;
    for (unsigned j = 2; j <= k; j += 2) p *= j;
    CHECK(double_factorial(k) == p);
  }
}

TEST_CASE("factorial cache under concurrent fills", "[counting][concurrency]") {
  std::vector<std::jthread> pool;
  std::vector<Count> got(8);
  for (unsigned t = 0; t < 8; ++t)
    pool.emplace_back([&, t] { got[t] = factorial(300 + 10 * t); });
  pool.clear();
  for (unsigned t = 0; t < 8; ++t) CHECK(got[t] == slow_factorial(300 + 10 * t));
}

TEST_CASE("connected recurrence", "[counting]") {
  CHECK(connected_recurrence(0) == 1);
  CHECK(connected_recurrence(1) == 4);
  CHECK(connected_recurrence(2) == 80);
  CHECK(connected_recurrence(3) == 3552);
  CHECK(connected_recurrence(4) == 271104);
  // Frozen from the 64-bit oracle below.
  CHECK(connected_recurrence(5) == 31342080);
  CHECK(connected_recurrence(7) == Count("1102119137280"));

  const auto small = small_connected(8);
  const auto seq = connected_sequence(8);
  for (unsigned m = 0; m <= 8; ++m) CHECK(seq[m] == small[m]);
}

TEST_CASE("hand-unrolled recurrences", "[counting]") {
  const auto N = [](unsigned m) { return total_diagrams(m); };
  const auto Nd = [](unsigned m) { return bubble_diagrams(m); };
  const Count nc1 = N(1) - Nd(1);
  const Count nc2 = N(2) - Nd(2) - 2 * Nd(1) * nc1;
  const Count nc3 = N(3) - Nd(3) - 3 * Nd(2) * nc1 - 3 * Nd(1) * nc2;
  const Count nc4 = N(4) - Nd(4) - 4 * Nd(3) * nc1 - 6 * Nd(2) * nc2 - 4 * Nd(1) * nc3;
  CHECK(connected_sequence(4) == std::vector<Count>{1, nc1, nc2, nc3, nc4});
}

TEST_CASE("expansion coefficients", "[counting]") {
  CHECK(coefficient(3, 3) == 1);
  CHECK(coefficient(2, 3) == -6);
  CHECK(coefficient(1, 3) == -48);
  CHECK_THROWS_AS(coefficient(0, 3), std::domain_error);
  CHECK_THROWS_AS(coefficient(4, 3), std::domain_error);
  for (unsigned m = 1; m <= 10; ++m)
    for (unsigned n = 1; n <= m; ++n) {
      INFO("n = " << n << ", m = " << m);
      CHECK(coefficient(n, m) == chained_coefficient(n, m));
    }
}

TEST_CASE("coefficient term counts", "[counting][property]") {
  for (unsigned m = 1; m <= 12; ++m) {
    CHECK(coefficient_term_count(m, m) == 1);
    for (unsigned n = 1; n < m; ++n) {
      std::uint64_t k = 0;
      for ([[maybe_unused]] const auto& c : enumerate_compositions(m - n)) ++k;
      CHECK(coefficient_term_count(n, m) == k);
    }
  }
  CHECK(closed_form_term_count(5) == 16);
  CHECK(arques_walsh_term_count(5) == 32);
}

TEST_CASE("closed form", "[counting]") {
  const auto terms = closed_form_terms(3);
  REQUIRE(terms.size() == 3);
  CHECK(terms[2] == 5040 - 720);
  CHECK(terms[1] == -576);
  CHECK(terms[0] == -192);
  CHECK(connected_closed_form(3) == 3552);
  CHECK(connected_closed_form(1) == 4);
  CHECK(connected_closed_form(0) == 1);
  CHECK(connected_closed_form(7) == connected_recurrence(7));
}

TEST_CASE("Arques-Walsh sum", "[counting]") {
  CHECK(arques_walsh(0) == 1);
  CHECK(arques_walsh_numerator(1) == 24 / 2 - 2 * 2);
  CHECK(arques_walsh(1) == 2);
  CHECK(arques_walsh(2) == 10);
  CHECK(arques_walsh(3) == 74);
  CHECK(arques_walsh(4) == 706);
  const std::vector<Count> next{8162, 110410, 1708394, 29752066, 576037442,
                                Count("12277827850"), Count("285764591114"),
                                Count("7213364729026")};
  for (unsigned m = 5; m <= 12; ++m) CHECK(arques_walsh(m) == next[m - 5]);
}

TEST_CASE("distinct connected diagrams", "[counting]") {
  CHECK(distinct_connected(0) == 1);
  CHECK(distinct_connected(1) == 2);
  CHECK(distinct_connected(4) == 706);
  CHECK(distinct_connected(4) * 384 == 271104);
}

TEST_CASE("three paths agree", "[counting][property]") {
  for (unsigned m = 1; m <= 14; ++m) {
    INFO("m = " << m);
    const Count nc = connected_recurrence(m);
    CHECK(connected_closed_form(m) == nc);
    CHECK(double_factorial(2 * m) * arques_walsh(m) == nc);
  }
}

TEST_CASE("term budget", "[counting]") {
  CHECK_THROWS_AS(arques_walsh(21), BudgetExceeded);
  CHECK_THROWS_AS(arques_walsh(6, 32), BudgetExceeded);
  CHECK_NOTHROW(arques_walsh(5, 32));
  CHECK_THROWS_AS(connected_closed_form(8, 100), BudgetExceeded);
  try {
    connected_closed_form(8, 100);
  } catch (const BudgetExceeded& e) {
    CHECK(e.budget() == 100);
    CHECK(e.terms() == 128);
    CHECK(std::string(e.what()).find("100") != std::string::npos);
  }
}

TEST_CASE("exact division", "[counting]") {
  CHECK(exact_divide(12, 4, "t") == 3);
  CHECK_THROWS_AS(exact_divide(13, 4, "t"), ExactnessError);
}

TEST_CASE("convolution and divisibility to m = 30", "[counting][property]") {
  const auto nc = connected_sequence(30);
  for (unsigned m = 1; m <= 30; ++m) {
    Count rhs = 0;
    for (unsigned n = 0; n <= m; ++n)
      rhs += slow_binomial(m, n) * slow_factorial(2 * n) * nc[m - n];
    CHECK(rhs == slow_factorial(2 * m + 1));
    CHECK(nc[m] % double_factorial(2 * m) == 0);
    CHECK(nc[m] > 0);
  }
}

TEST_CASE("coefficient recursion report", "[counting]") {
  const auto one = verify_coefficient_recursion(1);
  REQUIRE(one.checks.size() == 1);
  CHECK(one.checks[0].expected == coefficient(1, 2).str());
  CHECK(one.overall());

  const auto ten = verify_coefficient_recursion(10);
  CHECK(ten.checks.size() == 55);
  CHECK(ten.overall());
}

TEST_CASE("rewrite identities", "[counting]") {
  // n = 1: 6 = (1!/2) 24/2!; n = 2: 120 = (2!/2) 720/3!
  CHECK(total_diagrams(1) * 2 * 2 == 1 * bubble_diagrams(2));
  CHECK(total_diagrams(2) * 2 * 6 == 2 * bubble_diagrams(3));
  const auto report = verify_rewrite_identities(12);
  CHECK(report.checks.size() == 24);
  CHECK(report.overall());
}

TEST_CASE("count tables", "[counting]") {
  const auto rows = count_table(4, Method::Recurrence);
  REQUIRE(rows.size() == 5);
  std::vector<Count> distinct;
  for (const auto& r : rows) {
    distinct.push_back(r.distinct);
    CHECK(r.distinct * double_factorial(2 * r.m) == r.connected);
  }
  CHECK(distinct == std::vector<Count>{1, 2, 10, 74, 706});

  const auto all = count_table(12, Method::All);
  const auto cf = count_table(12, Method::ClosedForm);
  const auto aw = count_table(12, Method::ArquesWalsh);
  for (unsigned m = 0; m <= 12; ++m) {
    CHECK(all[m].connected == cf[m].connected);
    CHECK(all[m].distinct == aw[m].distinct);
  }
  CHECK_THROWS_AS(count_table(21, Method::ArquesWalsh), BudgetExceeded);
  CHECK_NOTHROW(count_table(40, Method::Recurrence));
  CHECK(parse_method("closed-form") == Method::ClosedForm);
  CHECK_THROWS_AS(parse_method("magic"), std::invalid_argument);
}
