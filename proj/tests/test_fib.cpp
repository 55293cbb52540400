#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "streambound/fib.hpp"

using namespace streambound;

namespace {

// Independent oracle: evaluate the k-term recurrence directly on int64,
// no memoization, no shortcuts. Safe well past the ranges used below.
long long naive_fib(int k, long long i) {
  if (i <= 0) return 0;
  if (i == 1) return 1;
  std::vector<long long> f(static_cast<size_t>(i) + 1, 0);
  f[1] = 1;
  for (long long n = 2; n <= i; ++n) {
    long long acc = 0;
    for (long long j = n - k; j < n; ++j) {
      if (j >= 1) acc += f[static_cast<size_t>(j)];
    }
    f[static_cast<size_t>(n)] = acc;
  }
  return f[static_cast<size_t>(i)];
}

long long naive_sum(int k, long long n) {
  long long acc = 0;
  for (long long i = 1; i <= n; ++i) acc += naive_fib(k, i);
  return acc;
}

}  // namespace

TEST_CASE("fib_k matches a direct recurrence oracle") {
  for (int k = 2; k <= 6; ++k) {
    for (long long i = -3; i <= 40; ++i) {
      CAPTURE(k);
      CAPTURE(i);
      CHECK(fib_k(k, i) == ExactInt(naive_fib(k, i)));
    }
  }
}

TEST_CASE("fib_sum matches a direct summation oracle") {
  for (int k = 2; k <= 6; ++k) {
    for (long long n = -2; n <= 40; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      CHECK(fib_sum(k, n) == ExactInt(naive_sum(k, n)));
    }
  }
}

TEST_CASE("fib_k pinned values") {
  CHECK(fib_k(2, 0) == 0);
  CHECK(fib_k(2, -7) == 0);
  const long long first_seven[] = {1, 1, 2, 3, 5, 8, 13};
  for (long long i = 1; i <= 7; ++i) CHECK(fib_k(2, i) == first_seven[i - 1]);
  // k=4 sequence runs 1, 1, 2, 4, 8, 15, 29, 56.
  CHECK(fib_k(4, 8) == 56);
  CHECK(fib_sum(2, 0) == 0);
  CHECK(fib_sum(2, 5) == 12);
  CHECK(fib_sum(4, 5) == 16);
}

TEST_CASE("early terms double: F_k(i) = 2^(i-2) for 1 < i <= k+1") {
  for (int k = 2; k <= 8; ++k) {
    ExactInt expect = 1;
    for (long long i = 2; i <= k + 1; ++i) {
      CHECK(fib_k(k, i) == expect);
      expect *= 2;
    }
    // One step past the doubling window the recurrence loses the i=0 term.
    CHECK(fib_k(k, k + 2) == expect - 1);
  }
}

TEST_CASE("sequence is positive and non-decreasing from i = 1") {
  for (int k : {2, 3, 6}) {
    ExactInt prev = 0;
    for (long long i = 1; i <= 120; ++i) {
      const ExactInt v = fib_k(k, i);
      CHECK(v > 0);
      CHECK(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("telescoped recurrence F_k(i+1) = 2 F_k(i) - F_k(i-k) up to i=200") {
  // Holds from i = 2 on: F_k(2) is pinned by the base clause (= 1), not by the
  // k-term sum, so at i = 1 the right-hand side gives 2 instead.
  for (int k = 2; k <= 6; ++k) {
    for (long long i = 2; i <= 200; ++i) {
      CAPTURE(k);
      CAPTURE(i);
      CHECK(fib_k(k, i + 1) == 2 * fib_k(k, i) - fib_k(k, i - k));
    }
  }
}

TEST_CASE("partial sums telescope: S_k(n) - S_k(n-1) = F_k(n)") {
  for (int k = 2; k <= 6; ++k) {
    for (long long n = 1; n <= 200; ++n) {
      CHECK(fib_sum(k, n) - fib_sum(k, n - 1) == fib_k(k, n));
    }
  }
}

TEST_CASE("k=2 is the classical sequence: S_2(n) = F_2(n+2) - 1") {
  for (long long n = 1; n <= 100; ++n) {
    CHECK(fib_sum(2, n) == fib_k(2, n + 2) - 1);
  }
}

TEST_CASE("FibTable agrees with the free functions and is reusable") {
  FibTable t(3);
  CHECK(t.order() == Fanout::finite(3));
  for (long long i = -1; i <= 60; ++i) CHECK(t.value(i) == fib_k(3, i));
  for (long long n = -1; n <= 60; ++n) CHECK(t.sum(n) == fib_sum(3, n));
  // Querying backwards after extension still answers from the memo.
  CHECK(t.value(10) == fib_k(3, 10));
}

TEST_CASE("unbounded FibTable is the power-of-two limit") {
  FibTable t(Fanout::unbounded());
  CHECK(t.order().is_unbounded());
  CHECK(t.value(0) == 0);
  CHECK(t.value(1) == 1);
  ExactInt expect = 1;
  for (long long i = 2; i <= 100; ++i) {
    CHECK(t.value(i) == expect);
    expect *= 2;
  }
  CHECK(t.sum(1) == 1);
  CHECK(t.sum(10) == 512);  // 2^9
  // Finite tables approach it from below.
  for (long long i = 2; i <= 60; ++i) CHECK(fib_k(6, i) <= t.value(i));
  CHECK_THROWS_AS(t.value(300), std::overflow_error);
  CHECK_THROWS_AS(t.sum(300), std::overflow_error);
}

TEST_CASE("precondition and overflow failures are reported") {
  CHECK_THROWS_AS(fib_k(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(fib_sum(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(FibTable(1), std::invalid_argument);
  CHECK_THROWS_AS(FibTable(Fanout::finite(-2)), std::invalid_argument);
  CHECK_THROWS_AS(Fanout::unbounded().finite_value(), std::logic_error);
  // F_2 grows like 1.618^i; index 400 is far past the 256-bit width.
  FibTable wide(2);
  CHECK_THROWS_AS(wide.value(400), std::overflow_error);
  CHECK_THROWS_AS(wide.sum(400), std::overflow_error);
}

TEST_CASE("char_poly and phi: bracketed root against reference values") {
  // P_k(1) = 1 - k and P_k(2) = 1 pin the bisection bracket.
  for (int k = 2; k <= 16; ++k) {
    CHECK(char_poly(k, 1.0) == doctest::Approx(1.0 - k));
    CHECK(char_poly(k, 2.0) == doctest::Approx(1.0));
    CHECK(std::abs(char_poly(k, phi(k))) <= 1e-10);
  }
  CHECK(std::abs(phi(2) - 1.61803) <= 1e-5);
  CHECK(std::abs(phi(3) - 1.83929) <= 1e-5);
  CHECK(std::abs(phi(4) - 1.92756) <= 1e-5);
  CHECK(std::abs(phi(5) - 1.96595) <= 1e-5);
  CHECK(std::abs(phi(6) - 1.98358) <= 1e-5);
}

TEST_CASE("phi increases strictly with k and stays below 2") {
  for (int k = 2; k <= 15; ++k) {
    CHECK(phi(k) < phi(k + 1));
    CHECK(phi(k + 1) < 2.0);
  }
  CHECK(phi(2) > 1.0);
}

TEST_CASE("q_at_phi reproduces the reference normalizers") {
  CHECK(std::abs(q_at_phi(2) - 2.23607) <= 1e-5);
  CHECK(std::abs(q_at_phi(3) - 2.97417) <= 1e-5);
  CHECK(std::abs(q_at_phi(4) - 3.40352) <= 1e-5);
  CHECK(std::abs(q_at_phi(5) - 3.65468) <= 1e-5);
  CHECK(std::abs(q_at_phi(6) - 3.80162) <= 1e-5);
  // k=2 reduces to sqrt(5) exactly.
  CHECK(std::abs(q_at_phi(2) - std::sqrt(5.0)) <= 1e-12);
  const FibConstant c = fib_constant(4);
  CHECK(c.k == 4);
  CHECK(c.phi == doctest::Approx(phi(4)));
  CHECK(c.q_at_phi == doctest::Approx(q_at_phi(4)));
}

TEST_CASE("asymptotic fidelity: F_k(n) ~ phi^n / Q_k(phi)") {
  for (int k = 2; k <= 6; ++k) {
    const double p = phi(k);
    const double q = q_at_phi(k);
    for (long long n = 40; n <= 60; ++n) {
      const double exact = fib_k(k, n).convert_to<double>();
      const double approx = std::pow(p, static_cast<double>(n)) / q;
      CAPTURE(k);
      CAPTURE(n);
      CHECK(std::abs(exact - approx) / exact < 1e-6);
    }
  }
}

TEST_CASE("Fanout variant basics") {
  CHECK(Fanout::finite(4).finite_value() == 4);
  CHECK(Fanout::finite(4).str() == "4");
  CHECK(Fanout::unbounded().str() == "inf");
  CHECK(Fanout::finite(4) == Fanout::finite(4));
  CHECK(Fanout::finite(4) != Fanout::finite(2));
  CHECK(Fanout::unbounded() == Fanout::unbounded());
  CHECK(Fanout::finite(2) != Fanout::unbounded());
}
