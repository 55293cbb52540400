#pragma once

#include <compare>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "streambound/exact_int.hpp"

namespace streambound {

// Smallest step order for which the k-step machinery is defined. k=1 would
// degenerate to a constant sequence (a relay chain) and is rejected everywhere.
inline constexpr int kMinStepOrder = 2;

// Fan-out budget: either a finite neighbor count k >= 1 or the unbounded
// variant (a node may deliver to arbitrarily many distinct neighbors).
// Modeled as a distinct variant rather than a sentinel large integer because
// the unbounded case has its own exact closed forms.
class Fanout {
 public:
  static Fanout finite(int k) { return Fanout(k); }
  static Fanout unbounded() { return Fanout(std::nullopt); }

  bool is_unbounded() const noexcept { return !k_.has_value(); }
  bool is_finite() const noexcept { return k_.has_value(); }

  // The finite value; throws std::logic_error on the unbounded variant.
  int finite_value() const;

  // "4" for finite(4), "inf" for unbounded(); the CLI speaks this dialect.
  std::string str() const;

  friend bool operator==(const Fanout&, const Fanout&) = default;

 private:
  explicit Fanout(std::optional<int> k) : k_(k) {}
  std::optional<int> k_;
};

// Memoized k-step Fibonacci values F_k(i) and partial sums S_k(n), exact.
//
//   F_k(i) = 0 for i <= 0, 1 for i = 1, sum of the previous k terms otherwise
//   S_k(n) = 0 for n <= 0, else F_k(1) + ... + F_k(n)
//
// The unbounded variant is the k -> infinity limit: F(i) = 2^(i-2) for i >= 2
// and S(n) = 2^(n-1) for n >= 1.
//
// The table extends itself lazily; extension is guarded by a mutex, so a
// shared table is safe to query from many threads and callers never observe
// mutation. Overflow past the ExactInt width surfaces as std::overflow_error.
class FibTable {
 public:
  // Finite step order; throws std::invalid_argument for k < 2.
  explicit FibTable(int k);
  // Finite or unbounded step order.
  explicit FibTable(Fanout order);

  FibTable(const FibTable&) = delete;
  FibTable& operator=(const FibTable&) = delete;

  Fanout order() const noexcept { return order_; }

  // F_k(i) for any signed index i.
  ExactInt value(long long i) const;
  // S_k(n) for any signed index n.
  ExactInt sum(long long n) const;

 private:
  void extend_to(long long i) const;

  Fanout order_;
  mutable std::mutex mu_;
  mutable std::vector<ExactInt> values_;  // values_[j] = F_k(j+1), j >= 0
  mutable std::vector<ExactInt> sums_;    // sums_[j]   = S_k(j+1), j >= 0
};

// F_k(i) / S_k(n) over a per-thread table cache; validates k >= 2.
ExactInt fib_k(int k, long long i);
ExactInt fib_sum(int k, long long n);

// Characteristic polynomial P_k(x) = x^k - x^(k-1) - ... - x - 1, evaluated
// by the Horner-style recurrence p <- p*x - 1 (deterministic across platforms).
double char_poly(int k, double x);

// Dominant real root of P_k in (1,2), found by bracketed bisection: the
// bracket is guaranteed by P_k(1) = 1-k < 0 and P_k(2) = 1 > 0, and bisection
// converges deterministically to well below 1e-12.
double phi(int k);

// Asymptotic normalizer Q_k(phi_k), via the closed form
// phi*((k+1)*phi - 2k)/(phi - 1). For k=2 this is exactly sqrt(5).
double q_at_phi(int k);

// The (phi_k, Q_k(phi_k)) pair for one step order.
struct FibConstant {
  int k;
  double phi;
  double q_at_phi;
};

FibConstant fib_constant(int k);

}  // namespace streambound
