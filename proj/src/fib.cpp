#include "streambound/fib.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace streambound {

namespace {

void require_step_order(int k) {
  if (k < kMinStepOrder) {
    throw std::invalid_argument("step order k must be >= " +
                                std::to_string(kMinStepOrder) + " (got " +
                                std::to_string(k) + ")");
  }
}

// Largest exponent e such that 2^e fits in ExactInt (256-bit signed).
constexpr long long kMaxPowerOfTwoExponent = 254;

// 2^e as ExactInt, with the same overflow contract as the rest of the module.
ExactInt checked_power_of_two(long long e) {
  if (e > kMaxPowerOfTwoExponent) {
    throw std::overflow_error("2^" + std::to_string(e) +
                              " exceeds the exact integer width");
  }
  ExactInt one = 1;
  return ExactInt(one << static_cast<unsigned>(e));
}

}  // namespace

int Fanout::finite_value() const {
  if (!k_.has_value()) {
    throw std::logic_error("finite_value() called on unbounded fan-out");
  }
  return *k_;
}

std::string Fanout::str() const {
  return k_.has_value() ? std::to_string(*k_) : "inf";
}

FibTable::FibTable(int k) : order_(Fanout::finite(k)) { require_step_order(k); }

FibTable::FibTable(Fanout order) : order_(order) {
  if (order.is_finite()) require_step_order(order.finite_value());
}

ExactInt FibTable::value(long long i) const {
  if (i <= 0) return 0;
  if (i == 1) return 1;
  if (order_.is_unbounded()) return checked_power_of_two(i - 2);
  std::lock_guard<std::mutex> lock(mu_);
  extend_to(i);
  return values_[static_cast<size_t>(i - 1)];
}

ExactInt FibTable::sum(long long n) const {
  if (n <= 0) return 0;
  if (order_.is_unbounded()) return checked_power_of_two(n - 1);
  std::lock_guard<std::mutex> lock(mu_);
  extend_to(n);
  return sums_[static_cast<size_t>(n - 1)];
}

// Grows values_/sums_ one entry at a time so that an overflow throws before
// any oversized allocation can happen. Caller holds mu_.
void FibTable::extend_to(long long i) const {
  const int k = order_.finite_value();
  if (values_.empty()) {
    values_.push_back(1);  // F_k(1)
    sums_.push_back(1);    // S_k(1)
  }
  while (static_cast<long long>(values_.size()) < i) {
    const long long next = static_cast<long long>(values_.size()) + 1;
    ExactInt v = 0;
    for (long long j = next - k; j < next; ++j) {
      if (j >= 1) v += values_[static_cast<size_t>(j - 1)];
    }
    values_.push_back(v);
    sums_.push_back(sums_.back() + v);
  }
}

namespace {

// Per-thread table cache backing the free functions: lookups never contend,
// and the tables themselves are mutex-guarded anyway.
const FibTable& cached_table(int k) {
  require_step_order(k);
  thread_local std::map<int, FibTable> tables;
  auto it = tables.find(k);
  if (it == tables.end()) it = tables.try_emplace(k, k).first;
  return it->second;
}

}  // namespace

ExactInt fib_k(int k, long long i) { return cached_table(k).value(i); }

ExactInt fib_sum(int k, long long n) { return cached_table(k).sum(n); }

double char_poly(int k, double x) {
  require_step_order(k);
  double p = 1.0;
  for (int j = 0; j < k; ++j) p = p * x - 1.0;
  return p;
}

double phi(int k) {
  require_step_order(k);
  double lo = 1.0;  // P_k(1) = 1 - k < 0
  double hi = 2.0;  // P_k(2) = 1 > 0
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (char_poly(k, mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double q_at_phi(int k) {
  const double p = phi(k);
  return p * ((k + 1) * p - 2.0 * k) / (p - 1.0);
}

FibConstant fib_constant(int k) { return FibConstant{k, phi(k), q_at_phi(k)}; }

}  // namespace streambound
