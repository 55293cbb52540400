#include "streambound/bound.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace streambound {

namespace {

void require_finite(const Scenario& s, const char* what) {
  if (s.k.is_unbounded()) {
    throw std::invalid_argument(std::string(what) +
                                " requires a finite fan-out k");
  }
}

}  // namespace

Scenario::Scenario(int U_, Fanout k_) : U(U_), k(k_) {
  if (U < 1) {
    throw std::invalid_argument("upload capacity U must be >= 1 (got " +
                                std::to_string(U) + ")");
  }
  if (k.is_finite()) {
    if (k.finite_value() < kMinStepOrder) {
      throw std::invalid_argument("fan-out k must be >= 2 (got " + k.str() +
                                  ")");
    }
    if (k.finite_value() < U) {
      throw std::invalid_argument(
          "fan-out k must be >= U; k=" + k.str() + " cannot serve U=" +
          std::to_string(U) + " distinct receivers per chunk period");
    }
  }
}

ExactInt exact_bound(const Scenario& s, double t) {
  if (!std::isfinite(t)) {
    throw std::invalid_argument("bound time t must be finite");
  }
  if (t < 0.0) {
    throw std::invalid_argument("bound time t must be >= 0");
  }
  const long long tf = static_cast<long long>(std::floor(t));
  if (s.k.is_unbounded()) return infinite_k_bound(s.U, tf);
  const int k = s.k.finite_value();
  ExactInt total = 0;
  for (int j = 1; j <= s.U; ++j) total += fib_sum(k, tf - j + 1);
  return total;
}

double asymptotic_bound(const Scenario& s, long long t) {
  require_finite(s, "asymptotic_bound");
  const int k = s.k.finite_value();
  const double p = phi(k);
  const double q = q_at_phi(k);
  const double coef =
      p * p * (1.0 - std::pow(p, -static_cast<double>(s.U))) /
      (q * (p - 1.0) * (p - 1.0));
  return coef * std::pow(p, static_cast<double>(t)) -
         static_cast<double>(s.U) / (k - 1);
}

ExactInt infinite_k_bound(int U, long long t) {
  if (U < 1) {
    throw std::invalid_argument("upload capacity U must be >= 1 (got " +
                                std::to_string(U) + ")");
  }
  if (t < 1) return 0;
  static const FibTable unbounded{Fanout::unbounded()};
  ExactInt total = 0;
  for (int j = 1; j <= U; ++j) total += unbounded.sum(t - j + 1);
  return total;
}

long long min_time_to_reach(const Scenario& s, const ExactInt& P) {
  if (P < 1) {
    throw std::invalid_argument("peer count P must be >= 1");
  }
  // The curve is non-decreasing and unbounded, so the scan terminates (or
  // surfaces std::overflow_error for P beyond the exact-integer width).
  for (long long t = 1;; ++t) {
    if (exact_bound(s, static_cast<double>(t)) >= P) return t;
  }
}

BoundCurve sample_bound_curve(const Scenario& s, long long t_max,
                              BoundFlavor flavor) {
  if (t_max < 1) {
    throw std::invalid_argument("t_max must be >= 1");
  }
  BoundCurve curve{s, flavor, {}, {}};
  for (long long t = 1; t <= t_max; ++t) {
    switch (flavor) {
      case BoundFlavor::exact:
        curve.samples.push_back(exact_bound(s, static_cast<double>(t)));
        break;
      case BoundFlavor::asymptotic:
        curve.real_samples.push_back(asymptotic_bound(s, t));
        break;
      case BoundFlavor::unbounded_k:
        curve.samples.push_back(infinite_k_bound(s.U, t));
        break;
    }
  }
  return curve;
}

}  // namespace streambound
