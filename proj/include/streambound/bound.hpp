#pragma once

#include <vector>

#include "streambound/exact_int.hpp"
#include "streambound/fib.hpp"

namespace streambound {

// One streaming scenario: U is the normalized upload capacity (how many
// distinct receivers a node can serve per chunk period), k the overlay
// fan-out budget per node.
//
// Time bookkeeping, for reference: the unit slot is T* = C/U_bps (minimum
// chunk transmission time) and chunks arrive at the source every T = U * T*.
// All integer times in this library are in T* units.
struct Scenario {
  int U;
  Fanout k;

  // Validates U >= 1, finite k >= 2 and k >= U; throws std::invalid_argument
  // otherwise. Scenarios with k < U are rejected rather than extrapolated:
  // the attaining constructions assume each chunk period can touch U distinct
  // receivers.
  Scenario(int U, Fanout k);
};

// N-bar(t): for finite k, the sum over j = 1..U of S_k(floor(t) - j + 1);
// for unbounded k this dispatches to the exact power-of-two closed form.
// Real-valued t is floored, per the bound's definition; t < 1 gives 0.
ExactInt exact_bound(const Scenario& s, double t);

// Closed-form asymptotic for finite k:
//   phi^2 (1 - phi^-U) / (Q_k(phi) (phi - 1)^2) * phi^t  -  U/(k-1).
double asymptotic_bound(const Scenario& s, long long t);

// N-bar(t) when the fan-out is unbounded: sum over j = 1..U of 2^(t-j),
// i.e. 2^t - 2^(t-U) once t >= U; 0 for t < 1.
ExactInt infinite_k_bound(int U, long long t);

// Smallest integer t with N-bar(t) >= P: the minimum absolute network delay
// (in T* units) for a P-peer network. P >= 1 required.
long long min_time_to_reach(const Scenario& s, const ExactInt& P);

enum class BoundFlavor { exact, asymptotic, unbounded_k };

// N-bar(t) sampled at integer t = 1..t_max. Exact flavors carry integers in
// `samples`; the asymptotic flavor carries reals in `real_samples` (the other
// vector stays empty).
struct BoundCurve {
  Scenario scenario;
  BoundFlavor flavor;
  std::vector<ExactInt> samples;       // samples[i] = N-bar(i+1)
  std::vector<double> real_samples;    // real_samples[i] = N-bar(i+1)
};

// Samples the requested flavor. The unbounded_k flavor ignores scenario.k's
// finiteness and uses the U-only closed form; the asymptotic flavor requires
// finite k and throws std::invalid_argument otherwise.
BoundCurve sample_bound_curve(const Scenario& s, long long t_max,
                              BoundFlavor flavor);

}  // namespace streambound
