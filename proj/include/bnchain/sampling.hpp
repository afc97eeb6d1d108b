#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bnchain/brill_noether.hpp"
#include "bnchain/chain.hpp"
#include "bnchain/divisor.hpp"
#include "bnchain/oracle.hpp"

namespace bnchain {

/// Seeded generator with platform-independent bounded draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return uniform(0, 1) == 1; }
  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(items.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finaliser, used to derive per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// A coordinate on cycle i: an integer or half-integer in [-2m, 2m] where m is
/// the period (or 3 for cycles without one).
Rational random_coordinate(const ChainSpec& spec, int cycle, Rng& rng);

/// Random divisor of the given degree built from cycle points, bridge points
/// and a w_g term.
ChainDivisor random_divisor(const ChainSpec& spec, std::int64_t degree, Rng& rng);

/// A class drawn from the torus T(t): fixed coordinates from the tableau,
/// free ones from random_coordinate. The standard form has the given degree.
StandardForm sample_from_torus(const DisplacementTableau& t, const ChainSpec& spec, std::int64_t degree, Rng& rng);

/// Adds `count` random principal divisors: w_i - v_{i+1}, a bridge point
/// minus w_i, on-cycle moves preserving the Abel-Jacobi sum, period shifts of
/// existing terms, and m_i (w_i - v_i) on torsion cycles.
ChainDivisor apply_principal_moves(const ChainDivisor& d, const ChainSpec& spec, int count, Rng& rng);

/// Random divisor for rank checks: half the time plain random, half the time
/// sampled from the torus of a random tableau (so special classes appear),
/// then scrambled by principal moves.
ChainDivisor random_test_divisor(const ChainSpec& spec, std::int64_t degree, Rng& rng);

struct TrialReport {
  std::uint64_t seed = 0;
  ChainDivisor divisor;
  CrossCheckReport report;
};

/// cross_check on `trials` random divisors with degrees uniform in
/// [-1, max_degree]. Trial k uses mix_seed(seed, k), so the output does not
/// depend on `threads`.
std::vector<TrialReport> run_verification(const ChainSpec& spec, int trials, std::uint64_t seed, int max_degree,
                                          int threads = 1);

}  // namespace bnchain
