#include "bnchain/sampling.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>

namespace bnchain {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  // Rejection keeps the draw unbiased and identical on every platform.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % span);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rational random_coordinate(const ChainSpec& spec, int cycle, Rng& rng) {
  const auto period = spec.period(cycle);
  const std::int64_t reach = period ? 2 * (period->floor() + 1) : 3;
  const std::int64_t den = rng.coin() ? 1 : 2;
  return Rational(rng.uniform(-reach * den, reach * den), den);
}

ChainDivisor random_divisor(const ChainSpec& spec, std::int64_t degree, Rng& rng) {
  const int g = spec.genus();
  ChainDivisor d;
  const auto points = rng.uniform(0, g + 2);
  for (std::int64_t k = 0; k < points; ++k) {
    const int cycle = static_cast<int>(rng.uniform(1, g));
    d.add_point(cycle, random_coordinate(spec, cycle, rng), rng.uniform(0, 3) == 0 ? -1 : 1);
  }
  if (g > 1 && rng.coin()) d.add_bridge(static_cast<int>(rng.uniform(1, g - 1)), rng.coin() ? 1 : -1);
  d.add_marked(degree - d.degree());
  return d;
}

StandardForm sample_from_torus(const DisplacementTableau& t, const ChainSpec& spec, std::int64_t degree, Rng& rng) {
  const TorusDescriptor torus = torus_of(t, spec.profile());
  StandardForm form;
  form.degree = degree;
  for (int i = 1; i <= spec.genus(); ++i) {
    const auto& c = torus.cycles[static_cast<std::size_t>(i - 1)];
    Rational xi = c.fixed ? Rational(c.z + c.modulus * rng.uniform(-1, 1)) : random_coordinate(spec, i, rng);
    form.xi.push_back(make_point(spec, i, xi).xi);
  }
  return form;
}

ChainDivisor apply_principal_moves(const ChainDivisor& d, const ChainSpec& spec, int count, Rng& rng) {
  const int g = spec.genus();
  ChainDivisor out = d;
  for (int k = 0; k < count; ++k) {
    const int cycle = static_cast<int>(rng.uniform(1, g));
    const std::int64_t sign = rng.coin() ? 1 : -1;
    switch (rng.uniform(0, 4)) {
      case 0:  // w_i ~ v_{i+1} across the bridge
        if (cycle < g) out.add_point(cycle, Rational(0), sign).add_point(cycle + 1, Rational(-1), -sign);
        break;
      case 1:  // a bridge point ~ w_i
        if (cycle < g) out.add_bridge(cycle, sign).add_point(cycle, Rational(0), -sign);
        break;
      case 2: {  // <a> + <b> ~ <c> + <a + b - c> on one cycle
        const Rational a = random_coordinate(spec, cycle, rng);
        const Rational b = random_coordinate(spec, cycle, rng);
        const Rational c = random_coordinate(spec, cycle, rng);
        out.add_point(cycle, a, sign).add_point(cycle, b, sign).add_point(cycle, c, -sign).add_point(cycle, a + b - c,
                                                                                                     -sign);
        break;
      }
      case 3: {  // the same point written with a shifted coordinate
        const auto period = spec.period(cycle);
        if (!period) break;
        const Rational xi = random_coordinate(spec, cycle, rng);
        out.add_point(cycle, xi + *period * Rational(rng.uniform(-2, 2)), sign).add_point(cycle, xi, -sign);
        break;
      }
      default: {  // m_i w_i ~ m_i v_i
        const int m = spec.torsion_order(cycle);
        if (m > 0) out.add_point(cycle, Rational(0), sign * m).add_point(cycle, Rational(-1), -sign * m);
        break;
      }
    }
  }
  return out;
}

ChainDivisor random_test_divisor(const ChainSpec& spec, std::int64_t degree, Rng& rng) {
  const int g = spec.genus();
  ChainDivisor base;
  bool sampled = false;
  if (rng.coin()) {
    const auto shapes = partitions_of(static_cast<int>(rng.uniform(1, std::min(g + 1, 6))));
    const Partition& lambda = rng.pick(shapes);
    std::vector<DisplacementTableau> found;
    for_each_tableau(lambda, spec.profile(), [&](const DisplacementTableau& t) {
      found.push_back(t);
      return found.size() < 64;
    });
    if (!found.empty()) {
      base = to_divisor(sample_from_torus(rng.pick(found), spec, degree, rng));
      sampled = true;
    }
  }
  if (!sampled) base = random_divisor(spec, degree, rng);
  return apply_principal_moves(base, spec, static_cast<int>(rng.uniform(0, 4)), rng);
}

std::vector<TrialReport> run_verification(const ChainSpec& spec, int trials, std::uint64_t seed, int max_degree,
                                          int threads) {
  if (trials < 0) throw std::invalid_argument("trial count must be non-negative");
  if (max_degree < -1) throw std::invalid_argument("max degree must be at least -1");
  std::vector<TrialReport> out(static_cast<std::size_t>(trials));
  auto run_one = [&](int k) {
    TrialReport& r = out[static_cast<std::size_t>(k)];
    r.seed = mix_seed(seed, static_cast<std::uint64_t>(k));
    Rng rng(r.seed);
    r.divisor = random_test_divisor(spec, rng.uniform(-1, max_degree), rng);
    r.report = cross_check(spec, r.divisor);
  };
  threads = std::clamp(threads, 1, std::max(1, trials));
  if (threads == 1) {
    for (int k = 0; k < trials; ++k) run_one(k);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int k = w; k < trials; k += threads) run_one(k);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace bnchain
