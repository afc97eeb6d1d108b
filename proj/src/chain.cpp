#include "bnchain/chain.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace bnchain {

namespace {

/// Inverse of a modulo m for coprime a, m (m >= 1).
std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  __int128 old_r = floor_mod(a, m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw std::logic_error("mod_inverse: arguments not coprime");
  return floor_mod(static_cast<std::int64_t>(old_s % m), m);
}

void check_cycle(int cycle, const ChainSpec& spec) {
  if (cycle < 1 || cycle > spec.genus()) {
    throw std::out_of_range("cycle index " + std::to_string(cycle) + " outside 1.." + std::to_string(spec.genus()));
  }
}

}  // namespace

int torsion_order(const CycleLengths& lengths) {
  Rational ratio = lengths.clockwise / lengths.total;
  if (ratio.den() > std::numeric_limits<int>::max()) throw std::overflow_error("torsion order exceeds int range");
  return static_cast<int>(ratio.den());
}

ChainSpec ChainSpec::metric(std::vector<CycleLengths> cycles, std::vector<Rational> bridges) {
  if (cycles.empty()) throw std::invalid_argument("a chain needs at least one cycle");
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const auto& c = cycles[i];
    if (c.clockwise.sign() <= 0 || c.total <= c.clockwise) {
      throw std::invalid_argument("cycle " + std::to_string(i + 1) + ": need 0 < cw < total, got cw=" +
                                  c.clockwise.str() + " total=" + c.total.str());
    }
  }
  if (!bridges.empty() && bridges.size() + 1 != cycles.size()) {
    throw std::invalid_argument("a chain of " + std::to_string(cycles.size()) + " cycles has " +
                                std::to_string(cycles.size() - 1) + " bridges, got " + std::to_string(bridges.size()));
  }
  for (const Rational& b : bridges) {
    if (b.sign() < 0) throw std::invalid_argument("bridge lengths must be non-negative");
  }
  ChainSpec spec;
  spec.metric_ = true;
  std::vector<int> orders;
  for (std::size_t i = 1; i < cycles.size(); ++i) orders.push_back(bnchain::torsion_order(cycles[i]));
  spec.profile_ = TorsionProfile(static_cast<int>(cycles.size()), std::move(orders), bnchain::torsion_order(cycles.front()));
  spec.cycles_ = std::move(cycles);
  spec.bridges_ = std::move(bridges);
  return spec;
}

ChainSpec ChainSpec::abstract(TorsionProfile profile) {
  ChainSpec spec;
  spec.metric_ = false;
  spec.profile_ = std::move(profile);
  return spec;
}

const std::vector<CycleLengths>& ChainSpec::cycles() const {
  if (!metric_) throw std::logic_error("abstract chain has no edge lengths");
  return cycles_;
}

std::optional<Rational> ChainSpec::period(int cycle) const {
  check_cycle(cycle, *this);
  if (metric_) {
    const auto& c = cycles_[static_cast<std::size_t>(cycle - 1)];
    return c.total / c.clockwise;
  }
  const int m = profile_.order(cycle);
  if (m == 0) return std::nullopt;
  return Rational(m);
}

TorsionProfile torsion_profile(const ChainSpec& spec) { return spec.profile(); }

CyclePoint make_point(const ChainSpec& spec, int cycle, const Rational& xi) {
  check_cycle(cycle, spec);
  auto p = spec.period(cycle);
  return CyclePoint{cycle, p ? xi.mod(*p) : xi};
}

bool point_eq(const CyclePoint& p, const CyclePoint& q, const ChainSpec& spec) {
  if (p.cycle != q.cycle) throw std::invalid_argument("points lie on different cycles");
  return make_point(spec, p.cycle, p.xi) == make_point(spec, q.cycle, q.xi);
}

ResidueSet integer_residues(const CyclePoint& p, const ChainSpec& spec) {
  check_cycle(p.cycle, spec);
  auto period = spec.period(p.cycle);
  if (!period) {
    return p.xi.is_integer() ? ResidueSet::singleton(p.xi.num()) : ResidueSet::none();
  }
  // period = a/b in lowest terms; a is the torsion order. Solve
  // xi + k*a/b in Z: b*xi must be an integer n, then k = -n * a^{-1} mod b.
  const std::int64_t a = period->num();
  const std::int64_t b = period->den();
  const Rational scaled = p.xi * Rational(b);
  if (!scaled.is_integer()) return ResidueSet::none();
  std::int64_t k = 0;
  if (b > 1) {
    const __int128 product = static_cast<__int128>(floor_mod(-scaled.num(), b)) * mod_inverse(a, b);
    k = static_cast<std::int64_t>(product % b);
  }
  const Rational z = p.xi + Rational(k) * *period;
  if (!z.is_integer()) throw std::logic_error("integer_residues: failed to solve congruence");
  return ResidueSet::residue_class(z.num(), a);
}

int genus(const ChainSpec& spec) { return spec.genus(); }

CyclePoint canonical_marked_point(const ChainSpec& spec) { return make_point(spec, spec.genus(), Rational(0)); }

}  // namespace bnchain
