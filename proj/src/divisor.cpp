#include "bnchain/divisor.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bnchain {

ChainDivisor& ChainDivisor::add_point(int cycle, const Rational& xi, std::int64_t mult) {
  if (mult != 0) terms_.push_back({CyclePoint{cycle, xi}, mult});
  return *this;
}

ChainDivisor& ChainDivisor::add_bridge(int index, std::int64_t mult) {
  if (mult != 0) terms_.push_back({BridgePoint{index}, mult});
  return *this;
}

ChainDivisor& ChainDivisor::add(const ChainDivisor& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  marked_ += other.marked_;
  return *this;
}

std::int64_t ChainDivisor::degree() const {
  std::int64_t d = marked_;
  for (const auto& t : terms_) d += t.mult;
  return d;
}

ChainDivisor ChainDivisor::negated() const {
  ChainDivisor out;
  for (const auto& t : terms_) out.terms_.push_back({t.location, -t.mult});
  out.marked_ = -marked_;
  return out;
}

ChainDivisor to_divisor(const StandardForm& form) {
  ChainDivisor d;
  const auto g = static_cast<std::int64_t>(form.xi.size());
  for (std::size_t i = 0; i < form.xi.size(); ++i) d.add_point(static_cast<int>(i) + 1, form.xi[i]);
  d.add_marked(form.degree - g);
  return d;
}

namespace {

void check_location(const Location& loc, const ChainSpec& spec) {
  const int g = spec.genus();
  if (const auto* p = std::get_if<CyclePoint>(&loc)) {
    if (p->cycle < 1 || p->cycle > g) {
      throw std::invalid_argument("divisor term on cycle " + std::to_string(p->cycle) + " of a genus-" +
                                  std::to_string(g) + " chain");
    }
  } else {
    const int b = std::get<BridgePoint>(loc).index;
    if (b < 1 || b >= g) {
      throw std::invalid_argument("divisor term on bridge " + std::to_string(b) + " of a genus-" + std::to_string(g) +
                                  " chain (bridges are 1.." + std::to_string(g - 1) + ")");
    }
  }
}

/// Clockwise length of the v_i w_i edge in the realisation used for
/// arc-length bookkeeping, and the cycle length (nullopt when coordinates
/// never wrap).
std::pair<Rational, std::optional<Rational>> cycle_metric(const ChainSpec& spec, int cycle) {
  if (spec.is_metric()) {
    const auto& c = spec.cycles()[static_cast<std::size_t>(cycle - 1)];
    return {c.clockwise, c.total};
  }
  auto p = spec.period(cycle);
  return {Rational(1), p};
}

}  // namespace

CycleClass cycle_class(const ChainSpec& spec, int cycle, std::span<const CycleTerm> terms) {
  if (cycle < 1 || cycle > spec.genus()) throw std::out_of_range("cycle index out of range");
  auto [cw, total] = cycle_metric(spec, cycle);
  CycleClass out;
  for (const auto& t : terms) {
    out.degree += t.mult;
    out.position += Rational(t.mult) * t.xi * cw;
  }
  if (total) out.position = out.position.mod(*total);
  return out;
}

bool cycle_equivalent(const ChainSpec& spec, int cycle, std::span<const CycleTerm> a, std::span<const CycleTerm> b) {
  return cycle_class(spec, cycle, a) == cycle_class(spec, cycle, b);
}

CyclePoint cycle_reduce(const ChainSpec& spec, int cycle, std::span<const CycleTerm> terms) {
  CycleClass c = cycle_class(spec, cycle, terms);
  if (c.degree != 1) {
    throw std::invalid_argument("cycle_reduce needs a degree-1 divisor, got degree " + std::to_string(c.degree));
  }
  auto [cw, total] = cycle_metric(spec, cycle);
  return make_point(spec, cycle, c.position / cw);
}

StandardForm standard_form(const ChainDivisor& d, const ChainSpec& spec) {
  const int g = spec.genus();
  for (const auto& t : d.terms()) check_location(t.location, spec);
  // xi_i = (i - 1) + sum of mult * xi~_i(p), where xi~_i(p) is -1 left of v_i,
  // 0 right of w_i and the coordinate of p on cycle i. w_g contributes 0.
  std::vector<Rational> xi(static_cast<std::size_t>(g));
  for (int i = 1; i <= g; ++i) {
    Rational acc(i - 1);
    for (const auto& t : d.terms()) {
      if (const auto* p = std::get_if<CyclePoint>(&t.location)) {
        if (p->cycle < i) {
          acc -= Rational(t.mult);
        } else if (p->cycle == i) {
          acc += Rational(t.mult) * p->xi;
        }
      } else if (std::get<BridgePoint>(t.location).index < i) {
        acc -= Rational(t.mult);
      }
    }
    xi[static_cast<std::size_t>(i - 1)] = make_point(spec, i, acc).xi;
  }
  return StandardForm{std::move(xi), d.degree()};
}

std::vector<Partition> weierstrass_sequence(const StandardForm& form, const ChainSpec& spec) {
  const int g = spec.genus();
  if (form.xi.size() != static_cast<std::size_t>(g)) {
    throw std::invalid_argument("standard form has " + std::to_string(form.xi.size()) + " coordinates, chain genus is " +
                                std::to_string(g));
  }
  std::vector<Partition> seq;
  seq.reserve(static_cast<std::size_t>(g) + 1);
  seq.emplace_back();
  for (int i = 1; i <= g; ++i) {
    const ResidueSet s = integer_residues(CyclePoint{i, form.xi[static_cast<std::size_t>(i - 1)]}, spec);
    seq.push_back(disp_plus(seq.back(), s));
  }
  return seq;
}

Partition weierstrass_partition(const StandardForm& form, const ChainSpec& spec) {
  return weierstrass_sequence(form, spec).back();
}

Partition weierstrass_partition(const ChainDivisor& d, const ChainSpec& spec) {
  return weierstrass_partition(standard_form(d, spec), spec);
}

int rank(const StandardForm& form, const ChainSpec& spec) {
  const std::int64_t g = spec.genus();
  const std::int64_t d = form.degree;
  if (d < 0) return -1;
  const Partition lambda = weierstrass_partition(form, spec);
  // Points with a non-positive coordinate are always in the closure, so the
  // scan starts at the Riemann-Roch floor.
  std::int64_t r = std::max<std::int64_t>(-1, d - g);
  while (r + 1 <= d && lambda.closure_contains(static_cast<int>(g - d + r + 1), static_cast<int>(r + 2))) ++r;
  return static_cast<int>(r);
}

int rank(const ChainDivisor& d, const ChainSpec& spec) { return rank(standard_form(d, spec), spec); }

bool in_w_lambda(const ChainDivisor& d, const Partition& lambda, const ChainSpec& spec) {
  return lambda.is_subset_of(weierstrass_partition(d, spec));
}

bool in_torus(const StandardForm& form, const DisplacementTableau& t, const ChainSpec& spec) {
  if (t.alphabet() != spec.genus()) throw std::invalid_argument("tableau alphabet does not match chain genus");
  for (const Box& b : t.shape().boxes()) {
    const int i = t.at(b);
    const CyclePoint p{i, form.xi[static_cast<std::size_t>(i - 1)]};
    if (!point_eq(p, CyclePoint{i, Rational(b.diagonal())}, spec)) return false;
  }
  return true;
}

bool in_torus(const ChainDivisor& d, const DisplacementTableau& t, const ChainSpec& spec) {
  return in_torus(standard_form(d, spec), t, spec);
}

std::optional<DisplacementTableau> witness_tableau(const ChainDivisor& d, const Partition& lambda,
                                                   const ChainSpec& spec) {
  const auto seq = weierstrass_sequence(standard_form(d, spec), spec);
  if (!lambda.is_subset_of(seq.back())) return std::nullopt;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda.height()));
  for (const Box& b : lambda.boxes()) {
    int first = 1;
    while (!seq[static_cast<std::size_t>(first)].contains(b)) ++first;
    rows[static_cast<std::size_t>(b.y - 1)].push_back(first);
  }
  return DisplacementTableau(std::move(rows), spec.genus());
}

ChainDivisor canonical_divisor(const ChainSpec& spec) {
  const int g = spec.genus();
  ChainDivisor k;
  for (int i = 1; i <= g; ++i) {
    if (i >= 2) k.add_point(i, Rational(-1));
    if (i <= g - 1) k.add_point(i, Rational(0));
  }
  return k;
}

ChainDivisor serre_dual(const ChainDivisor& d, const ChainSpec& spec) {
  ChainDivisor out = canonical_divisor(spec);
  out.add(d.negated());
  out.add_marked(-(2 * static_cast<std::int64_t>(spec.genus()) - 2));
  return out;
}

}  // namespace bnchain
