#pragma once

#include <optional>
#include <vector>

#include "bnchain/partition.hpp"
#include "bnchain/profile.hpp"
#include "bnchain/rational.hpp"

namespace bnchain {

/// Lengths of one cycle: the clockwise edge from v_i to w_i, and the whole
/// cycle. Requires 0 < clockwise < total.
struct CycleLengths {
  Rational clockwise;
  Rational total;
};

/// A chain of g cycles joined by bridges from w_i to v_{i+1}, marked at w_g.
///
/// Metric chains carry exact rational lengths. Abstract chains carry only a
/// torsion profile and are realised canonically: a cycle of order m > 0 has
/// clockwise length 1 and total length m; a cycle of order 0 behaves as if its
/// total length were an irrational multiple of the clockwise length, so two
/// coordinates name the same point only when they are equal.
class ChainSpec {
 public:
  static ChainSpec metric(std::vector<CycleLengths> cycles, std::vector<Rational> bridges = {});
  static ChainSpec abstract(TorsionProfile profile);

  bool is_metric() const { return metric_; }
  int genus() const { return static_cast<int>(profile_.genus()); }

  /// Torsion profile; for metric chains m_1 is filled in from the first cycle.
  const TorsionProfile& profile() const { return profile_; }
  int torsion_order(int cycle) const { return profile_.order(cycle); }

  /// Metric data. Throws std::logic_error on abstract chains.
  const std::vector<CycleLengths>& cycles() const;
  /// Bridge lengths, bridge i joining w_i to v_{i+1}. Empty when not given.
  const std::vector<Rational>& bridges() const { return bridges_; }

  /// Period of the coordinate xi on a cycle (total / clockwise for metric
  /// chains, m_i for abstract ones), or nullopt when coordinates never wrap.
  std::optional<Rational> period(int cycle) const;

 private:
  ChainSpec() = default;

  bool metric_ = false;
  std::vector<CycleLengths> cycles_;
  std::vector<Rational> bridges_;
  TorsionProfile profile_;
};

/// Point <xi>_i: xi times the clockwise edge length, clockwise from w_i.
/// Values produced by make_point carry a canonical coordinate, so structural
/// equality coincides with point equality.
struct CyclePoint {
  int cycle = 1;
  Rational xi;

  friend bool operator==(const CyclePoint&, const CyclePoint&) = default;
};

/// Torsion order of one metric cycle: denominator of clockwise / total.
int torsion_order(const CycleLengths& lengths);

TorsionProfile torsion_profile(const ChainSpec& spec);

/// Reduces xi into [0, period) when the cycle has a period.
CyclePoint make_point(const ChainSpec& spec, int cycle, const Rational& xi);

/// Point equality. Throws std::invalid_argument if the cycles differ.
bool point_eq(const CyclePoint& p, const CyclePoint& q, const ChainSpec& spec);

/// The integers z with <z>_i = p.
ResidueSet integer_residues(const CyclePoint& p, const ChainSpec& spec);

int genus(const ChainSpec& spec);

/// w_g = <0>_g.
CyclePoint canonical_marked_point(const ChainSpec& spec);

}  // namespace bnchain
