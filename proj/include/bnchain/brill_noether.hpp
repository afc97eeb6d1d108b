#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bnchain/chain.hpp"
#include "bnchain/partition.hpp"
#include "bnchain/rational.hpp"
#include "bnchain/tableau.hpp"

namespace bnchain {

/// What a torus T(t) prescribes on one cycle: a fixed coordinate (residue z
/// modulo the cycle's torsion order, exact when the order is 0) or nothing.
struct CycleConstraint {
  bool fixed = false;
  std::int64_t z = 0;
  int modulus = 0;

  friend bool operator==(const CycleConstraint&, const CycleConstraint&) = default;
};

struct TorusDescriptor {
  std::vector<CycleConstraint> cycles;  // index i-1 for cycle i

  int dimension() const;
  std::vector<int> free_cycles() const;
  /// Every class of `other` satisfies this torus's constraints.
  bool contains(const TorusDescriptor& other) const;

  friend bool operator==(const TorusDescriptor&, const TorusDescriptor&) = default;
};

struct Component {
  DisplacementTableau tableau;
  TorusDescriptor torus;
  /// No repeated symbol: the torus belongs to the part of the locus that
  /// persists for every profile.
  bool stable = false;
};

TorusDescriptor torus_of(const DisplacementTableau& t, const TorsionProfile& m);

/// One entry per m-displacement tableau on lambda, in enumeration order.
std::vector<Component> components(const Partition& lambda, const ChainSpec& spec);

/// Drops components whose torus sits inside another listed torus. Among
/// identical tori the first one is kept.
std::vector<Component> maximal_components(std::vector<Component> all);

/// Dimension of the largest component, or nullopt when the locus is empty.
std::optional<int> dimension(const Partition& lambda, const ChainSpec& spec);

struct GeneralityVerdict {
  bool general = true;
  /// First index i violating the criterion.
  std::optional<int> index;
  std::optional<DisplacementTableau> witness;
  std::string reason;
};

/// Closed form for the unmarked chain: every m_i with 2 <= i <= g-1 is 0 or
/// exceeds min(i, g+1-i). On failure carries the rectangular witness on
/// (m_i, m_i).
GeneralityVerdict is_general_unmarked(const TorsionProfile& m);

/// Closed form for the chain marked at w_g: every m_i with 2 <= i <= g is 0 or
/// exceeds i. On failure carries the witness on (m_i, 1).
GeneralityVerdict is_general_marked(const TorsionProfile& m);

/// Searches rectangles (unmarked) or all partitions (marked) with at most
/// size_bound boxes for a displacement tableau repeating a symbol. A bound of
/// 2g is complete.
GeneralityVerdict is_general_bruteforce(const TorsionProfile& m, bool marked, int size_bound);

struct ExpectedClass {
  int theta_power = 0;
  Rational coefficient;
  int expected_dim = 0;
  std::uint64_t syt_count = 0;
};

ExpectedClass expected_class(const Partition& lambda, int genus);

}  // namespace bnchain
