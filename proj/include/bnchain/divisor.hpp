#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "bnchain/chain.hpp"
#include "bnchain/partition.hpp"
#include "bnchain/tableau.hpp"

namespace bnchain {

/// A point on bridge i (joining w_i to v_{i+1}); every such point is linearly
/// equivalent to either endpoint.
struct BridgePoint {
  int index = 1;
  friend bool operator==(const BridgePoint&, const BridgePoint&) = default;
};

using Location = std::variant<CyclePoint, BridgePoint>;

struct DivisorTerm {
  Location location;
  std::int64_t mult = 0;
  friend bool operator==(const DivisorTerm&, const DivisorTerm&) = default;
};

/// A finite formal sum of points on a chain plus an explicit multiple of w_g.
class ChainDivisor {
 public:
  ChainDivisor() = default;

  ChainDivisor& add_point(int cycle, const Rational& xi, std::int64_t mult = 1);
  ChainDivisor& add_bridge(int index, std::int64_t mult = 1);
  ChainDivisor& add_marked(std::int64_t mult) {
    marked_ += mult;
    return *this;
  }
  ChainDivisor& add(const ChainDivisor& other);

  const std::vector<DivisorTerm>& terms() const { return terms_; }
  std::int64_t marked() const { return marked_; }
  std::int64_t degree() const;

  ChainDivisor negated() const;

  friend bool operator==(const ChainDivisor&, const ChainDivisor&) = default;

 private:
  std::vector<DivisorTerm> terms_;
  std::int64_t marked_ = 0;
};

/// The representative sum_i <xi_i>_i + (d - g) w_g of a degree-d class.
/// Coordinates are canonical, so equality of StandardForms is equality of
/// classes.
struct StandardForm {
  std::vector<Rational> xi;
  std::int64_t degree = 0;

  friend bool operator==(const StandardForm&, const StandardForm&) = default;
};

ChainDivisor to_divisor(const StandardForm& form);

/// Abel-Jacobi data of a divisor restricted to one cycle: its degree and the
/// sum of multiplicity times clockwise arc length from w_i, taken modulo the
/// cycle length. Abstract cycles use clockwise length 1.
struct CycleClass {
  std::int64_t degree = 0;
  Rational position;
  friend bool operator==(const CycleClass&, const CycleClass&) = default;
};

struct CycleTerm {
  Rational xi;
  std::int64_t mult = 1;
};

CycleClass cycle_class(const ChainSpec& spec, int cycle, std::span<const CycleTerm> terms);

/// Two divisors on one cycle are equivalent iff their CycleClasses agree.
bool cycle_equivalent(const ChainSpec& spec, int cycle, std::span<const CycleTerm> a, std::span<const CycleTerm> b);

/// The unique point equivalent to a degree-1 divisor on a cycle. Throws
/// std::invalid_argument for any other degree.
CyclePoint cycle_reduce(const ChainSpec& spec, int cycle, std::span<const CycleTerm> terms);

StandardForm standard_form(const ChainDivisor& d, const ChainSpec& spec);

/// lambda_0 = {}, lambda_{i+1} = disp_plus(lambda_i, S_{i+1}) with S_i the
/// integers z such that <z>_i equals the i-th standard-form point.
std::vector<Partition> weierstrass_sequence(const StandardForm& form, const ChainSpec& spec);

Partition weierstrass_partition(const StandardForm& form, const ChainSpec& spec);
Partition weierstrass_partition(const ChainDivisor& d, const ChainSpec& spec);

/// Baker-Norine rank read off the Weierstrass partition: the largest r with
/// (g - d + r, r + 1) in its closure, or -1.
int rank(const ChainDivisor& d, const ChainSpec& spec);
int rank(const StandardForm& form, const ChainSpec& spec);

/// [D - deg(D) w_g] lies in W^lambda.
bool in_w_lambda(const ChainDivisor& d, const Partition& lambda, const ChainSpec& spec);

/// The degree-zero class of D lies in T(t): <xi_{t(x,y)}> = <x - y> on cycle
/// t(x,y) for every box.
bool in_torus(const ChainDivisor& d, const DisplacementTableau& t, const ChainSpec& spec);
bool in_torus(const StandardForm& form, const DisplacementTableau& t, const ChainSpec& spec);

/// The witness tableau t(x,y) = min{i : (x,y) in lambda_i} over the
/// Weierstrass sequence, restricted to lambda. nullopt if lambda is not
/// contained in the Weierstrass partition.
std::optional<DisplacementTableau> witness_tableau(const ChainDivisor& d, const Partition& lambda,
                                                   const ChainSpec& spec);

/// K = sum_{i>=2} v_i + sum_{i<g} w_i.
ChainDivisor canonical_divisor(const ChainSpec& spec);

/// K - D - (2g - 2) w_g: the Serre dual, twisted so that degree-zero classes
/// map to degree-zero classes.
ChainDivisor serre_dual(const ChainDivisor& d, const ChainSpec& spec);

}  // namespace bnchain
