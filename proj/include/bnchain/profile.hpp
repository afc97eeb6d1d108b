#pragma once

#include <optional>
#include <string>
#include <vector>

namespace bnchain {

/// Torsion orders (m_2, ..., m_g) of a genus-g chain, plus the first order m_1
/// which is carried separately. Every order is 0 or at least 2.
class TorsionProfile {
 public:
  TorsionProfile() = default;
  /// orders holds m_2..m_g, so its length must be g - 1.
  TorsionProfile(int genus, std::vector<int> orders, std::optional<int> m1 = std::nullopt);

  /// The all-zero (generic) profile.
  static TorsionProfile generic(int genus);

  int genus() const { return genus_; }
  const std::vector<int>& orders() const { return orders_; }
  const std::optional<int>& m1() const { return m1_; }

  /// m_i for i in 1..g. m_1 defaults to 0 when unset.
  int order(int i) const;

  bool is_generic() const;
  std::string str() const;

  friend bool operator==(const TorsionProfile&, const TorsionProfile&) = default;

 private:
  int genus_ = 1;
  std::vector<int> orders_;
  std::optional<int> m1_;
};

}  // namespace bnchain
