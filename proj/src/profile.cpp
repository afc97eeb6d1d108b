#include "bnchain/profile.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bnchain {

namespace {

void check_order(int m, const char* what) {
  if (m < 0 || m == 1) {
    throw std::invalid_argument(std::string(what) + " must be 0 or at least 2, got " + std::to_string(m));
  }
}

}  // namespace

TorsionProfile::TorsionProfile(int genus, std::vector<int> orders, std::optional<int> m1)
    : genus_(genus), orders_(std::move(orders)), m1_(m1) {
  if (genus_ < 1) throw std::invalid_argument("genus must be at least 1");
  if (orders_.size() != static_cast<std::size_t>(genus_ - 1)) {
    throw std::invalid_argument("torsion profile of genus " + std::to_string(genus_) + " needs " +
                                std::to_string(genus_ - 1) + " entries, got " + std::to_string(orders_.size()));
  }
  for (int m : orders_) check_order(m, "torsion order");
  if (m1_) check_order(*m1_, "first torsion order");
}

TorsionProfile TorsionProfile::generic(int genus) {
  return TorsionProfile(genus, std::vector<int>(static_cast<std::size_t>(std::max(genus - 1, 0)), 0));
}

int TorsionProfile::order(int i) const {
  if (i < 1 || i > genus_) throw std::out_of_range("cycle index " + std::to_string(i) + " out of range");
  if (i == 1) return m1_.value_or(0);
  return orders_[static_cast<std::size_t>(i - 2)];
}

bool TorsionProfile::is_generic() const {
  return std::all_of(orders_.begin(), orders_.end(), [](int m) { return m == 0; });
}

std::string TorsionProfile::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < orders_.size(); ++k) os << (k ? "," : "") << orders_[k];
  os << ')';
  return os.str();
}

}  // namespace bnchain
