#include "bnchain/partition.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bnchain/rational.hpp"

namespace bnchain {

Partition::Partition(std::initializer_list<int> rows) : rows_(rows) { normalize(); }

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) { normalize(); }

void Partition::normalize() {
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (rows_[k] <= 0) throw std::invalid_argument("partition rows must be positive: " + str());
    if (k + 1 < rows_.size() && rows_[k] < rows_[k + 1]) {
      throw std::invalid_argument("partition rows must be weakly decreasing: " + str());
    }
  }
}

int Partition::size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

std::vector<Box> Partition::boxes() const {
  std::vector<Box> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int y = 1; y <= height(); ++y) {
    for (int x = 1; x <= row(y); ++x) out.push_back({x, y});
  }
  return out;
}

bool Partition::is_subset_of(const Partition& other) const {
  if (height() > other.height()) return false;
  for (int y = 1; y <= height(); ++y) {
    if (row(y) > other.row(y)) return false;
  }
  return true;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < rows_.size(); ++k) os << (k ? "," : "") << rows_[k];
  os << ')';
  return os.str();
}

ResidueSet ResidueSet::residue_class(std::int64_t z, std::int64_t m) {
  if (m < 0) throw std::invalid_argument("residue class modulus must be non-negative");
  if (m == 0) return singleton(z);
  return ResidueSet(Kind::kResidueClass, floor_mod(z, m), m);
}

bool ResidueSet::contains(std::int64_t value) const {
  switch (kind_) {
    case Kind::kEmpty:
      return false;
    case Kind::kSingleton:
      return value == z_;
    case Kind::kResidueClass:
      return floor_mod(value - z_, m_) == 0;
  }
  return false;
}

std::string ResidueSet::str() const {
  switch (kind_) {
    case Kind::kEmpty:
      return "{}";
    case Kind::kSingleton:
      return "{" + std::to_string(z_) + "}";
    case Kind::kResidueClass:
      return std::to_string(z_) + " mod " + std::to_string(m_);
  }
  return {};
}

std::vector<Box> loose_boxes(const Partition& lambda, const ResidueSet& s) {
  std::vector<Box> out;
  if (s.kind() == ResidueSet::Kind::kEmpty) return out;
  // A loose box needs both lower neighbours in the closure, so it sits at most
  // one step beyond the diagram in either direction.
  for (int y = 1; y <= lambda.height() + 1; ++y) {
    for (int x = 1; x <= lambda.width() + 1; ++x) {
      if (lambda.contains({x, y})) continue;
      if (!s.contains(x - y)) continue;
      if (lambda.closure_contains(x - 1, y) && lambda.closure_contains(x, y - 1)) out.push_back({x, y});
    }
  }
  return out;
}

Partition disp_plus(const Partition& lambda, const ResidueSet& s) {
  std::vector<int> rows = lambda.rows();
  for (const Box& b : loose_boxes(lambda, s)) {
    if (b.y > static_cast<int>(rows.size())) rows.resize(static_cast<std::size_t>(b.y), 0);
    // A loose box in row y is always the cell immediately right of that row.
    ++rows[static_cast<std::size_t>(b.y - 1)];
  }
  return Partition(std::move(rows));
}

int hook_length(const Partition& lambda, const Box& b) {
  if (!lambda.contains(b)) {
    throw std::invalid_argument("box (" + std::to_string(b.x) + "," + std::to_string(b.y) + ") is not in " +
                                lambda.str());
  }
  int arm = lambda.row(b.y) - b.x;
  int leg = 0;
  while (lambda.contains({b.x, b.y + leg + 1})) ++leg;
  return arm + leg + 1;
}

namespace {

void add_factorization(int n, int sign, std::vector<int>& exponents) {
  for (int p = 2; n > 1; ++p) {
    while (n % p == 0) {
      exponents[static_cast<std::size_t>(p)] += sign;
      n /= p;
    }
  }
}

}  // namespace

std::uint64_t count_syt(const Partition& lambda) {
  const int n = lambda.size();
  std::vector<int> exponents(static_cast<std::size_t>(n) + 2, 0);
  for (int k = 2; k <= n; ++k) add_factorization(k, +1, exponents);
  for (const Box& b : lambda.boxes()) add_factorization(hook_length(lambda, b), -1, exponents);
  std::uint64_t result = 1;
  for (std::size_t p = 2; p < exponents.size(); ++p) {
    if (exponents[p] < 0) throw std::logic_error("hook product does not divide |lambda|!");
    for (int e = 0; e < exponents[p]; ++e) {
      if (result > std::numeric_limits<std::uint64_t>::max() / p) {
        throw std::overflow_error("standard tableau count exceeds 64 bits");
      }
      result *= p;
    }
  }
  return result;
}

Partition dual(const Partition& lambda) {
  std::vector<int> cols(static_cast<std::size_t>(lambda.width()), 0);
  for (int x = 1; x <= lambda.width(); ++x) {
    int h = 0;
    while (lambda.contains({x, h + 1})) ++h;
    cols[static_cast<std::size_t>(x - 1)] = h;
  }
  return Partition(std::move(cols));
}

namespace {

void check_grda(int g, int r, int d, const std::vector<int>& alpha) {
  if (g < 0) throw std::invalid_argument("genus must be non-negative");
  if (r < 0) throw std::invalid_argument("rank must be non-negative");
  if (g - d + r < 0) throw std::invalid_argument("requires g - d + r >= 0");
  if (alpha.size() != static_cast<std::size_t>(r) + 1) {
    throw std::invalid_argument("ramification sequence must have r+1 entries");
  }
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < 0) throw std::invalid_argument("ramification entries must be non-negative");
    if (i > 0 && alpha[i] < alpha[i - 1]) throw std::invalid_argument("ramification sequence must be nondecreasing");
  }
}

}  // namespace

Partition partition_from_grda(int g, int r, int d, const std::vector<int>& alpha) {
  check_grda(g, r, d, alpha);
  std::vector<int> rows;
  rows.reserve(alpha.size());
  for (int i = 0; i <= r; ++i) rows.push_back(std::max(0, (g - d + r) + alpha[static_cast<std::size_t>(r - i)]));
  return Partition(std::move(rows));
}

std::int64_t rho(int g, int r, int d, const std::vector<int>& alpha) {
  check_grda(g, r, d, alpha);
  std::int64_t sum = std::accumulate(alpha.begin(), alpha.end(), std::int64_t{0});
  return static_cast<std::int64_t>(g) - static_cast<std::int64_t>(r + 1) * (g - d + r) - sum;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    auto level = partitions_of(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace bnchain
