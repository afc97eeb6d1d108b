#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace bnchain {

/// A box of a Young diagram in French notation: x is the column, y the row,
/// both starting at 1.
struct Box {
  int x = 1;
  int y = 1;

  int diagonal() const { return x - y; }

  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box& a, const Box& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

/// A partition, identified with its Young diagram in Z^2_{>0}.
///
/// rows()[k] is the length of row y = k + 1. Rows are weakly decreasing and
/// strictly positive; trailing zero rows are dropped on construction.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> rows);
  explicit Partition(std::vector<int> rows);

  const std::vector<int>& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }
  int height() const { return static_cast<int>(rows_.size()); }
  int width() const { return rows_.empty() ? 0 : rows_.front(); }
  int size() const;

  /// Length of row y (1-based); 0 above the diagram.
  int row(int y) const { return (y >= 1 && y <= height()) ? rows_[y - 1] : 0; }

  bool contains(const Box& b) const { return b.x >= 1 && b.y >= 1 && b.x <= row(b.y); }

  /// Membership in the closure: the diagram plus every lattice point with a
  /// non-positive coordinate.
  bool closure_contains(int x, int y) const { return x <= 0 || y <= 0 || contains({x, y}); }

  /// Boxes in reading order: rows bottom to top, left to right within a row.
  std::vector<Box> boxes() const;

  bool is_subset_of(const Partition& other) const;

  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  void normalize();

  std::vector<int> rows_;
};

/// The integer sets S used for upward displacement: empty, a single integer,
/// or a congruence class z + mZ with 0 <= z < m.
class ResidueSet {
 public:
  enum class Kind { kEmpty, kSingleton, kResidueClass };

  static ResidueSet none() { return ResidueSet(Kind::kEmpty, 0, 0); }
  static ResidueSet singleton(std::int64_t z) { return ResidueSet(Kind::kSingleton, z, 0); }
  /// m = 0 degrades to the singleton {z}.
  static ResidueSet residue_class(std::int64_t z, std::int64_t m);

  Kind kind() const { return kind_; }
  std::int64_t representative() const { return z_; }
  std::int64_t modulus() const { return m_; }

  bool contains(std::int64_t value) const;

  std::string str() const;

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  ResidueSet(Kind kind, std::int64_t z, std::int64_t m) : kind_(kind), z_(z), m_(m) {}

  Kind kind_;
  std::int64_t z_;
  std::int64_t m_;
};

/// Boxes outside lambda whose diagonal lies in S and whose left and lower
/// neighbours both lie in the closure of lambda. Sorted in reading order.
std::vector<Box> loose_boxes(const Partition& lambda, const ResidueSet& s);

/// lambda together with its loose boxes with respect to S.
Partition disp_plus(const Partition& lambda, const ResidueSet& s);

/// Arm + leg + 1. Throws std::invalid_argument if b is not a box of lambda.
int hook_length(const Partition& lambda, const Box& b);

/// Number of standard Young tableaux, |lambda|! / prod(hooks). Exact; throws
/// std::overflow_error past 64 bits.
std::uint64_t count_syt(const Partition& lambda);

/// Transpose.
Partition dual(const Partition& lambda);

/// The partition attached to rank r, degree d and ramification alpha in genus g:
/// rows (g-d+r) + alpha[r-i] for i = 0..r, counted from the bottom.
Partition partition_from_grda(int g, int r, int d, const std::vector<int>& alpha);

/// g - (r+1)(g-d+r) - sum(alpha).
std::int64_t rho(int g, int r, int d, const std::vector<int>& alpha);

/// All partitions with exactly n boxes, in reverse lexicographic order of rows.
std::vector<Partition> partitions_of(int n);

/// All partitions of size at most n (including the empty partition).
std::vector<Partition> partitions_up_to(int n);

}  // namespace bnchain
