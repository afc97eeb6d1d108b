#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bnchain/partition.hpp"
#include "bnchain/profile.hpp"

namespace bnchain {

/// A labelling of the boxes of a partition by symbols 1..g.
///
/// Labels are stored as rows bottom-to-top (French reading order), so
/// rows()[y-1][x-1] is the label of box (x, y). The shape is implied by the
/// row lengths. Construction checks only the shape and the alphabet; use
/// validate() for the displacement conditions.
class DisplacementTableau {
 public:
  DisplacementTableau() = default;
  DisplacementTableau(std::vector<std::vector<int>> rows, int alphabet);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int alphabet() const { return alphabet_; }

  int at(const Box& b) const;

  /// Number of distinct symbols that occur.
  int distinct_symbols() const;
  bool has_repeated_symbol() const;

  /// Boxes carrying symbol i, in reading order.
  std::vector<Box> boxes_with(int symbol) const;

  /// Transpose: label of (y, x) in the dual equals label of (x, y) here.
  DisplacementTableau dual() const;

  std::string str() const;

  friend bool operator==(const DisplacementTableau&, const DisplacementTableau&) = default;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
  int alphabet_ = 1;
};

/// True iff t is strictly increasing along rows and columns and any two boxes
/// sharing a symbol i have diagonals congruent modulo m_i with m_i > 0.
/// Throws std::invalid_argument if the profile's genus differs from the
/// tableau's alphabet.
bool validate(const DisplacementTableau& t, const TorsionProfile& m);

/// Visitor for enumeration; return false to stop early.
using TableauVisitor = std::function<bool(const DisplacementTableau&)>;

/// Every m-displacement tableau on lambda with alphabet {1..g}, g = m.genus(),
/// in lexicographic order of the labels read row-major bottom-to-top.
void for_each_tableau(const Partition& lambda, const TorsionProfile& m, const TableauVisitor& visit);

std::vector<DisplacementTableau> enumerate_tableaux(const Partition& lambda, const TorsionProfile& m);

std::size_t count_tableaux(const Partition& lambda, const TorsionProfile& m);

/// Fewest distinct symbols over all m-displacement tableaux on lambda, or
/// nullopt when there is none.
std::optional<int> min_distinct_symbols(const Partition& lambda, const TorsionProfile& m);

/// A tableau on lambda achieving min_distinct_symbols, if any.
std::optional<DisplacementTableau> min_distinct_tableau(const Partition& lambda, const TorsionProfile& m);

/// First tableau (in enumeration order) that repeats some symbol.
std::optional<DisplacementTableau> find_repeating_tableau(const Partition& lambda, const TorsionProfile& m);

/// Builds lambda'_0 = {}, lambda'_{i+1} = disp_plus(lambda'_i, S_{i+1}) for
/// i < g and returns all g + 1 partitions. Requires x - y in S_{t(x,y)} for
/// every box; a violation throws std::invalid_argument naming the box.
std::vector<Partition> assemble(const DisplacementTableau& t, const std::vector<ResidueSet>& sets);

}  // namespace bnchain
