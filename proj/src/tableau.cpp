#include "bnchain/tableau.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bnchain/rational.hpp"

namespace bnchain {

DisplacementTableau::DisplacementTableau(std::vector<std::vector<int>> rows, int alphabet)
    : rows_(std::move(rows)), alphabet_(alphabet) {
  if (alphabet_ < 1) throw std::invalid_argument("tableau alphabet must contain at least one symbol");
  std::vector<int> lengths;
  lengths.reserve(rows_.size());
  for (const auto& r : rows_) lengths.push_back(static_cast<int>(r.size()));
  shape_ = Partition(lengths);
  if (shape_.height() != static_cast<int>(rows_.size())) {
    throw std::invalid_argument("tableau rows must be non-empty");
  }
  for (const auto& r : rows_) {
    for (int label : r) {
      if (label < 1 || label > alphabet_) {
        throw std::invalid_argument("label " + std::to_string(label) + " outside alphabet {1.." +
                                    std::to_string(alphabet_) + "}");
      }
    }
  }
}

int DisplacementTableau::at(const Box& b) const {
  if (!shape_.contains(b)) throw std::out_of_range("box outside tableau shape");
  return rows_[static_cast<std::size_t>(b.y - 1)][static_cast<std::size_t>(b.x - 1)];
}

int DisplacementTableau::distinct_symbols() const {
  std::set<int> seen;
  for (const auto& r : rows_) seen.insert(r.begin(), r.end());
  return static_cast<int>(seen.size());
}

bool DisplacementTableau::has_repeated_symbol() const { return distinct_symbols() < shape_.size(); }

std::vector<Box> DisplacementTableau::boxes_with(int symbol) const {
  std::vector<Box> out;
  for (const Box& b : shape_.boxes()) {
    if (at(b) == symbol) out.push_back(b);
  }
  return out;
}

DisplacementTableau DisplacementTableau::dual() const {
  Partition transposed = bnchain::dual(shape_);
  std::vector<std::vector<int>> rows;
  for (int y = 1; y <= transposed.height(); ++y) {
    std::vector<int> r;
    for (int x = 1; x <= transposed.row(y); ++x) r.push_back(at({y, x}));
    rows.push_back(std::move(r));
  }
  return DisplacementTableau(std::move(rows), alphabet_);
}

std::string DisplacementTableau::str() const {
  std::ostringstream os;
  // Top row first, the way the diagram is drawn.
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    if (it != rows_.rbegin()) os << " / ";
    for (std::size_t k = 0; k < it->size(); ++k) os << (k ? " " : "") << (*it)[k];
  }
  return os.str();
}

bool validate(const DisplacementTableau& t, const TorsionProfile& m) {
  if (m.genus() != t.alphabet()) {
    throw std::invalid_argument("profile genus " + std::to_string(m.genus()) + " does not match alphabet size " +
                                std::to_string(t.alphabet()));
  }
  const Partition& shape = t.shape();
  std::map<int, int> first_diagonal;
  for (const Box& b : shape.boxes()) {
    const int label = t.at(b);
    if (shape.contains({b.x + 1, b.y}) && t.at({b.x + 1, b.y}) <= label) return false;
    if (shape.contains({b.x, b.y + 1}) && t.at({b.x, b.y + 1}) <= label) return false;
    auto [it, inserted] = first_diagonal.emplace(label, b.diagonal());
    if (!inserted) {
      const int order = m.order(label);
      if (order == 0 || floor_mod(b.diagonal() - it->second, order) != 0) return false;
    }
  }
  return true;
}

namespace {

/// Backtracking over labellings in reading order. Each box is bounded below
/// by its left and lower neighbours and above by g minus the longest
/// strictly increasing path that must continue from it.
class TableauSearch {
 public:
  TableauSearch(const Partition& lambda, const TorsionProfile& m) : lambda_(lambda), profile_(m), g_(m.genus()) {
    boxes_ = lambda.boxes();
    const std::size_t n = boxes_.size();
    left_.assign(n, -1);
    below_.assign(n, -1);
    steps_.assign(n, 0);
    std::map<std::pair<int, int>, int> index;
    for (std::size_t k = 0; k < n; ++k) index[{boxes_[k].x, boxes_[k].y}] = static_cast<int>(k);
    for (std::size_t k = 0; k < n; ++k) {
      const Box& b = boxes_[k];
      if (auto it = index.find({b.x - 1, b.y}); it != index.end()) left_[k] = it->second;
      if (auto it = index.find({b.x, b.y - 1}); it != index.end()) below_[k] = it->second;
    }
    for (std::size_t k = n; k-- > 0;) {
      const Box& b = boxes_[k];
      int s = 0;
      if (auto it = index.find({b.x + 1, b.y}); it != index.end()) s = std::max(s, steps_[it->second] + 1);
      if (auto it = index.find({b.x, b.y + 1}); it != index.end()) s = std::max(s, steps_[it->second] + 1);
      steps_[k] = s;
    }
    labels_.assign(n, 0);
    count_.assign(static_cast<std::size_t>(g_) + 1, 0);
    first_diag_.assign(static_cast<std::size_t>(g_) + 1, 0);
  }

  /// leaf() is called on each complete labelling and returns false to stop.
  /// prune(distinct) is consulted after each placement; true cuts the branch.
  template <class Leaf, class Prune>
  void run(Leaf&& leaf, Prune&& prune) {
    stopped_ = false;
    dfs(0, leaf, prune);
  }

  DisplacementTableau current() const {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda_.height()));
    for (std::size_t k = 0; k < boxes_.size(); ++k) {
      rows[static_cast<std::size_t>(boxes_[k].y - 1)].push_back(labels_[k]);
    }
    return DisplacementTableau(std::move(rows), g_);
  }

  int distinct() const { return distinct_; }
  bool repeated() const { return distinct_ < static_cast<int>(boxes_.size()); }
  std::size_t size() const { return boxes_.size(); }

 private:
  template <class Leaf, class Prune>
  void dfs(std::size_t k, Leaf& leaf, Prune& prune) {
    if (k == boxes_.size()) {
      if (!leaf()) stopped_ = true;
      return;
    }
    int lo = 1;
    if (left_[k] >= 0) lo = std::max(lo, labels_[static_cast<std::size_t>(left_[k])] + 1);
    if (below_[k] >= 0) lo = std::max(lo, labels_[static_cast<std::size_t>(below_[k])] + 1);
    const int hi = g_ - steps_[k];
    const int diag = boxes_[k].diagonal();
    for (int label = lo; label <= hi && !stopped_; ++label) {
      const auto l = static_cast<std::size_t>(label);
      if (count_[l] > 0) {
        const int order = profile_.order(label);
        if (order == 0 || floor_mod(diag - first_diag_[l], order) != 0) continue;
      } else {
        first_diag_[l] = diag;
        ++distinct_;
      }
      ++count_[l];
      labels_[k] = label;
      if (!prune(distinct_)) dfs(k + 1, leaf, prune);
      --count_[l];
      if (count_[l] == 0) --distinct_;
    }
  }

  Partition lambda_;
  TorsionProfile profile_;
  int g_;
  std::vector<Box> boxes_;
  std::vector<int> left_, below_, steps_;
  std::vector<int> labels_;
  std::vector<int> count_, first_diag_;
  int distinct_ = 0;
  bool stopped_ = false;
};

constexpr auto kNoPrune = [](int) { return false; };

}  // namespace

void for_each_tableau(const Partition& lambda, const TorsionProfile& m, const TableauVisitor& visit) {
  TableauSearch search(lambda, m);
  search.run([&] { return visit(search.current()); }, kNoPrune);
}

std::vector<DisplacementTableau> enumerate_tableaux(const Partition& lambda, const TorsionProfile& m) {
  std::vector<DisplacementTableau> out;
  for_each_tableau(lambda, m, [&](const DisplacementTableau& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::size_t count_tableaux(const Partition& lambda, const TorsionProfile& m) {
  TableauSearch search(lambda, m);
  std::size_t n = 0;
  search.run(
      [&] {
        ++n;
        return true;
      },
      kNoPrune);
  return n;
}

std::optional<DisplacementTableau> min_distinct_tableau(const Partition& lambda, const TorsionProfile& m) {
  TableauSearch search(lambda, m);
  // Labels strictly increase along any right/up path, so the longest such
  // path bounds the answer from below.
  int floor_bound = 0;
  for (const Box& b : lambda.boxes()) floor_bound = std::max(floor_bound, b.x + b.y - 1);
  int best = m.genus() + 1;
  std::optional<DisplacementTableau> best_tableau;
  search.run(
      [&] {
        if (search.distinct() < best) {
          best = search.distinct();
          best_tableau = search.current();
        }
        return best > floor_bound;
      },
      [&](int distinct) { return distinct >= best; });
  return best_tableau;
}

std::optional<int> min_distinct_symbols(const Partition& lambda, const TorsionProfile& m) {
  auto t = min_distinct_tableau(lambda, m);
  if (!t) return std::nullopt;
  return t->distinct_symbols();
}

std::optional<DisplacementTableau> find_repeating_tableau(const Partition& lambda, const TorsionProfile& m) {
  TableauSearch search(lambda, m);
  std::optional<DisplacementTableau> found;
  search.run(
      [&] {
        if (search.repeated()) {
          found = search.current();
          return false;
        }
        return true;
      },
      kNoPrune);
  return found;
}

std::vector<Partition> assemble(const DisplacementTableau& t, const std::vector<ResidueSet>& sets) {
  const int g = t.alphabet();
  if (sets.size() != static_cast<std::size_t>(g)) {
    throw std::invalid_argument("assemble needs one residue set per symbol: expected " + std::to_string(g) + ", got " +
                                std::to_string(sets.size()));
  }
  for (const Box& b : t.shape().boxes()) {
    const int label = t.at(b);
    if (!sets[static_cast<std::size_t>(label - 1)].contains(b.diagonal())) {
      throw std::invalid_argument("box (" + std::to_string(b.x) + "," + std::to_string(b.y) + ") with label " +
                                  std::to_string(label) + " has diagonal " + std::to_string(b.diagonal()) +
                                  " outside S_" + std::to_string(label) + " = " +
                                  sets[static_cast<std::size_t>(label - 1)].str());
    }
  }
  std::vector<Partition> chain;
  chain.reserve(sets.size() + 1);
  chain.emplace_back();
  for (const ResidueSet& s : sets) chain.push_back(disp_plus(chain.back(), s));
  return chain;
}

}  // namespace bnchain
