#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bnchain/partition.hpp"
#include "bnchain/rational.hpp"
#include "bnchain/sampling.hpp"
#include "bnchain/tableau.hpp"

using namespace bnchain;

TEST_CASE("rational arithmetic is exact and reduced") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational::parse(" -7/14 ") == Rational(-1, 2));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(-7, 2)).floor() == -4);
  CHECK(Rational(-1, 2).mod(Rational(3)) == Rational(5, 2));
  CHECK(Rational(7).mod(Rational(3, 2)) == Rational(1));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-3, 4).str() == "-3/4");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(INT64_MAX) + Rational(1), std::overflow_error);
}

TEST_CASE("partition construction and box view") {
  Partition p{2, 2};
  CHECK(p.contains({2, 2}));
  CHECK_FALSE(p.contains({3, 1}));
  CHECK(Partition{7, 6, 5, 1}.contains({1, 4}));
  CHECK(p.size() == 4);
  CHECK(Partition(std::vector<int>{3, 1, 0, 0}) == Partition{3, 1});
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
  std::vector<Box> expected{{1, 1}, {2, 1}, {1, 2}, {2, 2}};
  CHECK(p.boxes() == expected);
}

TEST_CASE("closure membership") {
  CHECK(Partition{}.closure_contains(0, 5));
  CHECK_FALSE(Partition{}.closure_contains(1, 1));
  CHECK(Partition{2, 2}.closure_contains(2, 1));
  CHECK(Partition{2, 2}.closure_contains(7, -1));
}

TEST_CASE("loose boxes") {
  CHECK(loose_boxes(Partition{7, 6, 5, 1}, ResidueSet::residue_class(1, 3)) == std::vector<Box>{{8, 1}, {2, 4}});
  CHECK(loose_boxes(Partition{2, 2}, ResidueSet::residue_class(2, 4)) == std::vector<Box>{{3, 1}, {1, 3}});
  CHECK(loose_boxes(Partition{}, ResidueSet::singleton(0)) == std::vector<Box>{{1, 1}});
  CHECK(loose_boxes(Partition{}, ResidueSet::singleton(1)).empty());
}

TEST_CASE("upward displacement") {
  CHECK(disp_plus(Partition{7, 6, 5, 1}, ResidueSet::residue_class(1, 3)) == Partition{8, 6, 5, 2});
  CHECK(disp_plus(Partition{}, ResidueSet::none()) == Partition{});
  CHECK(disp_plus(Partition{2, 2}, ResidueSet::residue_class(0, 3)) == Partition{2, 2});
  CHECK(disp_plus(Partition{}, ResidueSet::singleton(0)) == Partition{1});
}

TEST_CASE("residue sets") {
  CHECK(ResidueSet::residue_class(-1, 3).representative() == 2);
  CHECK(ResidueSet::residue_class(5, 0) == ResidueSet::singleton(5));
  CHECK(ResidueSet::residue_class(1, 3).contains(-2));
  CHECK_FALSE(ResidueSet::none().contains(0));
  CHECK_THROWS(ResidueSet::residue_class(0, -2));
}

TEST_CASE("hook lengths and SYT counts") {
  CHECK(hook_length(Partition{2, 2}, {1, 1}) == 3);
  CHECK(hook_length(Partition{1}, {1, 1}) == 1);
  CHECK(hook_length(Partition{3, 1}, {1, 1}) == 4);
  CHECK_THROWS_AS(hook_length(Partition{2}, {1, 2}), std::invalid_argument);
  CHECK(count_syt(Partition{2, 2}) == 2);
  CHECK(count_syt(Partition{1}) == 1);
  CHECK(count_syt(Partition{3, 1}) == 3);
  CHECK(count_syt(Partition{}) == 1);
  CHECK(count_syt(Partition{3, 2, 1}) == 16);
  CHECK(count_syt(Partition{4, 4, 4}) == 462);
}

TEST_CASE("duals") {
  CHECK(dual(Partition{2, 2}) == Partition{2, 2});
  CHECK(dual(Partition{3, 1}) == Partition{2, 1, 1});
  CHECK(dual(Partition{}) == Partition{});
  for (const auto& p : partitions_up_to(8)) CHECK(dual(dual(p)) == p);
}

TEST_CASE("partitions from (g, r, d, alpha)") {
  const int g = 20;
  CHECK(partition_from_grda(g, 3, g - 3, {0, 2, 2, 3}) == Partition{9, 8, 8, 6});
  CHECK(partition_from_grda(4, 1, 3, {0, 0}) == Partition{2, 2});
  CHECK(partition_from_grda(3, 0, 3, {0}) == Partition{});
  CHECK_THROWS_AS(partition_from_grda(4, 1, 3, {0}), std::invalid_argument);
  CHECK_THROWS_AS(partition_from_grda(4, 1, 3, {2, 1}), std::invalid_argument);
  CHECK(rho(4, 1, 3, {0, 0}) == 0);
  CHECK(rho(3, 0, 1, {1}) == 0);
  for (int h = 1; h < 8; ++h) CHECK(rho(h, 0, h - 1, {0}) == h - 1);
}

TEST_CASE("rho equals g minus |lambda|") {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int g = static_cast<int>(rng.uniform(0, 12));
    const int r = static_cast<int>(rng.uniform(0, 3));
    const int d = static_cast<int>(rng.uniform(r, g + r));
    std::vector<int> alpha(static_cast<std::size_t>(r + 1));
    for (auto& a : alpha) a = static_cast<int>(rng.uniform(0, 3));
    std::sort(alpha.begin(), alpha.end());
    const Partition lambda = partition_from_grda(g, r, d, alpha);
    const int sum = std::accumulate(alpha.begin(), alpha.end(), 0);
    CHECK(lambda.size() == (r + 1) * (g - d + r) + sum);
    CHECK(rho(g, r, d, alpha) == g - lambda.size());
  }
}

TEST_CASE("partition listings") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(8).size() == 22);
  CHECK(partitions_up_to(4).size() == 1 + 1 + 2 + 3 + 5);
}

TEST_CASE("disp_plus output is a partition containing its input") {
  Rng rng(11);
  const auto shapes = partitions_up_to(12);
  for (int trial = 0; trial < 500; ++trial) {
    const Partition& p = rng.pick(shapes);
    const std::int64_t m = rng.uniform(0, 4);
    const ResidueSet s = m == 1 ? ResidueSet::none() : ResidueSet::residue_class(rng.uniform(-4, 4), m);
    const Partition q = disp_plus(p, s);
    CHECK(p.is_subset_of(q));
    CHECK(std::is_sorted(q.rows().rbegin(), q.rows().rend()));
    // Loose boxes of a residue class lie on distinct diagonals.
    const auto loose = loose_boxes(p, s);
    std::vector<int> diagonals;
    for (const auto& b : loose) diagonals.push_back(b.diagonal());
    std::sort(diagonals.begin(), diagonals.end());
    CHECK(std::adjacent_find(diagonals.begin(), diagonals.end()) == diagonals.end());
    CHECK(q.size() == p.size() + static_cast<int>(loose.size()));
  }
}

TEST_CASE("count_syt matches standard tableau enumeration") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& p : partitions_of(n)) {
      CHECK(count_tableaux(p, TorsionProfile::generic(std::max(1, n))) == count_syt(p));
    }
  }
}
