#include <doctest.h>

#include <algorithm>
#include <set>

#include "bnchain/brill_noether.hpp"
#include "bnchain/divisor.hpp"
#include "bnchain/sampling.hpp"

using namespace bnchain;

namespace {

ChainSpec abstract_chain(int g, std::vector<int> orders, std::optional<int> m1 = std::nullopt) {
  return ChainSpec::abstract(TorsionProfile(g, std::move(orders), m1));
}

std::vector<std::int64_t> fixed_values(const TorusDescriptor& t) {
  std::vector<std::int64_t> out;
  for (const auto& c : t.cycles) out.push_back(c.fixed ? c.z : 999);
  return out;
}

}  // namespace

TEST_CASE("components of the generic g = 4 locus W^(2,2)") {
  const auto comps = components(Partition{2, 2}, abstract_chain(4, {0, 0, 0}));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].torus.dimension() == 0);
  CHECK(comps[1].torus.dimension() == 0);
  CHECK(fixed_values(comps[0].torus) == std::vector<std::int64_t>{0, 1, -1, 0});
  CHECK(fixed_values(comps[1].torus) == std::vector<std::int64_t>{0, -1, 1, 0});
  CHECK(comps[0].stable);
}

TEST_CASE("components with m_2 = 2") {
  const auto comps = components(Partition{2, 2}, abstract_chain(4, {2, 0, 0}));
  REQUIRE(comps.size() == 4);
  std::multiset<int> dims;
  for (const auto& c : comps) dims.insert(c.torus.dimension());
  CHECK(dims == std::multiset<int>{0, 0, 1, 1});
  for (const auto& c : comps) {
    if (c.tableau.rows() == std::vector<std::vector<int>>{{1, 2}, {2, 4}}) {
      CHECK(c.torus.free_cycles() == std::vector<int>{3});
      CHECK_FALSE(c.stable);
    }
    if (c.tableau.rows() == std::vector<std::vector<int>>{{1, 2}, {2, 3}}) {
      CHECK(c.torus.free_cycles() == std::vector<int>{4});
    }
  }
  // The 0-dimensional torus (0,1,-1,0) has z_2 = 1, contained in the torus of [1,2/2,4].
  const auto maximal = maximal_components(comps);
  CHECK(maximal.size() < comps.size());
  for (const auto& c : maximal) CHECK(c.torus.dimension() == 1);
}

TEST_CASE("hyperelliptic g = 3") {
  const auto comps = components(Partition{2, 2}, abstract_chain(3, {2, 2}));
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].torus.dimension() == 0);
  CHECK(fixed_values(comps[0].torus) == std::vector<std::int64_t>{0, 1, 0});  // -1 = 1 mod 2
}

TEST_CASE("dimension") {
  CHECK(dimension(Partition{2, 2}, abstract_chain(4, {0, 0, 0})) == 0);
  CHECK(dimension(Partition{2, 2}, abstract_chain(4, {2, 0, 0})) == 1);
  CHECK_FALSE(dimension(Partition{2, 2}, abstract_chain(3, {0, 0})).has_value());
  for (int g = 1; g <= 6; ++g) {
    const ChainSpec spec = abstract_chain(g, std::vector<int>(static_cast<std::size_t>(g - 1), 0));
    for (const auto& lambda : partitions_up_to(g + 1)) {
      const auto dim = dimension(lambda, spec);
      if (lambda.size() <= g) {
        CHECK(dim == g - lambda.size());
      } else {
        CHECK_FALSE(dim.has_value());
      }
      const auto comps = components(lambda, spec);
      CHECK(comps.empty() == !dim.has_value());
      int best = -1;
      for (const auto& c : comps) best = std::max(best, c.torus.dimension());
      if (dim) CHECK(best == *dim);
    }
  }
}

TEST_CASE("unmarked generality closed form") {
  CHECK(is_general_unmarked(TorsionProfile(4, {0, 0, 0})).general);
  const auto v = is_general_unmarked(TorsionProfile(4, {2, 0, 0}));
  CHECK_FALSE(v.general);
  CHECK(v.index == 2);
  CHECK(v.reason == "not general (unmarked): m_2=2 ≤ min(2,3)");
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->shape() == Partition{2, 2});
  CHECK(v.witness->boxes_with(2).size() == 2);
  CHECK(validate(*v.witness, TorsionProfile(4, {2, 0, 0})));
  CHECK(is_general_unmarked(TorsionProfile(5, {0, 0, 0, 2})).general);
  CHECK(is_general_unmarked(TorsionProfile(4, {0, 3, 0})).general);
}

TEST_CASE("marked generality closed form") {
  const auto v = is_general_marked(TorsionProfile(5, {0, 0, 0, 2}));
  CHECK_FALSE(v.general);
  CHECK(v.index == 5);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->shape() == Partition{2, 1});
  CHECK(validate(*v.witness, TorsionProfile(5, {0, 0, 0, 2})));
  CHECK_FALSE(is_general_marked(TorsionProfile(4, {0, 3, 0})).general);
  CHECK(is_general_marked(TorsionProfile(4, {0, 0, 0})).general);
}

TEST_CASE("closed-form witnesses are valid tableaux") {
  for (int g = 2; g <= 7; ++g) {
    for (int i = 2; i <= g; ++i) {
      for (int m = 2; m <= i; ++m) {
        std::vector<int> orders(static_cast<std::size_t>(g - 1), 0);
        orders[static_cast<std::size_t>(i - 2)] = m;
        const TorsionProfile profile(g, orders);
        const auto marked = is_general_marked(profile);
        REQUIRE(marked.witness.has_value());
        CHECK(validate(*marked.witness, profile));
        CHECK(marked.witness->has_repeated_symbol());
        const auto unmarked = is_general_unmarked(profile);
        if (unmarked.witness) {
          CHECK(validate(*unmarked.witness, profile));
          CHECK(unmarked.witness->has_repeated_symbol());
        }
      }
    }
  }
}

TEST_CASE("brute-force generality") {
  CHECK_FALSE(is_general_bruteforce(TorsionProfile(4, {2, 0, 0}), false, 8).general);
  // g = 2 has no interior cycles, so the unmarked chain is always general.
  CHECK(is_general_bruteforce(TorsionProfile(2, {0}), false, 4).general);
  CHECK(is_general_bruteforce(TorsionProfile(2, {2}), false, 4).general);
  CHECK(is_general_bruteforce(TorsionProfile(2, {0}), true, 4).general);
  CHECK_FALSE(is_general_bruteforce(TorsionProfile(2, {2}), true, 4).general);
  CHECK(is_general_bruteforce(TorsionProfile(4, {0, 3, 0}), false, 8).general);
  CHECK_FALSE(is_general_bruteforce(TorsionProfile(4, {0, 3, 0}), true, 8).general);
}

TEST_CASE("expected classes") {
  const auto c = expected_class(Partition{2, 2}, 4);
  CHECK(c.coefficient == Rational(1, 12));
  CHECK(c.expected_dim == 0);
  CHECK(c.syt_count == 2);
  CHECK(c.theta_power == 4);
  CHECK(expected_class(Partition{1}, 7).coefficient == Rational(1));
  CHECK(expected_class(Partition{1}, 7).expected_dim == 6);
  CHECK(expected_class(Partition{3, 1}, 4).syt_count == 3);
  CHECK(expected_class(Partition{3, 1}, 4).coefficient == Rational(1, 8));
}
