#include "bnchain/brill_noether.hpp"

#include <algorithm>
#include <stdexcept>

namespace bnchain {

int TorusDescriptor::dimension() const {
  return static_cast<int>(std::count_if(cycles.begin(), cycles.end(), [](const auto& c) { return !c.fixed; }));
}

std::vector<int> TorusDescriptor::free_cycles() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (!cycles[i].fixed) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

bool TorusDescriptor::contains(const TorusDescriptor& other) const {
  if (other.cycles.size() != cycles.size()) return false;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (!cycles[i].fixed) continue;
    if (!other.cycles[i].fixed || other.cycles[i].z != cycles[i].z) return false;
  }
  return true;
}

TorusDescriptor torus_of(const DisplacementTableau& t, const TorsionProfile& m) {
  TorusDescriptor out;
  out.cycles.resize(static_cast<std::size_t>(m.genus()));
  for (const Box& b : t.shape().boxes()) {
    const int i = t.at(b);
    auto& c = out.cycles[static_cast<std::size_t>(i - 1)];
    if (c.fixed) continue;
    c.fixed = true;
    c.modulus = m.order(i);
    c.z = c.modulus > 0 ? floor_mod(b.diagonal(), c.modulus) : b.diagonal();
  }
  return out;
}

std::vector<Component> components(const Partition& lambda, const ChainSpec& spec) {
  std::vector<Component> out;
  const TorsionProfile& m = spec.profile();
  for_each_tableau(lambda, m, [&](const DisplacementTableau& t) {
    out.push_back(Component{t, torus_of(t, m), !t.has_repeated_symbol()});
    return true;
  });
  return out;
}

std::vector<Component> maximal_components(std::vector<Component> all) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < all.size() && !dominated; ++j) {
      if (i == j || !all[j].torus.contains(all[i].torus)) continue;
      // Identical tori: keep the earliest.
      dominated = !(all[i].torus.contains(all[j].torus)) || j < i;
    }
    if (!dominated) keep.push_back(i);
  }
  std::vector<Component> out;
  for (std::size_t i : keep) out.push_back(std::move(all[i]));
  return out;
}

std::optional<int> dimension(const Partition& lambda, const ChainSpec& spec) {
  auto symbols = min_distinct_symbols(lambda, spec.profile());
  if (!symbols) return std::nullopt;
  return spec.genus() - *symbols;
}

namespace {

/// The labelling t(x,1) = x - m + i, t(x,2) = x + i - 1 on (m, m), or its
/// restriction to (m, 1); symbol i appears at (m,1) and (1,2).
DisplacementTableau repeat_witness(int i, int m, int g, bool rectangle) {
  std::vector<std::vector<int>> rows(2);
  for (int x = 1; x <= m; ++x) rows[0].push_back(x - m + i);
  const int top = rectangle ? m : 1;
  for (int x = 1; x <= top; ++x) rows[1].push_back(x + i - 1);
  return DisplacementTableau(std::move(rows), g);
}

}  // namespace

GeneralityVerdict is_general_unmarked(const TorsionProfile& m) {
  const int g = m.genus();
  for (int i = 2; i <= g - 1; ++i) {
    const int order = m.order(i);
    const int bound = std::min(i, g + 1 - i);
    if (order != 0 && order <= bound) {
      return GeneralityVerdict{false, i, repeat_witness(i, order, g, true),
                               "not general (unmarked): m_" + std::to_string(i) + "=" + std::to_string(order) +
                                   " ≤ min(" + std::to_string(i) + "," + std::to_string(g + 1 - i) + ")"};
    }
  }
  return GeneralityVerdict{true, std::nullopt, std::nullopt,
                           "general (unmarked): every m_i is 0 or exceeds min(i, g+1-i)"};
}

GeneralityVerdict is_general_marked(const TorsionProfile& m) {
  const int g = m.genus();
  for (int i = 2; i <= g; ++i) {
    const int order = m.order(i);
    if (order != 0 && order <= i) {
      return GeneralityVerdict{false, i, repeat_witness(i, order, g, false),
                               "not general (marked): m_" + std::to_string(i) + "=" + std::to_string(order) +
                                   " ≤ " + std::to_string(i)};
    }
  }
  return GeneralityVerdict{true, std::nullopt, std::nullopt, "general (marked): every m_i is 0 or exceeds i"};
}

GeneralityVerdict is_general_bruteforce(const TorsionProfile& m, bool marked, int size_bound) {
  const std::string kind = marked ? "marked" : "unmarked";
  std::vector<Partition> candidates;
  if (marked) {
    candidates = partitions_up_to(size_bound);
  } else {
    for (int n = 1; n <= size_bound; ++n) {
      for (int h = 1; h <= n; ++h) {
        if (n % h == 0) candidates.push_back(Partition(std::vector<int>(static_cast<std::size_t>(h), n / h)));
      }
    }
  }
  for (const Partition& lambda : candidates) {
    if (auto t = find_repeating_tableau(lambda, m)) {
      int repeated = 0;
      for (int s = 1; s <= m.genus() && repeated == 0; ++s) {
        if (t->boxes_with(s).size() > 1) repeated = s;
      }
      return GeneralityVerdict{false, repeated, *t,
                               "not general (" + kind + "): tableau on " + lambda.str() + " repeats symbol " +
                                   std::to_string(repeated)};
    }
  }
  return GeneralityVerdict{true, std::nullopt, std::nullopt,
                           "general (" + kind + "): no repeating tableau with at most " + std::to_string(size_bound) +
                               " boxes"};
}

ExpectedClass expected_class(const Partition& lambda, int genus) {
  ExpectedClass out;
  out.theta_power = lambda.size();
  Rational hooks(1);
  for (const Box& b : lambda.boxes()) hooks *= Rational(hook_length(lambda, b));
  out.coefficient = Rational(1) / hooks;
  out.expected_dim = genus - lambda.size();
  out.syt_count = count_syt(lambda);
  return out;
}

}  // namespace bnchain
