#include "bnchain/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace bnchain {

FiniteGraph::FiniteGraph(int vertex_count) : adjacency_(static_cast<std::size_t>(vertex_count)) {}

int FiniteGraph::add_vertex() {
  adjacency_.emplace_back();
  return vertex_count() - 1;
}

void FiniteGraph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) throw std::out_of_range("edge endpoint");
  auto bump = [&](int a, int b) {
    auto& list = adjacency_[static_cast<std::size_t>(a)];
    for (auto& n : list) {
      if (n.vertex == b) {
        ++n.multiplicity;
        return;
      }
    }
    list.push_back({b, 1});
  };
  bump(u, v);
  bump(v, u);
  ++edge_count_;
}

int FiniteGraph::valence(int v) const {
  int total = 0;
  for (const auto& n : neighbors(v)) total += n.multiplicity;
  return total;
}

bool FiniteGraph::is_connected() const {
  if (vertex_count() == 0) return true;
  std::vector<char> seen(static_cast<std::size_t>(vertex_count()), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (const auto& n : neighbors(u)) {
      if (!seen[static_cast<std::size_t>(n.vertex)]) {
        seen[static_cast<std::size_t>(n.vertex)] = 1;
        ++reached;
        stack.push_back(n.vertex);
      }
    }
  }
  return reached == vertex_count();
}

std::int64_t degree(const ChipConfig& d) {
  std::int64_t total = 0;
  for (auto c : d) total += c;
  return total;
}

namespace {

Rational arc_position(const CyclePoint& p, const ChainSpec& spec) {
  const auto& c = spec.cycles()[static_cast<std::size_t>(p.cycle - 1)];
  return (p.xi * c.clockwise).mod(c.total);
}

std::int64_t as_count(const Rational& r) {
  if (!r.is_integer()) throw std::logic_error("length is not a whole number of segments");
  return r.num();
}

}  // namespace

std::optional<int> ChainModel::vertex_of(const CyclePoint& p, const ChainSpec& spec) const {
  const Rational k = arc_position(p, spec) * Rational(scale);
  if (!k.is_integer()) return std::nullopt;
  return cycle_vertices[static_cast<std::size_t>(p.cycle - 1)][static_cast<std::size_t>(k.num())];
}

ChainModel build_chain_model(const ChainSpec& spec, const std::vector<CyclePoint>& points, int subdivision) {
  if (!spec.is_metric()) throw std::invalid_argument("the chip-firing oracle needs a metric chain");
  if (subdivision < 1) throw std::invalid_argument("subdivision factor must be positive");
  const int g = spec.genus();
  const auto& cycles = spec.cycles();

  std::int64_t scale = 1;
  for (const auto& c : cycles) scale = lcm64(lcm64(scale, c.clockwise.den()), c.total.den());
  for (const auto& b : spec.bridges()) scale = lcm64(scale, b.den());
  for (const auto& p : points) scale = lcm64(scale, arc_position(p, spec).den());
  scale *= subdivision;
  for (const auto& c : cycles) {
    if (as_count(c.total * Rational(scale)) < 3) {
      scale *= 2;
      break;
    }
  }

  ChainModel model;
  model.scale = scale;
  FiniteGraph& graph = model.graph;
  std::vector<int> w_vertex(static_cast<std::size_t>(g));
  std::vector<int> v_vertex(static_cast<std::size_t>(g));
  auto bridge_length = [&](int i) {  // bridge i joins w_i to v_{i+1}
    return spec.bridges().empty() ? Rational(0) : spec.bridges()[static_cast<std::size_t>(i - 1)];
  };

  for (int i = 1; i <= g; ++i) {
    const auto& c = cycles[static_cast<std::size_t>(i - 1)];
    const std::int64_t n = as_count(c.total * Rational(scale));
    const std::int64_t v_pos = n - as_count(c.clockwise * Rational(scale));
    std::vector<int> ring(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k) {
      if (k == v_pos && i > 1 && bridge_length(i - 1).is_zero()) {
        ring[static_cast<std::size_t>(k)] = w_vertex[static_cast<std::size_t>(i - 2)];
      } else {
        ring[static_cast<std::size_t>(k)] = graph.add_vertex();
      }
    }
    for (std::int64_t k = 0; k < n; ++k) {
      graph.add_edge(ring[static_cast<std::size_t>(k)], ring[static_cast<std::size_t>((k + 1) % n)]);
    }
    w_vertex[static_cast<std::size_t>(i - 1)] = ring[0];
    v_vertex[static_cast<std::size_t>(i - 1)] = ring[static_cast<std::size_t>(v_pos)];
    model.cycle_vertices.push_back(std::move(ring));
  }
  for (int i = 1; i < g; ++i) {
    model.bridge_start.push_back(w_vertex[static_cast<std::size_t>(i - 1)]);
    const std::int64_t segments = as_count(bridge_length(i) * Rational(scale));
    if (segments == 0) continue;
    int prev = w_vertex[static_cast<std::size_t>(i - 1)];
    for (std::int64_t s = 1; s < segments; ++s) {
      int next = graph.add_vertex();
      graph.add_edge(prev, next);
      prev = next;
    }
    graph.add_edge(prev, v_vertex[static_cast<std::size_t>(i)]);
  }
  model.base = w_vertex[static_cast<std::size_t>(g - 1)];
  for (int i = 0; i < g; ++i) {
    model.rank_determining.push_back(v_vertex[static_cast<std::size_t>(i)]);
    model.rank_determining.push_back(w_vertex[static_cast<std::size_t>(i)]);
  }
  std::sort(model.rank_determining.begin(), model.rank_determining.end());
  model.rank_determining.erase(std::unique(model.rank_determining.begin(), model.rank_determining.end()),
                               model.rank_determining.end());
  return model;
}

ChipConfig chips_of(const ChainModel& model, const ChainDivisor& d, const ChainSpec& spec) {
  ChipConfig chips(static_cast<std::size_t>(model.graph.vertex_count()), 0);
  for (const auto& t : d.terms()) {
    int v = 0;
    if (const auto* p = std::get_if<CyclePoint>(&t.location)) {
      if (p->cycle < 1 || p->cycle > spec.genus()) throw std::invalid_argument("divisor point on a missing cycle");
      auto vertex = model.vertex_of(*p, spec);
      if (!vertex) throw std::invalid_argument("divisor point is not a vertex of the model");
      v = *vertex;
    } else {
      const int b = std::get<BridgePoint>(t.location).index;
      if (b < 1 || b >= spec.genus()) throw std::invalid_argument("divisor point on a missing bridge");
      v = model.bridge_start[static_cast<std::size_t>(b - 1)];
    }
    chips[static_cast<std::size_t>(v)] += t.mult;
  }
  chips[static_cast<std::size_t>(model.base)] += d.marked();
  return chips;
}

std::pair<ChainModel, ChipConfig> to_finite_graph(const ChainSpec& spec, const ChainDivisor& d, int subdivision) {
  std::vector<CyclePoint> points;
  for (const auto& t : d.terms()) {
    if (const auto* p = std::get_if<CyclePoint>(&t.location)) points.push_back(*p);
  }
  ChainModel model = build_chain_model(spec, points, subdivision);
  ChipConfig chips = chips_of(model, d, spec);
  return {std::move(model), std::move(chips)};
}

namespace {

std::vector<int> bfs_distance(const FiniteGraph& g, int q) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::deque<int> queue{q};
  dist[static_cast<std::size_t>(q)] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (const auto& n : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(n.vertex)] < 0) {
        dist[static_cast<std::size_t>(n.vertex)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(n.vertex);
      }
    }
  }
  return dist;
}

/// Runs Dhar's burning from q. Returns the unburnt set as a mask (all zero
/// when everything burns).
std::vector<char> unburnt_set(const FiniteGraph& g, const ChipConfig& d, int q) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<char> burnt(n, 0);
  std::vector<std::int64_t> heat(n, 0);
  std::vector<int> stack{q};
  burnt[static_cast<std::size_t>(q)] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (const auto& nb : g.neighbors(u)) {
      const auto w = static_cast<std::size_t>(nb.vertex);
      if (burnt[w]) continue;
      heat[w] += nb.multiplicity;
      if (heat[w] > d[w]) {
        burnt[w] = 1;
        stack.push_back(nb.vertex);
      }
    }
  }
  for (auto& b : burnt) b = !b;
  return burnt;
}

}  // namespace

ChipConfig dhar_reduce(const FiniteGraph& g, ChipConfig d, int q) {
  if (d.size() != static_cast<std::size_t>(g.vertex_count())) throw std::invalid_argument("chip vector size mismatch");
  const std::vector<int> dist = bfs_distance(g, q);
  const int depth = *std::max_element(dist.begin(), dist.end());
  if (std::find(dist.begin(), dist.end(), -1) != dist.end()) throw std::invalid_argument("graph is not connected");

  // Make d effective away from q: firing the ball of radius j sends chips
  // across to level j+1 only.
  for (int j = depth - 1; j >= 0; --j) {
    std::int64_t firings = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (dist[static_cast<std::size_t>(v)] != j + 1 || d[static_cast<std::size_t>(v)] >= 0) continue;
      std::int64_t inward = 0;
      for (const auto& nb : g.neighbors(v)) {
        if (dist[static_cast<std::size_t>(nb.vertex)] == j) inward += nb.multiplicity;
      }
      firings = std::max(firings, (-d[static_cast<std::size_t>(v)] + inward - 1) / inward);
    }
    if (firings == 0) continue;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (dist[static_cast<std::size_t>(v)] != j) continue;
      for (const auto& nb : g.neighbors(v)) {
        if (dist[static_cast<std::size_t>(nb.vertex)] == j + 1) {
          d[static_cast<std::size_t>(v)] -= firings * nb.multiplicity;
          d[static_cast<std::size_t>(nb.vertex)] += firings * nb.multiplicity;
        }
      }
    }
  }

  // Fire the unburnt set until everything burns.
  for (;;) {
    const std::vector<char> unburnt = unburnt_set(g, d, q);
    if (std::find(unburnt.begin(), unburnt.end(), 1) == unburnt.end()) break;
    std::int64_t times = std::numeric_limits<std::int64_t>::max();
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!unburnt[static_cast<std::size_t>(v)]) continue;
      std::int64_t out = 0;
      for (const auto& nb : g.neighbors(v)) {
        if (!unburnt[static_cast<std::size_t>(nb.vertex)]) out += nb.multiplicity;
      }
      if (out > 0) times = std::min(times, d[static_cast<std::size_t>(v)] / out);
    }
    if (times <= 0 || times == std::numeric_limits<std::int64_t>::max()) {
      throw std::logic_error("dhar_reduce: unburnt set cannot fire");
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (!unburnt[static_cast<std::size_t>(v)]) continue;
      for (const auto& nb : g.neighbors(v)) {
        if (!unburnt[static_cast<std::size_t>(nb.vertex)]) {
          d[static_cast<std::size_t>(v)] -= times * nb.multiplicity;
          d[static_cast<std::size_t>(nb.vertex)] += times * nb.multiplicity;
        }
      }
    }
  }
  return d;
}

bool is_reduced(const FiniteGraph& g, const ChipConfig& d, int q) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v != q && d[static_cast<std::size_t>(v)] < 0) return false;
  }
  const auto unburnt = unburnt_set(g, d, q);
  return std::find(unburnt.begin(), unburnt.end(), 1) == unburnt.end();
}

namespace {

struct ConfigHash {
  std::size_t operator()(const ChipConfig& c) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto v : c) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// r(D) = -1 if D is not equivalent to an effective divisor, otherwise
/// 1 + min over vertices v of r(D - v). Memoised on q-reduced representatives,
/// which are canonical for the class.
class RankSolver {
 public:
  RankSolver(const FiniteGraph& g, int q, std::vector<int> tests) : graph_(g), q_(q), tests_(std::move(tests)) {}

  int rank_of_reduced(const ChipConfig& d) {
    if (d[static_cast<std::size_t>(q_)] < 0) return -1;
    if (auto it = memo_.find(d); it != memo_.end()) return it->second;
    std::int64_t best = degree(d);
    for (std::size_t k = 0; k < tests_.size() && best > 0; ++k) {
      const int v = tests_[k];
      ChipConfig next = d;
      --next[static_cast<std::size_t>(v)];
      const int r = rank_of_reduced(dhar_reduce(graph_, std::move(next), q_));
      best = std::min<std::int64_t>(best, r + 1);
    }
    memo_.emplace(d, static_cast<int>(best));
    return static_cast<int>(best);
  }

 private:
  const FiniteGraph& graph_;
  int q_;
  std::vector<int> tests_;
  std::unordered_map<ChipConfig, int, ConfigHash> memo_;
};

}  // namespace

int bn_rank(const FiniteGraph& g, const ChipConfig& d, int q) {
  std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) all[static_cast<std::size_t>(v)] = v;
  return bn_rank(g, d, q, all);
}

int bn_rank(const FiniteGraph& g, const ChipConfig& d, int q, const std::vector<int>& test_vertices) {
  if (test_vertices.empty()) throw std::invalid_argument("bn_rank needs at least one test vertex");
  RankSolver solver(g, q, test_vertices);
  return solver.rank_of_reduced(dhar_reduce(g, d, q));
}

ChipConfig canonical_config(const FiniteGraph& g) {
  ChipConfig k(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) k[static_cast<std::size_t>(v)] = g.valence(v) - 2;
  return k;
}

CrossCheckReport cross_check(const ChainSpec& spec, const ChainDivisor& d, int subdivision) {
  CrossCheckReport report;
  report.standard = standard_form(d, spec);
  report.weierstrass = weierstrass_partition(report.standard, spec);
  report.rank_wp = rank(report.standard, spec);
  auto [model, chips] = to_finite_graph(spec, d, subdivision);
  report.vertex_count = model.graph.vertex_count();
  report.scale = model.scale;
  report.reduced = dhar_reduce(model.graph, chips, model.base);
  report.chips = std::move(chips);
  report.rank_oracle = bn_rank(model.graph, report.chips, model.base, model.rank_determining);
  report.match = report.rank_wp == report.rank_oracle;
  return report;
}

}  // namespace bnchain
