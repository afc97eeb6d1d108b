#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bnchain/chain.hpp"
#include "bnchain/divisor.hpp"

namespace bnchain {

/// Undirected multigraph without loops.
class FiniteGraph {
 public:
  struct Neighbor {
    int vertex;
    int multiplicity;
  };

  explicit FiniteGraph(int vertex_count = 0);

  int add_vertex();
  void add_edge(int u, int v);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return edge_count_; }
  /// First Betti number |E| - |V| + 1 (the graph is assumed connected).
  int genus() const { return edge_count_ - vertex_count() + 1; }
  int valence(int v) const;
  const std::vector<Neighbor>& neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }

  bool is_connected() const;

 private:
  std::vector<std::vector<Neighbor>> adjacency_;
  int edge_count_ = 0;
};

using ChipConfig = std::vector<std::int64_t>;

std::int64_t degree(const ChipConfig& d);

/// Uniform subdivision of a metric chain: every length is scaled by a common
/// denominator so that each unit segment becomes an edge.
struct ChainModel {
  FiniteGraph graph;
  int base = 0;  // vertex of w_g
  /// Number of edges per unit of length.
  std::int64_t scale = 1;
  /// cycle_vertices[i-1][k]: vertex k/scale units clockwise from w_i.
  std::vector<std::vector<int>> cycle_vertices;
  std::vector<int> bridge_start;  // bridge i begins at w_i
  /// The vertices v_i and w_i. They are the vertices of a loopless model of
  /// the chain, hence a rank-determining set.
  std::vector<int> rank_determining;

  /// Vertex carrying the point, or nullopt if it falls strictly inside an edge.
  std::optional<int> vertex_of(const CyclePoint& p, const ChainSpec& spec) const;
};

/// Builds the model with the coarsest common subdivision that puts every
/// vertex, every bridge end and every listed point on a vertex, refined by
/// `subdivision`, and with at least three edges on each cycle. Zero-length
/// bridges are contracted. Abstract chains are rejected.
ChainModel build_chain_model(const ChainSpec& spec, const std::vector<CyclePoint>& points = {}, int subdivision = 1);

ChipConfig chips_of(const ChainModel& model, const ChainDivisor& d, const ChainSpec& spec);

/// The finite graph model of (spec, D) together with D as a chip configuration.
std::pair<ChainModel, ChipConfig> to_finite_graph(const ChainSpec& spec, const ChainDivisor& d, int subdivision = 1);

/// The q-reduced divisor linearly equivalent to d.
ChipConfig dhar_reduce(const FiniteGraph& g, ChipConfig d, int q);

/// Effective away from q, and Dhar's burning from q consumes every vertex.
bool is_reduced(const FiniteGraph& g, const ChipConfig& d, int q);

/// Baker-Norine rank on the finite graph: r(D) >= k iff D - E is equivalent to
/// an effective divisor for every effective E of degree k.
int bn_rank(const FiniteGraph& g, const ChipConfig& d, int q = 0);

/// Same rank, testing only effective E supported on `test_vertices`, which
/// must form a rank-determining set.
int bn_rank(const FiniteGraph& g, const ChipConfig& d, int q, const std::vector<int>& test_vertices);

/// K_G(v) = valence(v) - 2.
ChipConfig canonical_config(const FiniteGraph& g);

struct CrossCheckReport {
  int rank_wp = -1;
  int rank_oracle = -1;
  bool match = false;
  // Intermediate state of both pipelines, kept for mismatch diagnostics.
  StandardForm standard;
  Partition weierstrass;
  int vertex_count = 0;
  std::int64_t scale = 1;
  ChipConfig chips;
  ChipConfig reduced;
};

/// Rank through the Weierstrass partition versus chip-firing on the
/// subdivided graph. Requires a metric chain.
CrossCheckReport cross_check(const ChainSpec& spec, const ChainDivisor& d, int subdivision = 1);

}  // namespace bnchain
