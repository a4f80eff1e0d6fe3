#pragma once

// Baselines on the aggregated (static) graph: every pair that met at least
// once in the period becomes a plain undirected edge.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dtn/centrality.hpp"
#include "dtn/trace_model.hpp"

namespace dtn {

class AggregatedGraph {
 public:
  AggregatedGraph() = default;
  // Duplicate edges are collapsed; self-loops and unknown endpoints throw
  // std::invalid_argument.
  AggregatedGraph(std::vector<NodeId> nodes, std::vector<std::pair<NodeId, NodeId>> edges);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const NodeId> nodes() const { return nodes_; }
  NodeId label(std::size_t index) const { return nodes_.at(index); }
  // Throws AnalysisError for an unknown node.
  std::size_t index_of(NodeId id) const;

  bool has_edge(NodeId x, NodeId y) const;
  std::span<const std::size_t> neighbors(std::size_t index) const { return adj_.at(index); }

  // Edges as (min, max) label pairs, sorted.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

 private:
  std::vector<NodeId> nodes_;
  std::vector<std::vector<std::size_t>> adj_;
  std::size_t edge_count_ = 0;
};

// Node set is the trace's node set; contacts outside the period are ignored.
AggregatedGraph aggregate(const ContactTrace& trace, const AnalysisPeriod& period);

// Hop counts from `source` by index; nullopt for unreachable nodes.
std::vector<std::optional<std::size_t>> bfs_distances(const AggregatedGraph& g, std::size_t source);

// Mean shortest-path length over ordered reachable pairs. Throws
// AnalysisError for a graph without edges.
double static_average_distance(const AggregatedGraph& g);

// Longest finite shortest path. Throws AnalysisError without edges.
std::size_t static_diameter(const AggregatedGraph& g);

std::size_t degree(const AggregatedGraph& g, NodeId node);

// degree / (N-1).
CentralityScore degree_centrality(const AggregatedGraph& g, NodeId node);
std::vector<CentralityScore> degree_centrality_all(const AggregatedGraph& g);

// (N-1) / sum of distances on a connected graph. With unreachable nodes the
// value is scaled by the reachable fraction, r/(N-1) * r/sum, so it stays in
// [0, 1]. Isolated nodes score 0.
CentralityScore closeness_centrality(const AggregatedGraph& g, NodeId node);
std::vector<CentralityScore> closeness_centrality_all(const AggregatedGraph& g);

// sum over ordered pairs (s, t), s != i != t, of sigma_st(i) / sigma_st,
// divided by (N-1)(N-2). Throws AnalysisError for N < 3.
CentralityScore betweenness_centrality(const AggregatedGraph& g, NodeId node);
std::vector<CentralityScore> betweenness_centrality_all(const AggregatedGraph& g);

}  // namespace dtn
