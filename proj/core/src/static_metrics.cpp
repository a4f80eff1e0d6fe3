#include "dtn/static_metrics.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace dtn {

AggregatedGraph::AggregatedGraph(std::vector<NodeId> nodes,
                                 std::vector<std::pair<NodeId, NodeId>> edges)
    : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  adj_.resize(nodes_.size());
  for (auto& [x, y] : edges) {
    if (x == y) throw std::invalid_argument("self-loop on node " + to_string(x));
    if (y < x) std::swap(x, y);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const auto& [x, y] : edges) {
    auto find = [&](NodeId id) {
      auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
      if (it == nodes_.end() || *it != id) {
        throw std::invalid_argument("edge endpoint " + to_string(id) + " is not a node");
      }
      return static_cast<std::size_t>(it - nodes_.begin());
    };
    const auto i = find(x);
    const auto j = find(y);
    adj_[i].push_back(j);
    adj_[j].push_back(i);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
  edge_count_ = edges.size();
}

std::size_t AggregatedGraph::index_of(NodeId id) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
  if (it == nodes_.end() || *it != id) throw AnalysisError("unknown node id " + to_string(id));
  return static_cast<std::size_t>(it - nodes_.begin());
}

bool AggregatedGraph::has_edge(NodeId x, NodeId y) const {
  const auto i = index_of(x);
  const auto j = index_of(y);
  return std::binary_search(adj_[i].begin(), adj_[i].end(), j);
}

std::vector<std::pair<NodeId, NodeId>> AggregatedGraph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < adj_.size(); ++i) {
    for (std::size_t j : adj_[i]) {
      if (i < j) out.emplace_back(nodes_[i], nodes_[j]);
    }
  }
  return out;
}

AggregatedGraph aggregate(const ContactTrace& trace, const AnalysisPeriod& period) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (const auto& e : trace.events()) {
    if (e.end < period.t_min() || e.start > period.t_max() || e.a == e.b) continue;
    edges.emplace_back(e.a, e.b);
  }
  return AggregatedGraph({trace.nodes().begin(), trace.nodes().end()}, std::move(edges));
}

std::vector<std::optional<std::size_t>> bfs_distances(const AggregatedGraph& g, std::size_t source) {
  std::vector<std::optional<std::size_t>> dist(g.node_count());
  std::queue<std::size_t> queue;
  dist.at(source) = 0;
  queue.push(source);
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop();
    for (std::size_t v : g.neighbors(u)) {
      if (dist[v]) continue;
      dist[v] = *dist[u] + 1;
      queue.push(v);
    }
  }
  return dist;
}

namespace {

void require_edges(const AggregatedGraph& g) {
  if (g.edge_count() == 0) throw AnalysisError("aggregated graph has no edges");
}

}  // namespace

double static_average_distance(const AggregatedGraph& g) {
  require_edges(g);
  double sum = 0.0;
  std::size_t pairs = 0;
  for (std::size_t s = 0; s < g.node_count(); ++s) {
    const auto dist = bfs_distances(g, s);
    for (std::size_t t = 0; t < g.node_count(); ++t) {
      if (t == s || !dist[t]) continue;
      sum += static_cast<double>(*dist[t]);
      ++pairs;
    }
  }
  return sum / static_cast<double>(pairs);
}

std::size_t static_diameter(const AggregatedGraph& g) {
  require_edges(g);
  std::size_t best = 0;
  for (std::size_t s = 0; s < g.node_count(); ++s) {
    for (const auto& d : bfs_distances(g, s)) {
      if (d) best = std::max(best, *d);
    }
  }
  return best;
}

std::size_t degree(const AggregatedGraph& g, NodeId node) { return g.neighbors(g.index_of(node)).size(); }

CentralityScore degree_centrality(const AggregatedGraph& g, NodeId node) {
  const auto d = static_cast<double>(degree(g, node));
  const auto n = g.node_count();
  return {node, n > 1 ? d / static_cast<double>(n - 1) : 0.0};
}

std::vector<CentralityScore> degree_centrality_all(const AggregatedGraph& g) {
  std::vector<CentralityScore> out;
  for (NodeId id : g.nodes()) out.push_back(degree_centrality(g, id));
  return out;
}

namespace {

double closeness_at(const AggregatedGraph& g, std::size_t i) {
  const auto n = g.node_count();
  if (n < 2) return 0.0;
  double sum = 0.0;
  std::size_t reached = 0;
  for (const auto& d : bfs_distances(g, i)) {
    if (!d || *d == 0) continue;
    sum += static_cast<double>(*d);
    ++reached;
  }
  if (reached == 0) return 0.0;
  const double r = static_cast<double>(reached);
  return (r / static_cast<double>(n - 1)) * (r / sum);
}

// Brandes' accumulation over all sources; raw ordered-pair dependency sums.
std::vector<double> brandes(const AggregatedGraph& g) {
  const auto n = g.node_count();
  std::vector<double> score(n, 0.0);
  std::vector<std::size_t> order;
  std::vector<std::vector<std::size_t>> preds(n);
  std::vector<double> sigma(n), delta(n);
  std::vector<long long> dist(n);
  for (std::size_t s = 0; s < n; ++s) {
    order.clear();
    for (auto& p : preds) p.clear();
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    sigma[s] = 1.0;
    dist[s] = 0;
    std::queue<std::size_t> queue;
    queue.push(s);
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop();
      order.push_back(u);
      for (std::size_t v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push(v);
        }
        if (dist[v] == dist[u] + 1) {
          sigma[v] += sigma[u];
          preds[v].push_back(u);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const auto w = *it;
      for (std::size_t u : preds[w]) delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w]);
      if (w != s) score[w] += delta[w];
    }
  }
  return score;
}

void require_three(const AggregatedGraph& g) {
  if (g.node_count() < 3) throw AnalysisError("betweenness needs at least 3 nodes");
}

}  // namespace

CentralityScore closeness_centrality(const AggregatedGraph& g, NodeId node) {
  return {node, closeness_at(g, g.index_of(node))};
}

std::vector<CentralityScore> closeness_centrality_all(const AggregatedGraph& g) {
  std::vector<CentralityScore> out;
  for (std::size_t i = 0; i < g.node_count(); ++i) out.push_back({g.label(i), closeness_at(g, i)});
  return out;
}

std::vector<CentralityScore> betweenness_centrality_all(const AggregatedGraph& g) {
  require_three(g);
  const auto raw = brandes(g);
  const auto n = static_cast<double>(g.node_count());
  std::vector<CentralityScore> out;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    out.push_back({g.label(i), raw[i] / ((n - 1) * (n - 2))});
  }
  return out;
}

CentralityScore betweenness_centrality(const AggregatedGraph& g, NodeId node) {
  require_three(g);
  return betweenness_centrality_all(g).at(g.index_of(node));
}

}  // namespace dtn
