#include <algorithm>
#include <limits>
#include <optional>
#include <utility>

#include "dtn/temporal_metrics.hpp"

namespace dtn {
namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

// Time-expanded journey graph for one (source, epoch).
//
// State (v, t, c): node v holds the message in window t after c handoffs
// inside window t. Moves are a free carry (v, t, *) -> (v, t+1, 0) and a
// handoff (u, t, c) -> (v, t, c+1) costing one hop. Occurrence semantics
// allows a single handoff per window between any two occurring nodes (more
// is never shorter); contact semantics follows the window's edges up to the
// horizon. `dist` is the fewest handoffs, `sigma` the number of such
// journeys.
class JourneyGraph {
 public:
  JourneyGraph(const SnapshotSequence& s, const BetweennessOptions& options)
      : s_(s),
        n_(s.node_count()),
        windows_(s.window_count()),
        occurrence_(options.semantics == PathSemantics::Occurrence),
        layers_(occurrence_ ? 1 : std::max<std::size_t>(1, options.horizon.cap(n_))),
        adj_(windows_) {
    if (!occurrence_) {
      for (std::size_t t = 0; t < windows_; ++t) {
        adj_[t].resize(n_);
        for (const auto& [x, y] : s.window(t).edges) {
          adj_[t][x].push_back(y);
          adj_[t][y].push_back(x);
        }
      }
    }
  }

  std::size_t node_count() const { return n_; }
  std::size_t window_count() const { return windows_; }
  std::size_t epoch() const { return epoch_; }
  NodeIndex source() const { return source_; }

  // Stops after the first window in which every node holds the message;
  // later windows cannot change arrivals or shortest journeys.
  void run_forward(NodeIndex source, std::size_t epoch) {
    source_ = source;
    epoch_ = epoch;
    dist_.clear();
    sigma_.clear();
    reached_.assign(n_, 0);
    std::size_t reached = 0;
    const std::size_t block = (layers_ + 1) * n_;
    for (std::size_t t = epoch; t < windows_; ++t) {
      dist_.resize(dist_.size() + block, kUnset);
      sigma_.resize(sigma_.size() + block, 0.0);
      end_ = t + 1;
      if (t == epoch) {
        dist_[id(source, t, 0)] = 0;
        sigma_[id(source, t, 0)] = 1.0;
      } else {
        carry_into(t);
      }
      if (occurrence_) {
        occurrence_handoffs(t);
      } else {
        contact_handoffs(t);
      }
      for (NodeIndex v = 0; v < n_; ++v) {
        if (!reached_[v] && best_in_window(v, t).first != kUnset) {
          reached_[v] = 1;
          ++reached;
        }
      }
      if (reached == n_) break;
    }
  }

  struct Arrival {
    std::size_t window = kUnset;
    std::size_t hops = kUnset;
    double count = 0.0;
  };

  // First window in which each node holds the message, with the fewest
  // handoffs there and the number of such journeys.
  std::vector<Arrival> arrivals() const {
    std::vector<Arrival> out(n_);
    for (std::size_t t = epoch_; t < end_; ++t) {
      for (NodeIndex v = 0; v < n_; ++v) {
        if (out[v].window != kUnset) continue;
        const auto [hops, count] = best_in_window(v, t);
        if (hops != kUnset) out[v] = {t, hops, count};
      }
    }
    return out;
  }

  // Brandes-style accumulation. `final_weight[v]` is 1/|S_{source,v}| when
  // this epoch contributes shortest journeys to v (0 otherwise); arrival
  // windows come from arrivals(). Adds to `held[i]` the number of
  // (journey, window) pairs in which i is an intermediate holder, weighted
  // by the final weight of the journey's target.
  void accumulate(const std::vector<Arrival>& arrival, const std::vector<double>& final_weight,
                  std::vector<double>& held) {
    std::vector<double> own(dist_.size(), 0.0);
    for (NodeIndex v = 0; v < n_; ++v) {
      if (final_weight[v] == 0.0 || arrival[v].window == kUnset) continue;
      for (std::size_t c = 0; c <= layers_; ++c) {
        const auto x = id(v, arrival[v].window, c);
        if (dist_[x] == arrival[v].hops) own[x] = final_weight[v];
      }
    }
    std::vector<double> g(dist_.size(), 0.0);
    for (std::size_t t = end_; t-- > epoch_;) {
      for (std::size_t c = layers_ + 1; c-- > 0;) {
        for (NodeIndex v = 0; v < n_; ++v) {
          const auto x = id(v, t, c);
          if (dist_[x] == kUnset) continue;
          double total = own[x];
          if (t + 1 < end_ && dist_[id(v, t + 1, 0)] == dist_[x]) total += g[id(v, t + 1, 0)];
          if (!occurrence_ && c < layers_) {
            for (NodeIndex w : adj_[t][v]) {
              const auto y = id(w, t, c + 1);
              if (dist_[y] == dist_[x] + 1) total += g[y];
            }
          }
          g[x] = total;
        }
        if (occurrence_ && c == 0) occurrence_backflow(t, g);
      }
    }
    for (std::size_t x = 0; x < dist_.size(); ++x) {
      if (dist_[x] == kUnset) continue;
      const NodeIndex v = x % n_;
      if (v == source_) continue;
      held[v] += sigma_[x] * (g[x] - own[x]);
    }
  }

  // One fewest-handoff journey to `target`: the source at the epoch, then
  // each receiver with the window it received the message in.
  std::vector<std::pair<NodeIndex, std::size_t>> trace_back(NodeIndex target, const Arrival& a) const {
    std::vector<std::pair<NodeIndex, std::size_t>> hops;
    std::size_t c = 0;
    while (dist_[id(target, a.window, c)] != a.hops) ++c;
    NodeIndex v = target;
    std::size_t t = a.window;
    while (!(v == source_ && t == epoch_ && c == 0)) {
      const auto d = dist_[id(v, t, c)];
      if (c == 0) {
        // Carried in from the previous window.
        std::size_t pc = 0;
        while (dist_[id(v, t - 1, pc)] != d) ++pc;
        --t;
        c = pc;
        continue;
      }
      NodeIndex prev = n_;
      if (occurrence_) {
        for (NodeIndex u : s_.window(t).occurring) {
          if (u != v && dist_[id(u, t, 0)] + 1 == d) {
            prev = u;
            break;
          }
        }
      } else {
        for (NodeIndex u : adj_[t][v]) {
          if (dist_[id(u, t, c - 1)] + 1 == d) {
            prev = u;
            break;
          }
        }
      }
      hops.emplace_back(v, t);  // v received the message in window t
      v = prev;
      --c;
    }
    hops.emplace_back(source_, epoch_);
    std::reverse(hops.begin(), hops.end());
    return hops;
  }

 private:
  std::size_t id(NodeIndex v, std::size_t t, std::size_t c) const {
    return ((t - epoch_) * (layers_ + 1) + c) * n_ + v;
  }

  std::pair<std::size_t, double> best_in_window(NodeIndex v, std::size_t t) const {
    std::size_t best = kUnset;
    double count = 0.0;
    for (std::size_t c = 0; c <= layers_; ++c) {
      const auto x = id(v, t, c);
      if (dist_[x] < best) {
        best = dist_[x];
        count = sigma_[x];
      } else if (dist_[x] == best && best != kUnset) {
        count += sigma_[x];
      }
    }
    return {best, count};
  }

  void relax(std::size_t from, std::size_t to) {
    if (dist_[from] == kUnset) return;
    const auto d = dist_[from] + 1;
    if (d < dist_[to]) {
      dist_[to] = d;
      sigma_[to] = sigma_[from];
    } else if (d == dist_[to]) {
      sigma_[to] += sigma_[from];
    }
  }

  void carry_into(std::size_t t) {
    for (NodeIndex v = 0; v < n_; ++v) {
      const auto [best, count] = best_in_window(v, t - 1);
      dist_[id(v, t, 0)] = best;
      sigma_[id(v, t, 0)] = count;
    }
  }

  // Smallest and second-smallest distinct handoff counts among the current
  // holders of an occurrence window, with the journey totals for each.
  struct GroupMinimum {
    std::size_t first = kUnset, second = kUnset;
    double first_sigma = 0.0, second_sigma = 0.0;
    std::size_t first_members = 0;
  };

  GroupMinimum group_minimum(std::size_t t) const {
    GroupMinimum m;
    for (NodeIndex u : s_.window(t).occurring) {
      const auto x = id(u, t, 0);
      const auto d = dist_[x];
      if (d == kUnset) continue;
      if (d < m.first) {
        m.second = m.first;
        m.second_sigma = m.first_sigma;
        m.first = d;
        m.first_sigma = sigma_[x];
        m.first_members = 1;
      } else if (d == m.first) {
        m.first_sigma += sigma_[x];
        ++m.first_members;
      } else if (d < m.second) {
        m.second = d;
        m.second_sigma = sigma_[x];
      } else if (d == m.second) {
        m.second_sigma += sigma_[x];
      }
    }
    return m;
  }

  void occurrence_handoffs(std::size_t t) {
    const auto m = group_minimum(t);
    if (m.first == kUnset) return;
    for (NodeIndex v : s_.window(t).occurring) {
      const auto x0 = id(v, t, 0);
      const auto x1 = id(v, t, 1);
      // Best holder other than v itself.
      std::size_t d = m.first;
      double count = m.first_sigma;
      if (dist_[x0] == m.first) {
        if (m.first_members > 1) {
          count -= sigma_[x0];
        } else {
          d = m.second;
          count = m.second_sigma;
        }
      }
      if (d == kUnset) continue;
      dist_[x1] = d + 1;
      sigma_[x1] = count;
    }
  }

  void contact_handoffs(std::size_t t) {
    for (std::size_t c = 0; c < layers_; ++c) {
      for (NodeIndex u = 0; u < n_; ++u) {
        const auto from = id(u, t, c);
        if (dist_[from] == kUnset) continue;
        for (NodeIndex w : adj_[t][u]) relax(from, id(w, t, c + 1));
      }
    }
  }

  // g(u, t, 0) += sum of g(v, t, 1) over tight handoffs u -> v, v != u.
  void occurrence_backflow(std::size_t t, std::vector<double>& g) const {
    const auto& occ = s_.window(t).occurring;
    // Receivers grouped by their handoff count (at most two distinct values).
    std::vector<std::pair<std::size_t, double>> by_dist;
    for (NodeIndex v : occ) {
      const auto y = id(v, t, 1);
      if (dist_[y] == kUnset) continue;
      auto it = std::find_if(by_dist.begin(), by_dist.end(),
                             [&](const auto& p) { return p.first == dist_[y]; });
      if (it == by_dist.end()) {
        by_dist.emplace_back(dist_[y], g[y]);
      } else {
        it->second += g[y];
      }
    }
    if (by_dist.empty()) return;
    for (NodeIndex u : occ) {
      const auto x = id(u, t, 0);
      if (dist_[x] == kUnset) continue;
      const auto want = dist_[x] + 1;
      auto it = std::find_if(by_dist.begin(), by_dist.end(),
                             [&](const auto& p) { return p.first == want; });
      if (it == by_dist.end()) continue;
      double flow = it->second;
      const auto self = id(u, t, 1);
      if (dist_[self] == want) flow -= g[self];
      g[x] += flow;
    }
  }

  const SnapshotSequence& s_;
  std::size_t n_;
  std::size_t windows_;
  bool occurrence_;
  std::size_t layers_;
  std::vector<std::vector<std::vector<NodeIndex>>> adj_;

  NodeIndex source_ = 0;
  std::size_t epoch_ = 0;
  std::size_t end_ = 0;
  std::vector<char> reached_;
  std::vector<std::size_t> dist_;
  std::vector<double> sigma_;
};

struct EpochChoice {
  std::size_t distance = kUnset;
  std::size_t hops = kUnset;
  double total = 0.0;             // |S_jk|
  std::vector<std::size_t> epochs;  // positions into the source's occurrences
};

// Shortest-journey bookkeeping for one source over all of its epochs.
std::vector<EpochChoice> choose_epochs(JourneyGraph& graph, NodeIndex source,
                                       std::span<const std::size_t> epochs,
                                       std::vector<std::vector<JourneyGraph::Arrival>>& per_epoch) {
  const std::size_t n = graph.node_count();
  per_epoch.clear();
  for (std::size_t e : epochs) {
    graph.run_forward(source, e);
    per_epoch.push_back(graph.arrivals());
  }
  std::vector<EpochChoice> choice(n);
  if (epochs.empty()) return choice;
  for (NodeIndex k = 0; k < n; ++k) {
    if (k == source) continue;
    const auto first_arrival = per_epoch[0][k].window;
    if (first_arrival == kUnset) continue;
    auto& ch = choice[k];
    for (std::size_t p = 0; p < epochs.size(); ++p) {
      if (p > 0 && epochs[p] <= first_arrival) continue;
      const auto& a = per_epoch[p][k];
      if (a.window == kUnset) continue;
      const auto d = a.window - epochs[p];
      if (d < ch.distance || (d == ch.distance && a.hops < ch.hops)) {
        ch.distance = d;
        ch.hops = a.hops;
        ch.total = a.count;
        ch.epochs = {p};
      } else if (d == ch.distance && a.hops == ch.hops) {
        ch.total += a.count;
        ch.epochs.push_back(p);
      }
    }
  }
  return choice;
}

}  // namespace

std::vector<CentralityScore> temporal_betweenness_all(const SnapshotSequence& snapshots,
                                                      const BetweennessOptions& options) {
  const std::size_t n = snapshots.node_count();
  if (n < 3) throw AnalysisError("temporal betweenness needs at least 3 nodes");
  const std::size_t windows = snapshots.window_count();

  JourneyGraph graph(snapshots, options);
  std::vector<double> held(n, 0.0);
  std::vector<std::vector<JourneyGraph::Arrival>> per_epoch;

  for (NodeIndex source = 0; source < n; ++source) {
    const auto epochs = snapshots.occurrences(source);
    const auto choice = choose_epochs(graph, source, epochs, per_epoch);
    for (std::size_t p = 0; p < epochs.size(); ++p) {
      std::vector<double> weight(n, 0.0);
      bool any = false;
      for (NodeIndex k = 0; k < n; ++k) {
        const auto& ch = choice[k];
        if (std::find(ch.epochs.begin(), ch.epochs.end(), p) == ch.epochs.end()) continue;
        weight[k] = 1.0 / ch.total;
        any = true;
      }
      if (!any) continue;
      graph.run_forward(source, epochs[p]);
      graph.accumulate(per_epoch[p], weight, held);
    }
  }

  const double norm = static_cast<double>(windows) * static_cast<double>(n - 1) *
                      static_cast<double>(n - 2);
  std::vector<CentralityScore> out;
  out.reserve(n);
  for (NodeIndex v = 0; v < n; ++v) out.push_back({snapshots.label(v), held[v] / norm});
  return out;
}

CentralityScore temporal_betweenness(const SnapshotSequence& snapshots, NodeId node,
                                     const BetweennessOptions& options) {
  const auto index = snapshots.index_of(node);
  return temporal_betweenness_all(snapshots, options).at(index);
}

std::optional<TemporalPath> shortest_temporal_path(const SnapshotSequence& snapshots, NodeId from,
                                                   NodeId to, PathSemantics semantics,
                                                   const Horizon& horizon) {
  const NodeIndex source = snapshots.index_of(from);
  const NodeIndex target = snapshots.index_of(to);
  const auto epochs = snapshots.occurrences(source);
  if (source == target) {
    const std::size_t w = epochs.empty() ? 0 : epochs.front();
    return TemporalPath{{{from, w}}};
  }
  JourneyGraph graph(snapshots, BetweennessOptions{semantics, horizon});
  std::vector<std::vector<JourneyGraph::Arrival>> per_epoch;
  const auto choice = choose_epochs(graph, source, epochs, per_epoch);
  const auto& ch = choice[target];
  if (ch.epochs.empty()) return std::nullopt;
  const auto p = ch.epochs.front();
  graph.run_forward(source, epochs[p]);
  TemporalPath path;
  for (const auto& [v, t] : graph.trace_back(target, per_epoch[p][target])) {
    path.hops.push_back({snapshots.label(v), t});
  }
  return path;
}

}  // namespace dtn
