#include <algorithm>
#include <limits>
#include <optional>

#include "dtn/temporal_metrics.hpp"
#include "epoch_rule.hpp"

namespace dtn {
namespace {

constexpr std::size_t kNever = std::numeric_limits<std::size_t>::max();

bool occurs_in(const Snapshot& snap, NodeIndex v) {
  return std::binary_search(snap.occurring.begin(), snap.occurring.end(), v);
}

std::vector<std::vector<NodeIndex>> adjacency(const Snapshot& snap, std::size_t n) {
  std::vector<std::vector<NodeIndex>> adj(n);
  for (const auto& [x, y] : snap.edges) {
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  return adj;
}

// Forward occurrence-chain spread from `source` starting at window `epoch`.
std::optional<std::size_t> occurrence_arrival(const SnapshotSequence& s, NodeIndex source,
                                              NodeIndex target, std::size_t epoch) {
  std::vector<char> carrier(s.node_count(), 0);
  carrier[source] = 1;
  for (std::size_t t = epoch; t < s.window_count(); ++t) {
    const auto& occ = s.window(t).occurring;
    const bool touches = std::any_of(occ.begin(), occ.end(), [&](NodeIndex v) { return carrier[v]; });
    if (!touches) continue;
    for (NodeIndex v : occ) carrier[v] = 1;
    if (carrier[target]) return t;
  }
  return std::nullopt;
}

// Forward edge-respecting spread, at most `cap` hops inside each window.
std::optional<std::size_t> contact_arrival(const SnapshotSequence& s, std::size_t cap,
                                           NodeIndex source, NodeIndex target, std::size_t epoch) {
  const std::size_t n = s.node_count();
  std::vector<char> holds(n, 0);
  holds[source] = 1;
  std::vector<NodeIndex> frontier, next;
  for (std::size_t t = epoch; t < s.window_count(); ++t) {
    const auto& snap = s.window(t);
    if (snap.edges.empty()) continue;
    const auto adj = adjacency(snap, n);
    frontier.clear();
    for (NodeIndex v : snap.occurring) {
      if (holds[v]) frontier.push_back(v);
    }
    for (std::size_t hop = 0; hop < cap && !frontier.empty(); ++hop) {
      next.clear();
      for (NodeIndex u : frontier) {
        for (NodeIndex w : adj[u]) {
          if (!holds[w]) {
            holds[w] = 1;
            next.push_back(w);
          }
        }
      }
      frontier.swap(next);
    }
    if (holds[target]) return t;
  }
  return std::nullopt;
}

// Backward sweep: for every (node, occurrence window) the earliest window at
// which a message held by the node at the start of that window reaches the
// target. `spread` turns the per-node values carried from window t+1 into
// values at window t.
template <typename Spread>
TemporalDistanceMatrix matrix_by_backward_sweep(const SnapshotSequence& s, Spread&& spread) {
  const std::size_t n = s.node_count();
  const std::size_t windows = s.window_count();
  std::vector<TemporalDistance> entries(n * n, TemporalDistance::unreachable());
  std::vector<std::vector<std::size_t>> arrival_at(n);
  std::vector<std::size_t> next(n);

  for (NodeIndex target = 0; target < n; ++target) {
    std::fill(next.begin(), next.end(), kNever);
    for (NodeIndex v = 0; v < n; ++v) arrival_at[v].assign(s.occurrences(v).size(), kNever);
    std::vector<std::size_t> cursor(n);
    for (NodeIndex v = 0; v < n; ++v) cursor[v] = s.occurrences(v).size();

    for (std::size_t t = windows; t-- > 0;) {
      const auto& snap = s.window(t);
      if (snap.occurring.empty()) continue;
      spread(snap, t, target, next);
      for (NodeIndex v : snap.occurring) arrival_at[v][--cursor[v]] = next[v];
    }

    for (NodeIndex source = 0; source < n; ++source) {
      if (source == target) {
        entries[source * n + target] = TemporalDistance::reachable(0);
        continue;
      }
      const auto epochs = s.occurrences(source);
      const auto& arrivals = arrival_at[source];
      entries[source * n + target] = detail::min_over_epochs(
          epochs, [&](std::size_t e) -> std::optional<std::size_t> {
            const auto pos = static_cast<std::size_t>(
                std::lower_bound(epochs.begin(), epochs.end(), e) - epochs.begin());
            if (arrivals[pos] == kNever) return std::nullopt;
            return arrivals[pos];
          });
    }
  }
  std::vector<NodeId> labels(s.labels().begin(), s.labels().end());
  return TemporalDistanceMatrix(std::move(labels), std::move(entries));
}

}  // namespace

TemporalDistance temporal_distance_occurrence(const SnapshotSequence& snapshots, NodeId from, NodeId to) {
  const NodeIndex source = snapshots.index_of(from);
  const NodeIndex target = snapshots.index_of(to);
  if (source == target) return TemporalDistance::reachable(0);
  return detail::min_over_epochs(snapshots.occurrences(source), [&](std::size_t e) {
    return occurrence_arrival(snapshots, source, target, e);
  });
}

TemporalDistanceMatrix temporal_distance_matrix(const SnapshotSequence& snapshots) {
  return matrix_by_backward_sweep(
      snapshots, [](const Snapshot& snap, std::size_t t, NodeIndex target, std::vector<std::size_t>& next) {
        // Everyone occurring in the window shares the best continuation.
        std::size_t best = occurs_in(snap, target) ? t : kNever;
        for (NodeIndex v : snap.occurring) best = std::min(best, next[v]);
        for (NodeIndex v : snap.occurring) next[v] = best;
      });
}

TemporalDistance temporal_distance_exact(const SnapshotSequence& snapshots, const Horizon& horizon,
                                         NodeId from, NodeId to) {
  const NodeIndex source = snapshots.index_of(from);
  const NodeIndex target = snapshots.index_of(to);
  if (source == target) return TemporalDistance::reachable(0);
  const std::size_t cap = horizon.cap(snapshots.node_count());
  return detail::min_over_epochs(snapshots.occurrences(source), [&](std::size_t e) {
    return contact_arrival(snapshots, cap, source, target, e);
  });
}

TemporalDistance temporal_distance_exact(const ContactTrace& trace, const AnalysisPeriod& period,
                                         const WindowConfig& cfg, NodeId from, NodeId to) {
  return temporal_distance_exact(build_snapshots(trace, period, cfg), cfg.horizon, from, to);
}

TemporalDistanceMatrix exact_distance_matrix(const SnapshotSequence& snapshots, const Horizon& horizon) {
  const std::size_t n = snapshots.node_count();
  const std::size_t cap = horizon.cap(n);
  std::vector<std::size_t> scratch(n);
  return matrix_by_backward_sweep(
      snapshots, [&](const Snapshot& snap, std::size_t t, NodeIndex target, std::vector<std::size_t>& next) {
        if (occurs_in(snap, target)) next[target] = t;
        // `cap` rounds of min-propagation along the window's edges: a value
        // moves one hop per round.
        for (std::size_t round = 0; round < cap; ++round) {
          for (NodeIndex v : snap.occurring) scratch[v] = next[v];
          bool changed = false;
          for (const auto& [x, y] : snap.edges) {
            if (next[y] < scratch[x]) scratch[x] = next[y], changed = true;
            if (next[x] < scratch[y]) scratch[y] = next[x], changed = true;
          }
          if (!changed) break;
          for (NodeIndex v : snap.occurring) next[v] = scratch[v];
        }
      });
}

}  // namespace dtn
