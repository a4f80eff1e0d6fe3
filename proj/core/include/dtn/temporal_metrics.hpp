#pragma once

// Temporal distance, diameter, closeness and betweenness over a snapshot
// sequence.
//
// Two journey semantics are supported:
//
//  * Occurrence (the default, used by the matrix and reports): every node
//    with a contact in window t can exchange data with every other node that
//    has a contact in window t. A message spreads forward through windows
//    via any node occurring alongside a current holder.
//  * Contact: a message only moves along actual contact edges of a window,
//    at most `horizon` hops per window.
//
// Distances count windows, measured from an epoch of the source (a window
// in which the source has a contact). The first epoch is the source's
// first occurrence. Once the target has been reached from it at window a,
// every later occurrence of the source (> a) starts a fresh epoch, and the
// distance is the minimum over all of these epochs.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dtn/centrality.hpp"
#include "dtn/trace_model.hpp"
#include "dtn/windowing.hpp"

namespace dtn {

class TemporalDistance {
 public:
  static constexpr TemporalDistance unreachable() { return TemporalDistance(-1); }
  static constexpr TemporalDistance reachable(std::size_t hops) {
    return TemporalDistance(static_cast<std::int64_t>(hops));
  }
  // -1 encodes Unreachable.
  static TemporalDistance from_encoded(std::int64_t value);

  constexpr bool is_reachable() const { return value_ >= 0; }
  // Window hops; throws std::logic_error when unreachable.
  std::size_t hops() const;
  constexpr std::int64_t encoded() const { return value_; }

  friend constexpr bool operator==(TemporalDistance, TemporalDistance) = default;
  // Unreachable orders after every reachable distance.
  friend constexpr bool operator<(TemporalDistance l, TemporalDistance r) {
    if (!l.is_reachable()) return false;
    if (!r.is_reachable()) return true;
    return l.value_ < r.value_;
  }
  friend constexpr bool operator<=(TemporalDistance l, TemporalDistance r) { return !(r < l); }

 private:
  constexpr explicit TemporalDistance(std::int64_t v) : value_(v) {}
  std::int64_t value_;
};

std::string to_string(TemporalDistance d);

class TemporalDistanceMatrix {
 public:
  TemporalDistanceMatrix(std::vector<NodeId> labels, std::vector<TemporalDistance> entries);
  // Row-major grid of encoded values (-1 = unreachable). Throws
  // std::invalid_argument for a non-square grid or labels of the wrong size.
  static TemporalDistanceMatrix from_encoded(std::vector<NodeId> labels,
                                             const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t size() const { return labels_.size(); }
  std::span<const NodeId> labels() const { return labels_; }
  std::size_t index_of(NodeId id) const;

  TemporalDistance at(std::size_t from, std::size_t to) const { return entries_[from * size() + to]; }
  TemporalDistance at(NodeId from, NodeId to) const { return at(index_of(from), index_of(to)); }

  std::vector<std::vector<std::int64_t>> encoded() const;

  friend bool operator==(const TemporalDistanceMatrix&, const TemporalDistanceMatrix&) = default;

 private:
  std::vector<NodeId> labels_;
  std::vector<TemporalDistance> entries_;
};

// "[[0, 0, 2],\n [1, 0, -1],\n ...]" with -1 for unreachable pairs.
std::string format_matrix(const TemporalDistanceMatrix& matrix);

enum class PathSemantics { Occurrence, Contact };

// A witness journey: (node, window) hops with non-decreasing windows. The
// first hop is the source at its epoch, the last the target at arrival.
struct TemporalPath {
  struct Hop {
    NodeId node;
    std::size_t window = 0;
    friend bool operator==(const Hop&, const Hop&) = default;
  };
  std::vector<Hop> hops;
};

// Occurrence-list distance (Cases 1-4 with epoch restarts), one pair at a
// time. Throws AnalysisError for unknown node ids.
TemporalDistance temporal_distance_occurrence(const SnapshotSequence& snapshots, NodeId from, NodeId to);

// All-pairs occurrence-list distances. Computed with a backward
// earliest-arrival sweep per target; agrees with temporal_distance_occurrence.
TemporalDistanceMatrix temporal_distance_matrix(const SnapshotSequence& snapshots);

// Edge-respecting distance: the message follows contact edges, at most
// `horizon` hops per window.
TemporalDistance temporal_distance_exact(const SnapshotSequence& snapshots, const Horizon& horizon,
                                         NodeId from, NodeId to);
TemporalDistance temporal_distance_exact(const ContactTrace& trace, const AnalysisPeriod& period,
                                         const WindowConfig& cfg, NodeId from, NodeId to);
TemporalDistanceMatrix exact_distance_matrix(const SnapshotSequence& snapshots, const Horizon& horizon);

// Fewest-handoff journey among those achieving the distance, or nullopt.
std::optional<TemporalPath> shortest_temporal_path(const SnapshotSequence& snapshots, NodeId from,
                                                   NodeId to,
                                                   PathSemantics semantics = PathSemantics::Occurrence,
                                                   const Horizon& horizon = Horizon::unlimited());

// Number of ordered off-diagonal pairs with a finite distance.
std::size_t reachable_pair_count(const TemporalDistanceMatrix& matrix);

// w / (N (N-1)) * sum of finite off-diagonal distances. Unreachable pairs
// add nothing but stay in the denominator. Throws AnalysisError for N < 2.
Seconds average_temporal_distance(const TemporalDistanceMatrix& matrix, Seconds w);

struct TemporalDiameter {
  std::size_t hops = 0;
  Seconds seconds = 0.0;
  bool disconnected = false;  // no finite off-diagonal entry
};

TemporalDiameter temporal_diameter(const TemporalDistanceMatrix& matrix, Seconds w);

// Sum of finite distances from the node divided by W (N-1). Throws
// AnalysisError for N < 2 or W == 0.
CentralityScore temporal_closeness(const TemporalDistanceMatrix& matrix, std::size_t window_count,
                                   NodeId node);
std::vector<CentralityScore> temporal_closeness_all(const TemporalDistanceMatrix& matrix,
                                                    std::size_t window_count);

struct BetweennessOptions {
  PathSemantics semantics = PathSemantics::Occurrence;
  Horizon horizon = Horizon::unlimited();  // Contact semantics only
};

// Shortest temporal paths from j to k are the journeys reaching k at the
// distance above with the fewest handoffs. A node holds the message in every
// window from the one it receives it to the one it passes it on. The score
// averages, over all W windows, the per-window fraction
//   1/((N-1)(N-2)) * sum_{j,k} (paths on which i holds at t) / |S_jk|.
// Throws AnalysisError for N < 3.
std::vector<CentralityScore> temporal_betweenness_all(const SnapshotSequence& snapshots,
                                                      const BetweennessOptions& options = {});
CentralityScore temporal_betweenness(const SnapshotSequence& snapshots, NodeId node,
                                     const BetweennessOptions& options = {});

}  // namespace dtn
