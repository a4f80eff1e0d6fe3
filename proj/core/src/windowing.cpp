#include "dtn/windowing.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace dtn {
namespace {

// Snaps quotients that are integers up to floating-point noise (0.3 / 0.1).
double snapped_quotient(double numerator, double denominator) {
  const double q = numerator / denominator;
  const double r = std::round(q);
  if (std::abs(q - r) <= 1e-9 * std::max(1.0, std::abs(q))) return r;
  return q;
}

}  // namespace

std::vector<PairAggregate> pair_aggregates(const ContactTrace& trace, const AnalysisPeriod& period) {
  std::map<std::pair<NodeId, NodeId>, PairAggregate> by_pair;
  for (const auto& e : trace.events()) {
    if (e.end < period.t_min() || e.start > period.t_max()) continue;
    const Seconds start = std::max(e.start, period.t_min());
    const Seconds end = std::min(e.end, period.t_max());
    auto& agg = by_pair[{e.a, e.b}];
    agg.a = e.a;
    agg.b = e.b;
    agg.total_contact_time += end - start;
    agg.occurrence_count += 1;
  }
  std::vector<PairAggregate> out;
  out.reserve(by_pair.size());
  for (auto& [key, agg] : by_pair) out.push_back(agg);
  return out;
}

Seconds average_meeting_time(std::span<const PairAggregate> aggregates) {
  Seconds total_time = 0.0;
  std::size_t total_count = 0;
  for (const auto& agg : aggregates) {
    total_time += agg.total_contact_time;
    total_count += agg.occurrence_count;
  }
  if (total_count == 0) throw AnalysisError("no contacts in period");
  return total_time / static_cast<double>(total_count);
}

Seconds recommend_window_for(Seconds average) {
  return 60.0 * (std::floor(average / 60.0) + 1.0);
}

Seconds recommend_window(std::span<const PairAggregate> aggregates) {
  return recommend_window_for(average_meeting_time(aggregates));
}

std::size_t window_count(const AnalysisPeriod& period, Seconds w) {
  if (!(w > 0.0)) throw std::invalid_argument("window width must be positive");
  const double q = snapped_quotient(period.length(), w);
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(q)));
}

SnapshotSequence::SnapshotSequence(std::vector<NodeId> labels, Seconds t_min, Seconds t_max,
                                   Seconds width, std::vector<Snapshot> windows)
    : labels_(std::move(labels)),
      t_min_(t_min),
      t_max_(t_max),
      width_(width),
      windows_(std::move(windows)),
      occurrences_(labels_.size()) {
  for (std::size_t k = 0; k < windows_.size(); ++k) {
    for (NodeIndex v : windows_[k].occurring) occurrences_.at(v).push_back(k);
  }
}

NodeIndex SnapshotSequence::index_of(NodeId id) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), id);
  if (it == labels_.end() || *it != id) {
    throw AnalysisError("unknown node id " + to_string(id));
  }
  return static_cast<NodeIndex>(it - labels_.begin());
}

std::size_t SnapshotSequence::window_of(Seconds t) const {
  if (windows_.empty() || t <= t_min_) return 0;
  const double q = std::floor(snapped_quotient(t - t_min_, width_));
  const auto last = windows_.size() - 1;
  if (q >= static_cast<double>(last)) return last;
  return static_cast<std::size_t>(q);
}

SnapshotSequence build_snapshots(const ContactTrace& trace, const AnalysisPeriod& period,
                                 const WindowConfig& cfg) {
  const std::size_t count = window_count(period, cfg.width);
  std::vector<NodeId> labels(trace.nodes().begin(), trace.nodes().end());
  SnapshotSequence shell(labels, period.t_min(), period.t_max(), cfg.width,
                         std::vector<Snapshot>(count));

  std::vector<std::set<Edge>> edges(count);
  for (const auto& e : trace.events()) {
    if (e.a == e.b || e.end < period.t_min() || e.start > period.t_max()) continue;
    const auto a = *trace.index_of(e.a);
    const auto b = *trace.index_of(e.b);
    const Edge edge = a < b ? Edge{a, b} : Edge{b, a};
    const auto first = shell.window_of(std::max(e.start, period.t_min()));
    const auto last = shell.window_of(std::min(e.end, period.t_max()));
    for (auto k = first; k <= last; ++k) edges[k].insert(edge);
  }

  std::vector<Snapshot> windows(count);
  for (std::size_t k = 0; k < count; ++k) {
    auto& snap = windows[k];
    snap.edges.assign(edges[k].begin(), edges[k].end());
    for (const auto& [x, y] : snap.edges) {
      snap.occurring.push_back(x);
      snap.occurring.push_back(y);
    }
    std::sort(snap.occurring.begin(), snap.occurring.end());
    snap.occurring.erase(std::unique(snap.occurring.begin(), snap.occurring.end()),
                         snap.occurring.end());
  }
  return SnapshotSequence(std::move(labels), period.t_min(), period.t_max(), cfg.width,
                          std::move(windows));
}

}  // namespace dtn
