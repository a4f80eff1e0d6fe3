#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dtn/ingestion.hpp"
#include "dtn/temporal_metrics.hpp"
#include "dtn/trace_model.hpp"
#include "dtn/windowing.hpp"
#include "oracle/brute_force.hpp"

namespace dtn::testing {

inline std::string fixture(const std::string& name) { return std::string(DTN_FIXTURE_DIR) + "/" + name; }

inline ContactTrace load_fixture(const std::string& name, TraceFormat format = TraceFormat::Common) {
  return read_trace_file(fixture(name), format).trace;
}

inline NodeId id(std::uint64_t v) { return NodeId{v}; }

inline ContactEvent contact(std::uint64_t a, std::uint64_t b, Seconds start, Seconds end) {
  return {NodeId{a}, NodeId{b}, start, end};
}

// Nodes A..F are labels 1..6.
inline ContactTrace figure6_trace() {
  return ContactTrace({contact(1, 2, 100, 100), contact(3, 5, 400, 400), contact(5, 6, 450, 450),
                       contact(2, 4, 700, 700), contact(3, 4, 800, 800)});
}

inline SnapshotSequence figure6_snapshots() {
  return build_snapshots(figure6_trace(), AnalysisPeriod(0, 900), WindowConfig::make(300));
}

inline const std::vector<std::vector<std::int64_t>>& figure6_matrix() {
  static const std::vector<std::vector<std::int64_t>> m = {
      {0, 0, 2, 2, -1, -1},  {0, 0, 2, 2, -1, -1}, {-1, 1, 0, 1, 0, 0},
      {-1, 0, 0, 0, -1, -1}, {-1, 1, 0, 1, 0, 0},  {-1, 1, 0, 1, 0, 0}};
  return m;
}

inline oracle::Windows to_oracle(const SnapshotSequence& s) {
  oracle::Windows w;
  w.n = s.node_count();
  for (const auto& snap : s.windows()) w.edges.push_back(snap.edges);
  return w;
}

struct RandomTraceSpec {
  std::size_t max_nodes = 8;
  std::size_t max_windows = 6;
  // Each window gets a random spanning tree over its occurring nodes, so
  // every window's contact graph is connected.
  bool connected_windows = false;
};

// Random trace on a window grid of width 100 starting at 0. Every node in
// 0..n-1 is declared so N is fixed even for silent nodes.
struct RandomTrace {
  ContactTrace trace;
  AnalysisPeriod period{0, 1};
  Seconds width = 100.0;
  std::size_t n = 0;
  std::size_t windows = 0;
};

inline RandomTrace random_trace(std::mt19937_64& rng, const RandomTraceSpec& spec) {
  std::uniform_int_distribution<std::size_t> pick_n(2, spec.max_nodes);
  std::uniform_int_distribution<std::size_t> pick_w(1, spec.max_windows);
  RandomTrace out;
  out.n = pick_n(rng);
  out.windows = pick_w(rng);
  const Seconds w = out.width;
  std::vector<ContactEvent> events;
  std::uniform_real_distribution<double> offset(0.0, 1.0);
  auto instant_in = [&](std::size_t t) { return static_cast<double>(t) * w + 1.0 + offset(rng) * (w - 2.0); };
  for (std::size_t t = 0; t < out.windows; ++t) {
    if (spec.connected_windows) {
      std::vector<std::size_t> members;
      for (std::size_t v = 0; v < out.n; ++v) {
        if (std::bernoulli_distribution(0.6)(rng)) members.push_back(v);
      }
      std::shuffle(members.begin(), members.end(), rng);
      for (std::size_t i = 1; i < members.size(); ++i) {
        const auto parent = members[std::uniform_int_distribution<std::size_t>(0, i - 1)(rng)];
        const double at = instant_in(t);
        events.push_back(contact(members[i], parent, at, at));
      }
    } else {
      std::uniform_int_distribution<std::size_t> edges(0, out.n);
      std::uniform_int_distribution<std::size_t> node(0, out.n - 1);
      const auto count = edges(rng);
      for (std::size_t i = 0; i < count; ++i) {
        auto a = node(rng), b = node(rng);
        if (a == b) continue;
        const double at = instant_in(t);
        events.push_back(contact(a, b, at, at));
      }
    }
  }
  // A few contacts spanning a window boundary.
  if (out.windows > 1 && !spec.connected_windows) {
    std::uniform_int_distribution<std::size_t> node(0, out.n - 1);
    std::uniform_int_distribution<std::size_t> boundary(1, out.windows - 1);
    for (int i = 0; i < 2; ++i) {
      auto a = node(rng), b = node(rng);
      if (a == b) continue;
      const double edge = static_cast<double>(boundary(rng)) * w;
      events.push_back(contact(a, b, edge - 10.0, edge + 10.0));
    }
  }
  std::vector<NodeId> nodes;
  for (std::size_t v = 0; v < out.n; ++v) nodes.push_back(NodeId{v});
  const Seconds tmax = static_cast<double>(out.windows) * w;
  out.trace = ContactTrace(std::move(events), std::move(nodes), std::make_pair(0.0, tmax));
  out.period = AnalysisPeriod(0.0, tmax);
  return out;
}

inline SnapshotSequence snapshots_of(const RandomTrace& rt, Horizon h = Horizon::unlimited()) {
  return build_snapshots(rt.trace, rt.period, WindowConfig::make(rt.width, h));
}

}  // namespace dtn::testing
