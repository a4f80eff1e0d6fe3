#include "dtn/report.hpp"

#include <algorithm>
#include <cstdio>

#include "dtn/ingestion.hpp"
#include "dtn/static_metrics.hpp"
#include "dtn/windowing.hpp"

namespace dtn {
namespace {

CentralityScore top_of(const std::vector<CentralityScore>& scores) {
  return rank_nodes(scores).front();
}

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

std::string score_text(const CentralityScore& s, bool full) {
  return "(" + to_string(s.node) + ", " + (full ? format_seconds(s.value) : fixed(s.value, 3)) + ")";
}

std::vector<std::string> row_values(const MetricsReport& r, bool full) {
  auto real = [&](double v) { return full ? format_seconds(v) : fixed(v, 2); };
  return {r.dataset_name,
          format_seconds(r.t_min),
          format_seconds(r.t_max),
          std::to_string(r.total_nodes),
          std::to_string(r.total_connections),
          std::to_string(r.total_timestamps),
          format_seconds(r.time_window),
          real(r.static_distance),
          real(r.average_temporal_distance),
          std::to_string(r.diameter),
          score_text(r.top_degree, full),
          score_text(r.top_betweenness, full),
          score_text(r.top_closeness, full),
          std::to_string(r.reachable_pairs),
          std::to_string(r.temporal_diameter_hops),
          format_seconds(r.temporal_diameter_seconds),
          score_text(r.top_temporal_closeness, full),
          score_text(r.top_temporal_betweenness, full),
          real(r.exact_average_temporal_distance),
          std::to_string(r.exact_reachable_pairs)};
}

}  // namespace

MetricsReport analyze(const ContactTrace& trace, const AnalysisPeriod& period,
                      const AnalysisOptions& options) {
  const ContactTrace clipped = clip_to_period(merge_overlapping_contacts(trace), period);
  const auto aggregates = pair_aggregates(clipped, period);
  const Seconds w = options.window ? *options.window : recommend_window(aggregates);
  if (clipped.empty()) throw AnalysisError("no contacts in period");
  if (clipped.node_count() < 2) throw AnalysisError("analysis needs at least 2 nodes");

  const auto cfg = WindowConfig::make(w, options.horizon);
  const auto snapshots = build_snapshots(clipped, period, cfg);
  const auto matrix = temporal_distance_matrix(snapshots);
  const auto exact = exact_distance_matrix(snapshots, options.horizon);
  const auto graph = aggregate(clipped, period);
  const std::size_t n = clipped.node_count();

  MetricsReport r;
  r.dataset_name = options.dataset_name;
  r.t_min = period.t_min();
  r.t_max = period.t_max();
  r.total_nodes = n;
  r.total_connections = clipped.events().size();
  r.total_timestamps = snapshots.window_count();
  r.time_window = w;
  r.static_distance = static_average_distance(graph);
  r.average_temporal_distance = average_temporal_distance(matrix, w);
  r.diameter = static_diameter(graph);
  r.top_degree = top_of(degree_centrality_all(graph));
  r.top_closeness = top_of(closeness_centrality_all(graph));

  r.reachable_pairs = reachable_pair_count(matrix);
  const auto td = temporal_diameter(matrix, w);
  r.temporal_diameter_hops = td.hops;
  r.temporal_diameter_seconds = td.seconds;
  r.top_temporal_closeness = top_of(temporal_closeness_all(matrix, snapshots.window_count()));
  r.exact_average_temporal_distance = average_temporal_distance(exact, w);
  r.exact_reachable_pairs = reachable_pair_count(exact);

  if (n >= 3) {
    r.top_betweenness = top_of(betweenness_centrality_all(graph));
    r.top_temporal_betweenness = top_of(temporal_betweenness_all(snapshots));
  } else {
    r.top_betweenness = {clipped.label(0), 0.0};
    r.top_temporal_betweenness = {clipped.label(0), 0.0};
  }
  return r;
}

std::vector<std::string> report_columns() {
  return {"dataset_name",
          "t_min",
          "t_max",
          "total_nodes",
          "total_connections",
          "total_timestamps",
          "time_window",
          "static_distance",
          "average_temporal_distance",
          "diameter",
          "top_degree",
          "top_betweenness",
          "top_closeness",
          "reachable_pairs",
          "temporal_diameter_hops",
          "temporal_diameter_seconds",
          "top_temporal_closeness",
          "top_temporal_betweenness",
          "exact_average_temporal_distance",
          "exact_reachable_pairs"};
}

void write_reports(const std::vector<MetricsReport>& reports, ReportFormat format, std::ostream& out) {
  const auto header = report_columns();
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports) rows.push_back(row_values(r, format == ReportFormat::Delimited));

  if (format == ReportFormat::Delimited) {
    auto emit = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "\t" : "") << cells[i];
      out << '\n';
    };
    emit(header);
    for (const auto& row : rows) emit(row);
    return;
  }

  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) {
    width[i] = header[i].size();
    for (const auto& row : rows) width[i] = std::max(width[i], row[i].size());
  }
  auto emit = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) line += "  ";
      line += cells[i];
      if (i + 1 < cells.size()) line.append(width[i] - cells[i].size(), ' ');
    }
    out << line << '\n';
  };
  emit(header);
  for (const auto& row : rows) emit(row);
}

}  // namespace dtn
