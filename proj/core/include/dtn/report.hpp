#pragma once

// One row of dataset metrics per analysis period: window selection, the
// temporal metrics and the static baselines side by side.

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dtn/centrality.hpp"
#include "dtn/temporal_metrics.hpp"
#include "dtn/trace_model.hpp"

namespace dtn {

struct MetricsReport {
  std::string dataset_name;
  Seconds t_min = 0.0;
  Seconds t_max = 0.0;
  std::size_t total_nodes = 0;
  std::size_t total_connections = 0;
  std::size_t total_timestamps = 0;  // W
  Seconds time_window = 0.0;         // w
  double static_distance = 0.0;
  Seconds average_temporal_distance = 0.0;
  std::size_t diameter = 0;  // aggregated graph
  CentralityScore top_degree;
  CentralityScore top_betweenness;
  CentralityScore top_closeness;

  std::size_t reachable_pairs = 0;
  std::size_t temporal_diameter_hops = 0;
  Seconds temporal_diameter_seconds = 0.0;
  CentralityScore top_temporal_closeness;
  CentralityScore top_temporal_betweenness;
  Seconds exact_average_temporal_distance = 0.0;
  std::size_t exact_reachable_pairs = 0;
};

struct AnalysisOptions {
  std::string dataset_name = "dataset";
  std::optional<Seconds> window;  // recommended width when empty
  Horizon horizon = Horizon::unlimited();
};

// Merges overlapping contacts of each pair, clips to the period and computes
// every report column over the nodes active in the period. Throws
// AnalysisError when the period holds no contacts or fewer than 2 nodes.
MetricsReport analyze(const ContactTrace& trace, const AnalysisPeriod& period,
                      const AnalysisOptions& options = {});

enum class ReportFormat { Table, Delimited };

std::vector<std::string> report_columns();

// Table: space-aligned columns with a header line, values rounded for
// reading. Delimited: tab-separated header and rows, values printed at full
// precision.
void write_reports(const std::vector<MetricsReport>& reports, ReportFormat format, std::ostream& out);

}  // namespace dtn
