#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "dtn/ingestion.hpp"
#include "dtn/report.hpp"
#include "dtn/rwp_gen.hpp"
#include "dtn/temporal_metrics.hpp"
#include "dtn/windowing.hpp"

namespace dtn::cli {
namespace {

// Bad input data or arguments discovered after parsing; exits with 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kMaxWarnings = 20;

struct InputArgs {
  std::string path;
  std::string format = "common";
};

struct PeriodArgs {
  std::optional<double> tmin;
  std::optional<double> tmax;
  std::vector<std::string> periods;  // "TMIN:TMAX"
};

void add_input(CLI::App& cmd, InputArgs& in) {
  cmd.add_option("-i,--input", in.path, "Trace file")->required()->check(CLI::ExistingFile);
  cmd.add_option("-f,--format", in.format, "Input format: common or one")->capture_default_str();
}

void add_period(CLI::App& cmd, PeriodArgs& p) {
  cmd.add_option("--tmin", p.tmin, "Period start in seconds (default: first contact)");
  cmd.add_option("--tmax", p.tmax, "Period end in seconds (default: last contact)");
  cmd.add_option("--period", p.periods, "Analysis period TMIN:TMAX; repeat for one row per period");
}

ContactTrace load(const InputArgs& in, std::ostream& err) {
  const auto format = parse_format_name(in.format);
  auto result = read_trace_file(in.path, format);
  for (std::size_t i = 0; i < result.warnings.size() && i < kMaxWarnings; ++i) {
    const auto& w = result.warnings[i];
    err << "warning: line " << w.line << ": " << w.message << '\n';
  }
  if (result.warnings.size() > kMaxWarnings) {
    err << "warning: " << result.warnings.size() - kMaxWarnings << " more warnings not shown\n";
  }
  const auto violations = validate_trace(result.trace);
  if (!violations.empty()) {
    const auto& v = violations.front();
    const auto& e = result.trace.events()[v.event_index];
    throw UsageError("invalid contact " + to_string(e.a) + "-" + to_string(e.b) + " at " +
                     format_seconds(e.start) + ": " + std::string(rule_name(v.rule)));
  }
  return std::move(result.trace);
}

double parse_number(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw UsageError("invalid number '" + text + "'");
  return value;
}

std::vector<AnalysisPeriod> resolve_periods(const PeriodArgs& p, const ContactTrace& trace) {
  std::vector<AnalysisPeriod> out;
  if (!p.periods.empty()) {
    if (p.tmin || p.tmax) throw UsageError("--period cannot be combined with --tmin/--tmax");
    for (const auto& spec : p.periods) {
      const auto colon = spec.find(':');
      if (colon == std::string::npos) throw UsageError("--period expects TMIN:TMAX, got '" + spec + "'");
      out.emplace_back(parse_number(spec.substr(0, colon)), parse_number(spec.substr(colon + 1)));
    }
    return out;
  }
  out.emplace_back(p.tmin.value_or(trace.span_min()), p.tmax.value_or(trace.span_max()));
  return out;
}

std::optional<Horizon> parse_horizon(const std::optional<std::size_t>& hops) {
  if (!hops) return std::nullopt;
  return Horizon::of(*hops);
}

// Writes through `out` unless an output path is given.
template <typename Fn>
void emit(const std::string& path, std::ostream& out, Fn&& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  write(file);
  if (!file) throw UsageError("failed writing '" + path + "'");
}

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Temporal metrics for DTN contact traces", "dtn-temporal"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  InputArgs input;
  PeriodArgs period;
  std::optional<double> window;
  std::optional<std::size_t> horizon;
  std::string output;
  std::string report_format = "table";
  std::string name;
  std::string semantics = "occurrence";
  std::string to_format = "common";
  RwpParams rwp;

  auto* window_cmd = app.add_subcommand("window", "Average meeting time and recommended window size");
  add_input(*window_cmd, input);
  add_period(*window_cmd, period);

  auto* analyze_cmd = app.add_subcommand("analyze", "One metrics row per analysis period");
  add_input(*analyze_cmd, input);
  add_period(*analyze_cmd, period);
  analyze_cmd->add_option("-w,--window", window, "Window width in seconds (default: recommended)")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--horizon", horizon, "Max hops per window for contact-following distances")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("-o,--output", output, "Output file (default: stdout)");
  analyze_cmd->add_option("--report-format", report_format, "table or delimited")
      ->check(CLI::IsMember({"table", "delimited"}))
      ->capture_default_str();
  analyze_cmd->add_option("--name", name, "Dataset name (default: input file stem)");

  auto* matrix_cmd = app.add_subcommand("matrix", "Temporal distance matrix, -1 for unreachable");
  add_input(*matrix_cmd, input);
  add_period(*matrix_cmd, period);
  matrix_cmd->add_option("-w,--window", window, "Window width in seconds (default: recommended)")
      ->check(CLI::PositiveNumber);
  matrix_cmd->add_option("--semantics", semantics, "occurrence or contact")
      ->check(CLI::IsMember({"occurrence", "contact"}))
      ->capture_default_str();
  matrix_cmd->add_option("--horizon", horizon, "Max hops per window (contact semantics)")
      ->check(CLI::PositiveNumber);
  matrix_cmd->add_option("-o,--output", output, "Output file (default: stdout)");

  auto* convert_cmd = app.add_subcommand("convert", "Convert between common and ONE report formats");
  add_input(*convert_cmd, input);
  convert_cmd->add_option("-t,--to", to_format, "Output format: common or one")->capture_default_str();
  convert_cmd->add_option("-o,--output", output, "Output file (default: stdout)");

  auto* generate_cmd = app.add_subcommand("generate", "Random-waypoint contact trace");
  generate_cmd->add_option("--nodes", rwp.node_count, "Number of nodes")->capture_default_str();
  generate_cmd->add_option("--duration", rwp.duration, "Simulated seconds")->capture_default_str();
  generate_cmd->add_option("--width", rwp.area_width, "Area width in meters")->capture_default_str();
  generate_cmd->add_option("--height", rwp.area_height, "Area height in meters")->capture_default_str();
  generate_cmd->add_option("--range", rwp.range, "Radio range in meters")->capture_default_str();
  generate_cmd->add_option("--speed-min", rwp.speed_min, "Minimum speed in m/s")->capture_default_str();
  generate_cmd->add_option("--speed-max", rwp.speed_max, "Maximum speed in m/s")->capture_default_str();
  generate_cmd->add_option("--pause-max", rwp.pause_max, "Maximum pause in seconds")->capture_default_str();
  generate_cmd->add_option("--tick", rwp.tick, "Sampling interval in seconds")->capture_default_str();
  generate_cmd->add_option("--seed", rwp.seed, "Random seed")->capture_default_str();
  generate_cmd->add_option("-f,--format", to_format, "Output format: common or one")->capture_default_str();
  generate_cmd->add_option("-o,--output", output, "Output file (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (!app.get_subcommands().empty()) err << app.get_subcommands().front()->help();
    return kUsageError;
  }

  try {
    if (window_cmd->parsed()) {
      const auto trace = merge_overlapping_contacts(load(input, err));
      for (const auto& p : resolve_periods(period, trace)) {
        const auto aggregates = pair_aggregates(trace, p);
        const auto avg = average_meeting_time(aggregates);
        out << "avg=" << fixed2(avg) << " recommended=" << format_seconds(recommend_window_for(avg)) << '\n';
      }
    } else if (analyze_cmd->parsed()) {
      const auto trace = load(input, err);
      AnalysisOptions options;
      options.dataset_name = name.empty() ? std::filesystem::path(input.path).stem().string() : name;
      options.window = window;
      if (auto h = parse_horizon(horizon)) options.horizon = *h;
      std::vector<MetricsReport> reports;
      for (const auto& p : resolve_periods(period, trace)) reports.push_back(analyze(trace, p, options));
      const auto format = report_format == "delimited" ? ReportFormat::Delimited : ReportFormat::Table;
      emit(output, out, [&](std::ostream& o) { write_reports(reports, format, o); });
    } else if (matrix_cmd->parsed()) {
      const auto raw = load(input, err);
      const auto periods = resolve_periods(period, raw);
      if (periods.size() != 1) throw UsageError("matrix takes a single period");
      const auto& p = periods.front();
      const auto trace = clip_to_period(merge_overlapping_contacts(raw), p);
      if (trace.empty()) throw AnalysisError("no contacts in period");
      const Seconds w = window ? *window : recommend_window(pair_aggregates(trace, p));
      const auto h = parse_horizon(horizon).value_or(Horizon::unlimited());
      const auto snapshots = build_snapshots(trace, p, WindowConfig::make(w, h));
      const auto m = semantics == "contact" ? exact_distance_matrix(snapshots, h) : temporal_distance_matrix(snapshots);
      emit(output, out, [&](std::ostream& o) { o << format_matrix(m) << '\n'; });
    } else if (convert_cmd->parsed()) {
      const auto trace = load(input, err);
      const auto to = parse_format_name(to_format);
      emit(output, out, [&](std::ostream& o) { write_trace(trace, to, o); });
    } else if (generate_cmd->parsed()) {
      const auto to = parse_format_name(to_format);
      const auto trace = generate(rwp);
      emit(output, out, [&](std::ostream& o) { write_trace(trace, to, o); });
    }
  } catch (const ParseError& e) {
    err << "error: " << input.path << ": " << e.what() << '\n';
    return kUsageError;
  } catch (const AnalysisError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kOk;
}

}  // namespace dtn::cli
