#include "dtn/ingestion.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string_view>
#include <tuple>

namespace dtn {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<double> to_double(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::optional<std::uint64_t> to_uint(std::string_view text) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

bool nearly_equal(double x, double y) {
  return std::abs(x - y) <= 1e-6 * std::max({1.0, std::abs(x), std::abs(y)});
}

std::string lower(std::string_view text) {
  std::string out(text);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

NodeId parse_prefixed_node(std::string_view token, std::size_t line_no) {
  std::size_t skip = 0;
  while (skip < token.size() && std::isalpha(static_cast<unsigned char>(token[skip]))) ++skip;
  auto value = to_uint(token.substr(skip));
  if (!value) throw ParseError(line_no, "invalid node id '" + std::string(token) + "'");
  return NodeId{*value};
}

using PairKey = std::pair<std::uint64_t, std::uint64_t>;

PairKey unordered_key(NodeId x, NodeId y) {
  return x < y ? PairKey{x.value, y.value} : PairKey{y.value, x.value};
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

TraceFormat parse_format_name(const std::string& name) {
  const auto n = lower(name);
  if (n == "common" || n == "dat") return TraceFormat::Common;
  if (n == "one" || n == "txt") return TraceFormat::OneReport;
  throw std::invalid_argument("unknown trace format '" + name + "'");
}

ParseResult parse_common_format(std::istream& in) {
  std::vector<ContactEvent> events;
  std::vector<ParseWarning> warnings;
  // Last (occurrence, conn_up) seen per ordered (source, destination).
  std::map<PairKey, std::pair<std::uint64_t, double>> last_seen;

  std::string line;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;

    const bool first_content = !seen_content;
    seen_content = true;
    if (first_content && !to_double(fields.front())) continue;  // header

    if (fields.size() != 6) {
      throw ParseError(line_no, "expected 6 columns, found " + std::to_string(fields.size()));
    }
    const auto src = to_uint(fields[0]);
    const auto dst = to_uint(fields[1]);
    const auto up = to_double(fields[2]);
    const auto down = to_double(fields[3]);
    const auto count = to_uint(fields[4]);
    const auto gap = to_double(fields[5]);
    if (!src || !dst) throw ParseError(line_no, "node ids must be non-negative integers");
    if (!up || !down || !gap) throw ParseError(line_no, "non-numeric time field");
    if (!count) throw ParseError(line_no, "occurrence count must be a non-negative integer");

    const PairKey key{*src, *dst};
    std::uint64_t expected_count = 1;
    double expected_gap = 0.0;
    if (auto it = last_seen.find(key); it != last_seen.end()) {
      expected_count = it->second.first + 1;
      expected_gap = *up - it->second.second;
    }
    if (*count != expected_count) {
      warnings.push_back({line_no, "occurrence count " + std::to_string(*count) + " recomputed as " +
                                       std::to_string(expected_count)});
    }
    if (!nearly_equal(*gap, expected_gap)) {
      warnings.push_back({line_no, "intercontact time " + format_seconds(*gap) +
                                       " recomputed as " + format_seconds(expected_gap)});
    }
    last_seen[key] = {expected_count, *up};
    events.push_back({NodeId{*src}, NodeId{*dst}, *up, *down});
  }

  if (events.empty()) throw ParseError(0, "no events");
  return {ContactTrace(std::move(events)), std::move(warnings)};
}

ParseResult parse_one_report(std::istream& in) {
  std::vector<ContactEvent> events;
  std::vector<ParseWarning> warnings;
  std::map<PairKey, std::deque<std::pair<double, std::size_t>>> open;
  double last_time = 0.0;
  bool any_time = false;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;

    const auto time = to_double(fields.front());
    if (!time) throw ParseError(line_no, "invalid simulation time '" + std::string(fields[0]) + "'");
    last_time = any_time ? std::max(last_time, *time) : *time;
    any_time = true;

    if (fields.size() < 2 || fields[1] != "CONN") {
      warnings.push_back({line_no, "skipped non-CONN record"});
      continue;
    }
    if (fields.size() != 5) {
      throw ParseError(line_no, "expected '<time> CONN <node> <node> <up|down>'");
    }
    const NodeId n1 = parse_prefixed_node(fields[2], line_no);
    const NodeId n2 = parse_prefixed_node(fields[3], line_no);
    const auto action = lower(fields[4]);
    const auto key = unordered_key(n1, n2);

    if (action == "up") {
      open[key].push_back({*time, line_no});
    } else if (action == "down") {
      auto it = open.find(key);
      if (it == open.end() || it->second.empty()) {
        throw ParseError(line_no, "connection down without a matching up");
      }
      const double start = it->second.front().first;
      it->second.pop_front();
      events.push_back({NodeId{key.first}, NodeId{key.second}, start, *time});
    } else {
      throw ParseError(line_no, "unknown action '" + std::string(fields[4]) + "'");
    }
  }

  for (const auto& [key, queue] : open) {
    for (const auto& [start, up_line] : queue) {
      warnings.push_back({up_line, "connection never closed; truncated at " + format_seconds(last_time)});
      events.push_back({NodeId{key.first}, NodeId{key.second}, start, last_time});
    }
  }

  if (events.empty()) throw ParseError(0, "no events");
  return {ContactTrace(std::move(events)), std::move(warnings)};
}

ParseResult parse_trace(std::istream& in, TraceFormat format) {
  return format == TraceFormat::Common ? parse_common_format(in) : parse_one_report(in);
}

ParseResult read_trace_file(const std::string& path, TraceFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_trace(in, format);
}

std::vector<CommonFormatRow> common_format_rows(const ContactTrace& trace) {
  std::vector<ContactEvent> sorted(trace.events().begin(), trace.events().end());
  std::sort(sorted.begin(), sorted.end(), [](const ContactEvent& l, const ContactEvent& r) {
    return std::tie(l.a, l.b, l.start, l.end) < std::tie(r.a, r.b, r.start, r.end);
  });

  std::vector<CommonFormatRow> rows;
  rows.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto& e = sorted[i];
    CommonFormatRow row{e.a, e.b, e.start, e.end, 1, 0.0};
    if (i > 0 && sorted[i - 1].a == e.a && sorted[i - 1].b == e.b) {
      row.occurrence_count = rows.back().occurrence_count + 1;
      row.intercontact_time = e.start - sorted[i - 1].start;
    }
    rows.push_back(row);
  }
  return rows;
}

void write_common_format(const ContactTrace& trace, std::ostream& out) {
  out << "source\tdestination\tconn_up\tconn_down\toccurrence_count\tintercontact_time\n";
  for (const auto& row : common_format_rows(trace)) {
    out << row.source.value << '\t' << row.destination.value << '\t'
        << format_seconds(row.conn_up) << '\t' << format_seconds(row.conn_down) << '\t'
        << row.occurrence_count << '\t' << format_seconds(row.intercontact_time) << '\n';
  }
}

void write_one_report(const ContactTrace& trace, std::ostream& out) {
  struct Record {
    double time;
    int rank;  // closing downs, then ups, then downs of instantaneous contacts
    std::size_t order;
    bool up;
    const ContactEvent* event;
  };
  std::vector<Record> records;
  const auto events = trace.events();
  records.reserve(2 * events.size());
  for (std::size_t i = 0; i < events.size(); ++i) {
    const auto& e = events[i];
    records.push_back({e.start, 1, i, true, &e});
    records.push_back({e.end, e.start < e.end ? 0 : 2, i, false, &e});
  }
  std::sort(records.begin(), records.end(), [](const Record& l, const Record& r) {
    return std::tie(l.time, l.rank, l.order) < std::tie(r.time, r.rank, r.order);
  });
  for (const auto& r : records) {
    out << format_seconds(r.time) << " CONN " << r.event->a.value << ' ' << r.event->b.value
        << (r.up ? " up\n" : " down\n");
  }
}

void write_trace(const ContactTrace& trace, TraceFormat format, std::ostream& out) {
  if (format == TraceFormat::Common) {
    write_common_format(trace, out);
  } else {
    write_one_report(trace, out);
  }
}

ContactTrace clip_to_period(const ContactTrace& trace, const AnalysisPeriod& period) {
  std::vector<ContactEvent> kept;
  for (const auto& e : trace.events()) {
    if (e.end < period.t_min() || e.start > period.t_max()) continue;
    kept.push_back({e.a, e.b, std::max(e.start, period.t_min()), std::min(e.end, period.t_max())});
  }
  return ContactTrace(std::move(kept), {}, std::pair{period.t_min(), period.t_max()});
}

ContactTrace merge_overlapping_contacts(const ContactTrace& trace) {
  std::vector<ContactEvent> sorted(trace.events().begin(), trace.events().end());
  std::sort(sorted.begin(), sorted.end(), [](const ContactEvent& l, const ContactEvent& r) {
    return std::tie(l.a, l.b, l.start, l.end) < std::tie(r.a, r.b, r.start, r.end);
  });
  std::vector<ContactEvent> merged;
  for (const auto& e : sorted) {
    if (!merged.empty()) {
      auto& last = merged.back();
      if (last.a == e.a && last.b == e.b && e.start <= last.end) {
        last.end = std::max(last.end, e.end);
        continue;
      }
    }
    merged.push_back(e);
  }
  std::vector<NodeId> nodes(trace.nodes().begin(), trace.nodes().end());
  return ContactTrace(std::move(merged), std::move(nodes),
                      std::pair{trace.span_min(), trace.span_max()});
}

std::string format_seconds(Seconds value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) return std::to_string(value);
  return std::string(buf.data(), ptr);
}

}  // namespace dtn
