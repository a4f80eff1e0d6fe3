#pragma once

// Readers and writers for the two supported trace formats.
//
// Common format (.dat): six whitespace separated columns per line,
//   source destination conn_up conn_down occurrence_count intercontact_time
// with an optional non-numeric header line. The last two columns are derived
// data; they are checked against a recomputation and never trusted.
//
// ONE connectivity report (.txt): lines of the form
//   <sim_time> CONN <node1> <node2> <up|down>
// where node ids may carry a letter prefix ("n12").

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtn/trace_model.hpp"

namespace dtn {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);

  // 1-based line number, or 0 when the error concerns the whole input.
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ParseWarning {
  std::size_t line = 0;
  std::string message;
};

struct ParseResult {
  ContactTrace trace;
  std::vector<ParseWarning> warnings;
};

struct CommonFormatRow {
  NodeId source;
  NodeId destination;
  Seconds conn_up = 0.0;
  Seconds conn_down = 0.0;
  std::uint64_t occurrence_count = 1;
  Seconds intercontact_time = 0.0;

  friend bool operator==(const CommonFormatRow&, const CommonFormatRow&) = default;
};

enum class TraceFormat { Common, OneReport };

// Accepts "common"/"dat" and "one"/"txt". Throws std::invalid_argument.
TraceFormat parse_format_name(const std::string& name);

ParseResult parse_common_format(std::istream& in);
ParseResult parse_one_report(std::istream& in);
ParseResult parse_trace(std::istream& in, TraceFormat format);
// Opens and parses a file; unreadable files raise ParseError with line 0.
ParseResult read_trace_file(const std::string& path, TraceFormat format);

// Rows sorted by (pair, start) with occurrence counts and inter-contact
// times derived per pair.
std::vector<CommonFormatRow> common_format_rows(const ContactTrace& trace);

void write_common_format(const ContactTrace& trace, std::ostream& out);
// Emits one up and one down record per event. Parsing the output reproduces
// the events exactly when no two contacts of the same pair overlap (see
// merge_overlapping_contacts).
void write_one_report(const ContactTrace& trace, std::ostream& out);
void write_trace(const ContactTrace& trace, TraceFormat format, std::ostream& out);

// Drops events outside the period and truncates the ones straddling it. The
// result's span is the period.
ContactTrace clip_to_period(const ContactTrace& trace, const AnalysisPeriod& period);

// Replaces overlapping or touching contacts of the same pair by their union.
ContactTrace merge_overlapping_contacts(const ContactTrace& trace);

// Shortest decimal text that parses back to the same double.
std::string format_seconds(Seconds value);

}  // namespace dtn
