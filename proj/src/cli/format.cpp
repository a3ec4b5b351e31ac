#include <chrono>
#include <ctime>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "agperf/cli.hpp"

namespace agperf::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

ordered_json meta_block() { return {{"tool", "agperf"}, {"generated_at", timestamp_utc()}}; }

ordered_json to_json(const TermBreakdown& row) {
  ordered_json j;
  j["genus"] = row.g;
  j["N"] = row.N;
  j["G"] = row.G;
  j["value"] = row.total.str();
  if (row.terms) {
    j["terms"] = {{"I", row.terms->I.str()}, {"II", row.terms->II.str()}, {"III", row.terms->III.str()}};
  } else {
    j["terms"] = nullptr;
  }
  j["formal"] = row.formal;
  j["method"] = std::string(to_string(row.method));
  return j;
}

struct Cells {
  std::string I, II, III;
};

Cells term_cells(const TermBreakdown& row) {
  if (!row.terms) return {};
  return {row.terms->I.str(), row.terms->II.str(), row.terms->III.str()};
}

void csv_rows(std::ostream& os, const std::vector<TermBreakdown>& rows) {
  os << "genus,N,G,value,term_I,term_II,term_III,formal\n";
  for (const auto& row : rows) {
    const Cells c = term_cells(row);
    os << row.g << ',' << row.N << ',' << row.G << ',' << row.total.str() << ',' << c.I << ',' << c.II << ','
       << c.III << ',' << (row.formal ? "true" : "false") << '\n';
  }
}

void md_rows(std::ostream& os, const std::vector<TermBreakdown>& rows) {
  os << "| genus | N | G | value | term_I | term_II | term_III | formal |\n";
  os << "|---:|---:|---:|---:|---:|---:|---:|:---:|\n";
  for (const auto& row : rows) {
    const Cells c = term_cells(row);
    os << "| " << row.g << " | " << row.N << " | " << row.G << " | " << row.total.str() << " | " << c.I << " | "
       << c.II << " | " << c.III << " | " << (row.formal ? "yes" : "no") << " |\n";
  }
}

std::string render(const std::vector<TermBreakdown>& rows, const RenderOptions& options, bool single) {
  std::ostringstream os;
  switch (options.format) {
    case Format::Json: {
      ordered_json body;
      if (single) {
        body = to_json(rows.front());
      } else {
        body = ordered_json::array();
        for (const auto& row : rows) body.push_back(to_json(row));
      }
      if (options.meta) body = ordered_json{{"meta", meta_block()}, {single ? "record" : "rows", body}};
      os << body.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      if (options.meta) os << "# generated_at=" << timestamp_utc() << '\n';
      csv_rows(os, rows);
      break;
    case Format::Md:
      md_rows(os, rows);
      if (options.meta) os << "\n_generated at " << timestamp_utc() << "_\n";
      break;
  }
  return os.str();
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "md") return Format::Md;
  return std::nullopt;
}

std::string render_record(const TermBreakdown& row, const RenderOptions& options) {
  return render({row}, options, true);
}

std::string render_rows(const std::vector<TermBreakdown>& rows, const RenderOptions& options) {
  return render(rows, options, false);
}

}  // namespace agperf::cli
