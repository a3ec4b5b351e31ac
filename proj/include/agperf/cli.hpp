#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "agperf/intersection.hpp"

namespace agperf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitUsage = 64;

/// One published row (g, I, II, III, a_{2g-1}^{(g)}), stored as exact "p/q" strings.
struct GoldenRecord {
  int g;
  std::string_view term_I;
  std::string_view term_II;
  std::string_view term_III;
  std::string_view total;
};

/// The six published rows g = 2..7, embedded.
std::span<const GoldenRecord> golden_table();

enum class Format { Json, Csv, Md };

std::optional<Format> parse_format(std::string_view name);

struct RenderOptions {
  Format format = Format::Json;
  /// Adds a metadata block with a generation timestamp. Off by default so that
  /// output is byte-for-byte reproducible.
  bool meta = false;
};

/// Renders a single record (`compute`) or a list of rows (`table`).
std::string render_record(const TermBreakdown& row, const RenderOptions& options);
std::string render_rows(const std::vector<TermBreakdown>& rows, const RenderOptions& options);

/// Valid N for a table row of genus g: 0..3g-4, extended to N = 3 when g = 2.
int table_max_n(int g);

struct GoldenComparison {
  int g = 0;
  bool term_I = false;
  bool term_II = false;
  bool term_III = false;
  bool total = false;
  /// Human-readable description of each mismatching field.
  std::vector<std::string> diffs;

  [[nodiscard]] bool matches() const { return term_I && term_II && term_III && total; }
};

/// Recomputes every golden row and compares exactly.
std::vector<GoldenComparison> compare_golden(const EngineConfig& config = {});

int run_compute(int genus, int n, const RenderOptions& options, std::ostream& out, std::ostream& err);
int run_table(int g_min, int g_max, const RenderOptions& options, std::ostream& out, std::ostream& err);
int run_verify(bool json, std::ostream& out, std::ostream& err, const EngineConfig& config = {});
int run_crosscheck(int g_max, std::ostream& out, std::ostream& err);

/// Full command-line entry point; argv[0] is the program name.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace agperf::cli
