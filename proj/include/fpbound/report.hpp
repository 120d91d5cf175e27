#pragma once
// Range fan-out and rendering for the CLI.  Each row joins the exact bound
// with the family classification and the two conjecture thresholds, and the
// renderers emit Markdown (human eyes), CSV (stable header, spreadsheet
// safe), or JSON (stable field order) without ever reordering rows.

#include <cstdint>
#include <string>
#include <vector>

#include "fpbound/analysis.hpp"
#include "fpbound/solver.hpp"

namespace fpbound {

enum class OutputFormat { Markdown, Csv, Json };

// Accepts "md", "csv", "json"; throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string& name);

struct TableRow {
  std::int64_t n = 0;
  std::int64_t dim = 0;  // 2n
  Int bound = 0;
  ReducedProfile witness;
  // Engaged when a single generator attains the bound; mirrors the
  // certificate so renderers can show where the optimum came from.
  std::optional<GeneratorKind> origin;
  std::int64_t kosniowski_threshold = 0;
  std::int64_t frankel_threshold = 0;
  bool kosniowski_ok = false;
  bool frankel_ok = false;
  ClassificationReport family;
};

struct BoundReport {
  TableRow row;
  BoundCertificate certificate;
};

BoundReport make_bound_report(std::int64_t n);
TableRow make_table_row(std::int64_t n);

// Rows for n_min..n_max inclusive, in order.  jobs <= 0 picks the hardware
// thread count.  Work is handed out through an atomic cursor; results land
// in preassigned slots, so the output is identical for every jobs value.
std::vector<TableRow> compute_table(std::int64_t n_min, std::int64_t n_max, std::int64_t jobs);

// "generic", "identity_constraint", "even_degenerate(k)", "odd_degenerate(k)".
std::string render_family(const ClassificationReport& rep);

// The CSV header for `table`; tests pin it verbatim.
extern const char* const kTableCsvHeader;

// full requests expanded profiles N_0..N_n alongside reduced witnesses
// (JSON only; the flat formats stay flat).
std::string render_table(const std::vector<TableRow>& rows, OutputFormat format, bool full);
std::string render_conjectures(const std::vector<TableRow>& rows, OutputFormat format);
std::string render_bound(const BoundReport& report, OutputFormat format, bool full);

}  // namespace fpbound
