// Residual report rows and the versioned CSV serialization shared by all
// verification subcommands.  Row assembly is deterministic: rows sort by
// (id, N, eps) and every float renders through the same %.17g formatter,
// so identical configurations yield byte-identical files.
#pragma once

#include <string>
#include <vector>

#include "zetalim/util.hpp"

namespace zetalim {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kCsvSchema = "zetalim.residuals.v1";

enum class row_status { fail = 0, pass = 1, skip = 2 };

struct report_row {
  std::string id;    // curve / field / family identifier
  std::string kind;  // e.g. "ff", "nf", "family", "bs"
  long long r = 0;   // base prime power (FF); 0 when not applicable
  double g = 0.0;    // genus (FF) or ln sqrt|D| (NF)
  int N = 0;
  cplx eps;
  cplx residual;
  double abs_residual = 0.0;
  double envelope = 0.0;
  row_status status = row_status::fail;
};

struct summary_counts {
  int total = 0;
  int pass = 0;
  int fail = 0;
  int skip = 0;
};

// Sorts in place by (id, N, eps_re, eps_im); stable for equal keys.
void sort_rows(std::vector<report_row>& rows);

// Renders the full CSV document (schema header + column header + rows).
// Rows are rendered in the given order; call sort_rows first.
std::string csv_text(const std::vector<report_row>& rows);

// Writes csv_text to a file; throws std::runtime_error when the file
// cannot be created.
void write_csv(const std::vector<report_row>& rows, const std::string& path);

summary_counts summarize(const std::vector<report_row>& rows);

}  // namespace zetalim
