#include "zetalim/report.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <tuple>

namespace zetalim {

void sort_rows(std::vector<report_row>& rows) {
  auto key = [](const report_row& x) {
    return std::make_tuple(std::cref(x.id), x.N, x.eps.real(), x.eps.imag());
  };
  std::stable_sort(rows.begin(), rows.end(),
                   [&key](const report_row& a, const report_row& b) {
                     return key(a) < key(b);
                   });
}

std::string csv_text(const std::vector<report_row>& rows) {
  std::string out;
  out.reserve(128 + rows.size() * 160);
  out += "# ";
  out += kCsvSchema;
  out += '\n';
  out +=
      "id,kind,r,g,N,eps_re,eps_im,residual_re,residual_im,abs_residual,"
      "envelope,pass\n";
  for (const report_row& row : rows) {
    out += row.id;
    out += ',';
    out += row.kind;
    out += ',';
    out += std::to_string(row.r);
    out += ',';
    out += fmt_g17(row.g);
    out += ',';
    out += std::to_string(row.N);
    out += ',';
    out += fmt_g17(row.eps.real());
    out += ',';
    out += fmt_g17(row.eps.imag());
    out += ',';
    out += fmt_g17(row.residual.real());
    out += ',';
    out += fmt_g17(row.residual.imag());
    out += ',';
    out += fmt_g17(row.abs_residual);
    out += ',';
    out += fmt_g17(row.envelope);
    out += ',';
    switch (row.status) {
      case row_status::pass: out += '1'; break;
      case row_status::fail: out += '0'; break;
      case row_status::skip: out += "skip"; break;
    }
    out += '\n';
  }
  return out;
}

void write_csv(const std::vector<report_row>& rows, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  std::string text = csv_text(rows);
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!f) throw std::runtime_error("write failed: " + path);
}

summary_counts summarize(const std::vector<report_row>& rows) {
  summary_counts s;
  s.total = static_cast<int>(rows.size());
  for (const report_row& row : rows) {
    switch (row.status) {
      case row_status::pass: ++s.pass; break;
      case row_status::fail: ++s.fail; break;
      case row_status::skip: ++s.skip; break;
    }
  }
  return s;
}

}  // namespace zetalim
