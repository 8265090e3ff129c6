#pragma once

#include <initializer_list>
#include <string>

namespace irtr::cli {

/// 13 significant digits: reproduces every figure value and is stable under
/// parse -> reformat at the emitted precision.
std::string format_double(double v);

/// Accumulates a CSV document: LF line endings, one leading '#' metadata
/// comment, a header row, then data rows.
class CsvBuilder {
 public:
  void comment(const std::string& text);
  void header(std::initializer_list<const char*> columns);
  void row(std::initializer_list<double> values);
  void raw_line(const std::string& line);

  const std::string& str() const { return out_; }

 private:
  std::string out_;
};

/// Writes content to path (binary mode), or to stdout when path is empty.
/// Returns false on I/O failure.
bool write_output(const std::string& path, const std::string& content);

/// Writes a generic matplotlib script next to the CSV (path + ".py").
bool write_plot_script(const std::string& csv_path);

}  // namespace irtr::cli
