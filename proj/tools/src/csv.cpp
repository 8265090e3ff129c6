#include "irtr/cli/csv.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

namespace irtr::cli {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.13g", v);
  return buf;
}

void CsvBuilder::comment(const std::string& text) {
  out_ += "# ";
  out_ += text;
  out_ += '\n';
}

void CsvBuilder::header(std::initializer_list<const char*> columns) {
  bool first = true;
  for (const char* col : columns) {
    if (!first) out_ += ',';
    out_ += col;
    first = false;
  }
  out_ += '\n';
}

void CsvBuilder::row(std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) out_ += ',';
    out_ += format_double(v);
    first = false;
  }
  out_ += '\n';
}

void CsvBuilder::raw_line(const std::string& line) {
  out_ += line;
  out_ += '\n';
}

bool write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return static_cast<bool>(std::cout.flush());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  return static_cast<bool>(out.flush());
}

bool write_plot_script(const std::string& csv_path) {
  std::ofstream out(csv_path + ".py", std::ios::binary);
  if (!out) return false;
  out << "#!/usr/bin/env python3\n"
         "# Generic plot for " << csv_path << ": first column on x,\n"
         "# remaining columns on y. Comment lines start with '#'.\n"
         "import csv\n"
         "import matplotlib.pyplot as plt\n"
         "\n"
         "rows, header = [], None\n"
         "with open(" << '"' << csv_path << '"' << ") as fh:\n"
         "    for line in fh:\n"
         "        line = line.strip()\n"
         "        if not line or line.startswith('#'):\n"
         "            continue\n"
         "        fields = line.split(',')\n"
         "        if header is None:\n"
         "            header = fields\n"
         "            continue\n"
         "        try:\n"
         "            rows.append([float(x) for x in fields])\n"
         "        except ValueError:\n"
         "            header = fields  # a second section starts\n"
         "            rows = []\n"
         "xs = [r[0] for r in rows]\n"
         "for k in range(1, len(header)):\n"
         "    plt.plot(xs, [r[k] for r in rows], label=header[k])\n"
         "plt.xlabel(header[0])\n"
         "plt.legend()\n"
         "plt.tight_layout()\n"
         "plt.show()\n";
  return static_cast<bool>(out.flush());
}

}  // namespace irtr::cli
