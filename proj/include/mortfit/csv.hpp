#pragma once

#include <string>
#include <vector>

#include "mortfit/types.hpp"

namespace mortfit::csv {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int col(const std::string& name) const;  // -1 if absent
};

Table read(const std::string& path, char sep = ',');

// Writes one row of already-formatted cells.
void write_row(std::ostream& os, const std::vector<std::string>& cells);

// Fixed %.10g formatting so identical runs produce identical bytes.
std::string num(double x);
std::string num(int x);

}  // namespace mortfit::csv
