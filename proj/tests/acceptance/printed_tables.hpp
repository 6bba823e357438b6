#pragma once

// Printed ro-vibrational tables (tests/data/*_printed.csv) and the cells
// known to carry print errors.

#include <string>
#include <vector>

namespace printed {

struct Cell {
  std::string table;     // "T1".."T6"
  std::string molecule;  // empty for T1
  std::string state;     // "2p"
  double inv_b = 0.0;
  double alpha = 0.0;    // 0 marks the alpha = 0, 1 column
  std::string column;    // T1: present | previous | numerical; T2-T6: value
  std::string text;      // as printed
  double value = 0.0;
};

std::vector<Cell> load_table1(const std::string& data_dir);
std::vector<Cell> load_molecule_tables(const std::string& data_dir);

/// Why the printed value of this cell is not a faithful number, or empty.
std::string typo_reason(const Cell& c);

}  // namespace printed
