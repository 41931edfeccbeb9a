#ifndef ELC_GF2_HPP_
#define ELC_GF2_HPP_

// Dense GF(2) row reduction on matrices of at most 64 columns. Bit j of a
// row is column j.

#include <vector>

#include "elc/graph.hpp"

namespace elc::gf2 {

struct Echelon {
  // Reduced row echelon form, zero rows dropped.
  std::vector<Row> rows;
  // pivots[i] is the leading column of rows[i]; strictly increasing.
  std::vector<int> pivots;
};

// Pivoting scans columns left to right.
Echelon reduce(std::vector<Row> rows, int columns);

int rank(std::vector<Row> rows, int columns);

// Column j of a matrix as a bit vector over its rows (bit i = row i).
Row column(const std::vector<Row>& rows, int j);

}  // namespace elc::gf2

#endif  // ELC_GF2_HPP_
