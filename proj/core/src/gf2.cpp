#include "elc/gf2.hpp"

#include <utility>

namespace elc::gf2 {

Echelon reduce(std::vector<Row> rows, int columns) {
  Echelon out;
  std::size_t top = 0;
  for (int c = 0; c < columns && top < rows.size(); ++c) {
    const Row bit = vertex_bit(c);
    std::size_t pivot = top;
    while (pivot < rows.size() && !(rows[pivot] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[top], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != top && (rows[r] & bit)) rows[r] ^= rows[top];
    }
    out.pivots.push_back(c);
    ++top;
  }
  rows.resize(top);
  out.rows = std::move(rows);
  return out;
}

int rank(std::vector<Row> rows, int columns) {
  int r = 0;
  for (int c = 0; c < columns && r < int(rows.size()); ++c) {
    const Row bit = vertex_bit(c);
    int pivot = r;
    while (pivot < int(rows.size()) && !(rows[pivot] & bit)) ++pivot;
    if (pivot == int(rows.size())) continue;
    std::swap(rows[r], rows[pivot]);
    for (int i = r + 1; i < int(rows.size()); ++i) {
      if (rows[i] & bit) rows[i] ^= rows[r];
    }
    ++r;
  }
  return r;
}

Row column(const std::vector<Row>& rows, int j) {
  Row col = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if ((rows[i] >> j) & 1) col |= vertex_bit(int(i));
  }
  return col;
}

}  // namespace elc::gf2
