#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace hashfam {

/// An N x n matrix with entries in [1..m]; the candidate hash family.
struct HashMatrix {
  int rows = 0;
  int cols = 0;
  int alphabet = 0;
  std::vector<int> cells;  // row-major

  HashMatrix() = default;
  HashMatrix(int rows_, int cols_, int alphabet_);

  int at(int r, int c) const { return cells[static_cast<size_t>(r) * cols + c]; }
  int& at(int r, int c) { return cells[static_cast<size_t>(r) * cols + c]; }
  const int* row(int r) const { return cells.data() + static_cast<size_t>(r) * cols; }
};

/// Header line `PHF N n m w` or `SHF N n m w1,w2,...,ws`, then N lines of
/// n space-separated integers in [1..m].
struct MatrixFile {
  HashMatrix matrix;
  bool is_shf = false;
  int w = 0;                // PHF subset size (0 for SHF)
  std::vector<int> parts;   // SHF part sizes (empty for PHF)
};

/// Malformed input throws MatrixParseError naming line and column.
struct MatrixParseError : std::runtime_error {
  int line;
  int column;
  MatrixParseError(const std::string& what, int line_, int column_);
};

void write_matrix(std::ostream& out, const MatrixFile& file);
MatrixFile read_matrix(std::istream& in);

}  // namespace hashfam
