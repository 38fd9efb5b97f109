#include "hashfam/matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace hashfam {

HashMatrix::HashMatrix(int rows_, int cols_, int alphabet_)
    : rows(rows_), cols(cols_), alphabet(alphabet_),
      cells(static_cast<size_t>(rows_) * static_cast<size_t>(cols_), 0) {}

MatrixParseError::MatrixParseError(const std::string& what, int line_, int column_)
    : std::runtime_error(what + " (line " + std::to_string(line_) + ", column " +
                         std::to_string(column_) + ")"),
      line(line_), column(column_) {}

void write_matrix(std::ostream& out, const MatrixFile& file) {
  const HashMatrix& a = file.matrix;
  if (file.is_shf) {
    out << "SHF " << a.rows << ' ' << a.cols << ' ' << a.alphabet << ' ';
    for (size_t i = 0; i < file.parts.size(); ++i) {
      if (i) out << ',';
      out << file.parts[i];
    }
    out << '\n';
  } else {
    out << "PHF " << a.rows << ' ' << a.cols << ' ' << a.alphabet << ' ' << file.w << '\n';
  }
  for (int r = 0; r < a.rows; ++r) {
    for (int c = 0; c < a.cols; ++c) {
      if (c) out << ' ';
      out << a.at(r, c);
    }
    out << '\n';
  }
}

namespace {

// Tokenizing cursor that tracks line/column for error messages.
struct Cursor {
  std::istream& in;
  int line = 1;
  int column = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw MatrixParseError(msg, line, column); }

  void skip_spaces() {
    while (in.peek() == ' ') {
      in.get();
      ++column;
    }
  }

  void expect_newline() {
    skip_spaces();
    const int ch = in.get();
    if (ch != '\n') fail(ch == EOF ? "unexpected end of file, expected newline" : "expected end of line");
    ++line;
    column = 0;
  }

  std::string token(const char* extra = "") {
    skip_spaces();
    std::string t;
    while (true) {
      const int ch = in.peek();
      if (ch == EOF || ch == ' ' || ch == '\n') break;
      bool ok = (ch >= '0' && ch <= '9') || (ch >= 'A' && ch <= 'Z');
      for (const char* e = extra; *e && !ok; ++e) ok = (ch == *e);
      if (!ok) fail(std::string("unexpected character '") + static_cast<char>(ch) + "'");
      t.push_back(static_cast<char>(in.get()));
      ++column;
    }
    if (t.empty()) fail("expected a token");
    return t;
  }

  int integer(const char* what) {
    const std::string t = token();
    try {
      size_t used = 0;
      const int v = std::stoi(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      return v;
    } catch (const std::exception&) {
      fail(std::string("invalid ") + what + " '" + t + "'");
    }
  }
};

}  // namespace

MatrixFile read_matrix(std::istream& in) {
  Cursor cur{in};
  MatrixFile file;

  const std::string kind = cur.token();
  if (kind == "PHF")
    file.is_shf = false;
  else if (kind == "SHF")
    file.is_shf = true;
  else
    cur.fail("unknown family '" + kind + "', expected PHF or SHF");

  const int rows = cur.integer("row count");
  const int cols = cur.integer("column count");
  const int alphabet = cur.integer("alphabet size");
  if (rows < 1 || cols < 1 || alphabet < 2) cur.fail("header dimensions out of range");

  if (file.is_shf) {
    const std::string list = cur.token(",");
    std::stringstream ss(list);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
      try {
        file.parts.push_back(std::stoi(piece));
      } catch (const std::exception&) {
        cur.fail("invalid part size '" + piece + "'");
      }
      if (file.parts.back() < 1) cur.fail("part sizes must be positive");
    }
    if (file.parts.size() < 2) cur.fail("SHF header needs at least two part sizes");
    int w = 0;
    for (int p : file.parts) w += p;
    if (w > cols) cur.fail("part sizes sum beyond the column count");
  } else {
    file.w = cur.integer("subset size");
    if (file.w < 2 || file.w > cols) cur.fail("subset size w out of range [2..n]");
  }
  cur.expect_newline();

  file.matrix = HashMatrix(rows, cols, alphabet);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = cur.integer("matrix entry");
      if (v < 1 || v > alphabet) cur.fail("entry " + std::to_string(v) + " outside [1.." +
                                          std::to_string(alphabet) + "]");
      file.matrix.at(r, c) = v;
    }
    cur.expect_newline();
  }
  cur.skip_spaces();
  if (in.peek() != EOF && in.peek() != '\n') cur.fail("trailing content after matrix body");
  return file;
}

}  // namespace hashfam
