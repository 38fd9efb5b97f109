#pragma once

#include <vector>

namespace hashfam {

/// Perfect hash family parameters: an N x n matrix over [m] such that every
/// w-column restriction has a row with pairwise-distinct entries.
struct PhfSpec {
  int n;  // columns
  int m;  // alphabet size
  int w;  // subset size

  PhfSpec(int n_, int m_, int w_);  // validates 2 <= w <= n, m >= 2
};

/// Separating hash family parameters: part sizes w_1..w_s (s >= 2); every
/// disjoint family of column blocks with these sizes must have a row whose
/// value sets on distinct blocks are disjoint.
struct ShfSpec {
  int n;
  int m;
  std::vector<int> parts;  // sorted ascending on construction

  ShfSpec(int n_, int m_, std::vector<int> parts_);

  int weight() const;  // w = sum of parts
};

}  // namespace hashfam
