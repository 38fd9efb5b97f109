#include "hashfam/oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "hashfam/combinatorics.hpp"

namespace hashfam {

namespace {

constexpr long kMaxSubsets = 10000;      // brute_gamma_k guard on C(n,w)
constexpr long kMaxColorings = 10000000; // m^w guard

/// Row predicate done with a value histogram rather than pair comparisons,
/// so the verifiers do not share code with the engine's costed checks.
bool distinct_on(const HashMatrix& a, int r, const std::vector<int>& columns) {
  std::vector<char> seen(static_cast<size_t>(a.alphabet) + 1, 0);
  for (int c : columns) {
    if (seen[static_cast<size_t>(a.at(r, c))]) return false;
    seen[static_cast<size_t>(a.at(r, c))] = 1;
  }
  return true;
}

bool separates_on(const HashMatrix& a, int r, const std::vector<std::vector<int>>& family) {
  // part index (1-based) of the first part using each value; 0 = unused
  std::vector<int> owner(static_cast<size_t>(a.alphabet) + 1, 0);
  for (size_t p = 0; p < family.size(); ++p) {
    for (int c : family[p]) {
      const int v = a.at(r, c);
      if (owner[static_cast<size_t>(v)] == 0)
        owner[static_cast<size_t>(v)] = static_cast<int>(p) + 1;
      else if (owner[static_cast<size_t>(v)] != static_cast<int>(p) + 1)
        return false;
    }
  }
  return true;
}

/// Independent subset enumerator (recursive, not the engine's odometer).
bool every_subset(int n, int w, int from, std::vector<int>& prefix,
                  const std::function<bool(const std::vector<int>&)>& accept) {
  if (static_cast<int>(prefix.size()) == w) return accept(prefix);
  for (int c = from; c <= n - (w - static_cast<int>(prefix.size())); ++c) {
    prefix.push_back(c);
    if (!every_subset(n, w, c + 1, prefix, accept)) return false;
    prefix.pop_back();
  }
  return true;
}

/// Independent family enumerator over sorted part sizes; equal-size parts
/// in increasing order of smallest element.
bool every_family(int n, const std::vector<int>& sizes, size_t pi, int min_first,
                  std::vector<char>& used, std::vector<std::vector<int>>& family,
                  const std::function<bool(const std::vector<std::vector<int>>&)>& accept) {
  if (pi == sizes.size()) return accept(family);
  std::vector<int>& part = family[pi];

  std::function<bool(int)> extend = [&](int from) -> bool {
    if (static_cast<int>(part.size()) == sizes[pi]) {
      const int follow_min = (pi + 1 < sizes.size() && sizes[pi + 1] == sizes[pi]) ? part[0] : -1;
      return every_family(n, sizes, pi + 1, follow_min, used, family, accept);
    }
    for (int c = from; c < n; ++c) {
      if (used[static_cast<size_t>(c)]) continue;
      if (part.empty() && c <= min_first) continue;
      used[static_cast<size_t>(c)] = 1;
      part.push_back(c);
      const bool keep_going = extend(c + 1);
      part.pop_back();
      used[static_cast<size_t>(c)] = 0;
      if (!keep_going) return false;
    }
    return true;
  };
  return extend(0);
}

}  // namespace

std::optional<Witness> verify_phf(const HashMatrix& a, int w) {
  if (w < 2 || w > a.cols) throw std::invalid_argument("verify_phf: need 2 <= w <= n");
  std::optional<Witness> witness;
  std::vector<int> prefix;
  every_subset(a.cols, w, 0, prefix, [&](const std::vector<int>& subset) {
    for (int r = 0; r < a.rows; ++r)
      if (distinct_on(a, r, subset)) return true;
    witness = Witness{WitnessKind::BadSubset, {subset}};
    return false;
  });
  return witness;
}

std::optional<Witness> verify_shf(const HashMatrix& a, const std::vector<int>& parts) {
  int w = 0;
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("verify_shf: part sizes must be positive");
    w += p;
  }
  if (w > a.cols) throw std::invalid_argument("verify_shf: parts exceed the column count");
  std::vector<int> sizes = parts;
  std::sort(sizes.begin(), sizes.end());

  std::optional<Witness> witness;
  std::vector<char> used(static_cast<size_t>(a.cols), 0);
  std::vector<std::vector<int>> family(sizes.size());
  every_family(a.cols, sizes, 0, -1, used, family, [&](const std::vector<std::vector<int>>& fam) {
    for (int r = 0; r < a.rows; ++r)
      if (separates_on(a, r, fam)) return true;
    witness = Witness{WitnessKind::BadFamily, fam};
    return false;
  });
  return witness;
}

BigInt brute_gamma_k(int w, int n, int k) {
  if (w < 2 || w > n || k < 1) throw std::invalid_argument("brute_gamma_k: need 2 <= w <= n, k >= 1");
  if (binomial(static_cast<unsigned long>(n), w) > kMaxSubsets)
    throw std::invalid_argument("brute_gamma_k: instance too large (C(n,w) > 10^4)");

  // Candidates: w-subsets of [0..n-1] intersecting {0..w-1}, in lex order.
  std::vector<std::vector<int>> candidates;
  std::vector<int> prefix;
  every_subset(n, w, 0, prefix, [&](const std::vector<int>& subset) {
    if (subset.front() < w) candidates.push_back(subset);  // sorted, so front() is the minimum
    return true;
  });

  BigInt count = 0;
  std::vector<size_t> chosen;
  std::function<void(size_t)> rec = [&](size_t from) {
    if (chosen.size() == static_cast<size_t>(k)) {
      count += 1;
      return;
    }
    for (size_t i = from; i < candidates.size(); ++i) {
      bool disjoint = true;
      for (size_t j : chosen) {
        const auto& a = candidates[i];
        const auto& b = candidates[j];
        if (std::find_first_of(a.begin(), a.end(), b.begin(), b.end()) != a.end()) {
          disjoint = false;
          break;
        }
      }
      if (!disjoint) continue;
      chosen.push_back(i);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return count;
}

BigInt brute_chromatic(const std::vector<int>& parts, int m) {
  int w = 0;
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("brute_chromatic: part sizes must be positive");
    w += p;
  }
  if (m < 0) throw std::invalid_argument("brute_chromatic: m must be nonnegative");
  double size = 1;
  for (int i = 0; i < w; ++i) size *= m;
  if (size > kMaxColorings) throw std::invalid_argument("brute_chromatic: instance too large (m^w > 10^7)");
  if (m == 0) return 0;

  // vertex -> part id
  std::vector<int> part_of;
  for (size_t p = 0; p < parts.size(); ++p)
    part_of.insert(part_of.end(), static_cast<size_t>(parts[p]), static_cast<int>(p));

  BigInt proper = 0;
  std::vector<int> color(static_cast<size_t>(w), 0);  // values 0..m-1
  while (true) {
    bool ok = true;
    for (int u = 0; u < w && ok; ++u)
      for (int v = u + 1; v < w && ok; ++v)
        if (part_of[static_cast<size_t>(u)] != part_of[static_cast<size_t>(v)] &&
            color[static_cast<size_t>(u)] == color[static_cast<size_t>(v)])
          ok = false;
    if (ok) proper += 1;
    int pos = w - 1;
    while (pos >= 0 && color[static_cast<size_t>(pos)] == m - 1) color[static_cast<size_t>(pos--)] = 0;
    if (pos < 0) break;
    ++color[static_cast<size_t>(pos)];
  }
  return proper;
}

namespace {

BigRat failing_fraction(int w, int m, const std::function<bool(const std::vector<int>&)>& row_ok) {
  double size = 1;
  for (int i = 0; i < w; ++i) size *= m;
  if (size > kMaxColorings)
    throw std::invalid_argument("brute_row_failure_probability: instance too large (m^w > 10^7)");

  BigInt failing = 0;
  BigInt total = 0;
  std::vector<int> row(static_cast<size_t>(w), 1);  // values 1..m
  while (true) {
    total += 1;
    if (!row_ok(row)) failing += 1;
    int pos = w - 1;
    while (pos >= 0 && row[static_cast<size_t>(pos)] == m) row[static_cast<size_t>(pos--)] = 1;
    if (pos < 0) break;
    ++row[static_cast<size_t>(pos)];
  }
  BigRat q(failing, total);
  q.canonicalize();
  return q;
}

}  // namespace

BigRat brute_row_failure_probability(int w, int m) {
  if (w < 2 || m < 2) throw std::invalid_argument("brute_row_failure_probability: need w >= 2, m >= 2");
  return failing_fraction(w, m, [](const std::vector<int>& row) {
    std::vector<int> sorted = row;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  });
}

BigRat brute_row_failure_probability(const std::vector<int>& parts, int m) {
  int w = 0;
  for (int p : parts) w += p;
  if (w < 2 || m < 2) throw std::invalid_argument("brute_row_failure_probability: need w >= 2, m >= 2");
  std::vector<int> part_of;
  for (size_t p = 0; p < parts.size(); ++p)
    part_of.insert(part_of.end(), static_cast<size_t>(parts[p]), static_cast<int>(p));
  return failing_fraction(w, m, [&](const std::vector<int>& row) {
    for (int u = 0; u < w; ++u)
      for (int v = u + 1; v < w; ++v)
        if (part_of[static_cast<size_t>(u)] != part_of[static_cast<size_t>(v)] &&
            row[static_cast<size_t>(u)] == row[static_cast<size_t>(v)])
          return false;
    return true;
  });
}

}  // namespace hashfam
