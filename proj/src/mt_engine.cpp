#include "hashfam/mt_engine.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "hashfam/combinatorics.hpp"

namespace hashfam {

HashMatrix sample_matrix(int rows, int cols, int alphabet, SplitMix64& rng) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("sample_matrix: dimensions must be positive");
  if (alphabet < 2) throw std::invalid_argument("sample_matrix: alphabet must have m >= 2 symbols");
  HashMatrix a(rows, cols, alphabet);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) a.at(r, c) = rng.uniform_symbol(alphabet);
  return a;
}

bool row_is_injective(const int* row, std::span<const int> columns, std::uint64_t* comparisons) {
  for (size_t i = 0; i < columns.size(); ++i) {
    for (size_t j = i + 1; j < columns.size(); ++j) {
      if (comparisons) ++*comparisons;
      if (row[columns[i]] == row[columns[j]]) return false;
    }
  }
  return true;
}

bool row_separates(const int* row, const std::vector<std::vector<int>>& parts,
                   std::uint64_t* comparisons) {
  for (size_t r = 0; r < parts.size(); ++r) {
    for (size_t s = r + 1; s < parts.size(); ++s) {
      for (int a : parts[r]) {
        for (int b : parts[s]) {
          if (comparisons) ++*comparisons;
          if (row[a] == row[b]) return false;
        }
      }
    }
  }
  return true;
}

namespace {

bool some_row_injective(const HashMatrix& a, std::span<const int> columns, std::uint64_t* comparisons) {
  for (int r = 0; r < a.rows; ++r)
    if (row_is_injective(a.row(r), columns, comparisons)) return true;
  return false;
}

bool some_row_separates(const HashMatrix& a, const std::vector<std::vector<int>>& family,
                        std::uint64_t* comparisons) {
  for (int r = 0; r < a.rows; ++r)
    if (row_separates(a.row(r), family, comparisons)) return true;
  return false;
}

/// Lexicographic enumeration of w-subsets of [0..n-1]; visit returns false to stop.
bool for_each_subset(int n, int w, const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> idx(static_cast<size_t>(w));
  for (int i = 0; i < w; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    if (!visit(idx)) return false;
    int i = w - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - w + i) --i;
    if (i < 0) return true;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < w; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
}

}  // namespace

PhfScan find_bad_event_phf(const HashMatrix& a, int w, BadEventPolicy policy, SplitMix64* rng) {
  if (w < 2 || w > a.cols) throw std::invalid_argument("find_bad_event_phf: need 2 <= w <= n");
  if (policy == BadEventPolicy::Random && rng == nullptr)
    throw std::invalid_argument("find_bad_event_phf: RANDOM policy needs an rng");

  PhfScan scan;
  std::vector<std::vector<int>> occurring;
  for_each_subset(a.cols, w, [&](const std::vector<int>& subset) {
    if (!some_row_injective(a, subset, &scan.pair_comparisons)) {
      if (policy == BadEventPolicy::LexFirst) {
        scan.event = subset;
        return false;
      }
      occurring.push_back(subset);
    }
    return true;
  });
  if (policy == BadEventPolicy::Random && !occurring.empty())
    scan.event = occurring[rng->uniform_index(occurring.size())];
  return scan;
}

bool for_each_family(int n, const std::vector<int>& parts,
                     const std::function<bool(const std::vector<std::vector<int>>&)>& visit) {
  std::vector<int> sizes = parts;
  std::sort(sizes.begin(), sizes.end());
  std::vector<std::vector<int>> family(sizes.size());
  std::vector<int> avail(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) avail[static_cast<size_t>(i)] = i;

  // Chooses the part at index pi from the still-available columns, in
  // lexicographic order; equal-size parts must have increasing smallest
  // element (equivalent to lexicographic order for disjoint sorted sets).
  std::function<bool(size_t, int)> next_part = [&](size_t pi, int min_first) -> bool {
    if (pi == sizes.size()) return visit(family);
    const int size = sizes[pi];
    std::vector<int>& part = family[pi];
    part.assign(static_cast<size_t>(size), 0);

    std::function<bool(size_t, size_t)> pick = [&](size_t slot, size_t from) -> bool {
      if (slot == static_cast<size_t>(size)) {
        std::vector<int> taken = part;
        std::vector<int> rest;
        rest.reserve(avail.size() - taken.size());
        std::set_difference(avail.begin(), avail.end(), taken.begin(), taken.end(),
                            std::back_inserter(rest));
        std::swap(avail, rest);
        const int follow_min = (pi + 1 < sizes.size() && sizes[pi + 1] == size) ? part[0] : -1;
        const bool keep_going = next_part(pi + 1, follow_min);
        std::swap(avail, rest);
        return keep_going;
      }
      for (size_t i = from; i < avail.size(); ++i) {
        if (slot == 0 && avail[i] <= min_first) continue;
        part[slot] = avail[i];
        if (!pick(slot + 1, i + 1)) return false;
      }
      return true;
    };
    return pick(0, 0);
  };
  return next_part(0, -1);
}

ShfScan find_bad_event_shf(const HashMatrix& a, const std::vector<int>& parts,
                           BadEventPolicy policy, SplitMix64* rng) {
  int w = 0;
  for (int p : parts) w += p;
  if (w > a.cols) throw std::invalid_argument("find_bad_event_shf: parts exceed the column count");
  if (policy == BadEventPolicy::Random && rng == nullptr)
    throw std::invalid_argument("find_bad_event_shf: RANDOM policy needs an rng");

  ShfScan scan;
  std::vector<std::vector<std::vector<int>>> occurring;
  for_each_family(a.cols, parts, [&](const std::vector<std::vector<int>>& family) {
    if (!some_row_separates(a, family, &scan.pair_comparisons)) {
      if (policy == BadEventPolicy::LexFirst) {
        scan.event = family;
        return false;
      }
      occurring.push_back(family);
    }
    return true;
  });
  if (policy == BadEventPolicy::Random && !occurring.empty())
    scan.event = occurring[rng->uniform_index(occurring.size())];
  return scan;
}

std::uint64_t default_resample_cap(int n, int w) {
  const BigInt events = binomial(static_cast<unsigned long>(n), w);
  const BigInt cap = 100 * events;
  if (!cap.fits_ulong_p() || cap.get_ui() > (1ULL << 63)) return 1ULL << 63;
  return cap.get_ui();
}

namespace {

template <typename FindEvent, typename EventColumns>
MtResult run_construction(int rows, int cols, int alphabet, std::uint64_t seed,
                          std::uint64_t max_resamples, FindEvent&& find_event,
                          EventColumns&& event_columns) {
  const auto start = std::chrono::steady_clock::now();
  SplitMix64 rng(seed);
  MtResult out;
  out.stats.seed = seed;
  out.matrix = sample_matrix(rows, cols, alphabet, rng);

  while (true) {
    auto [event, comparisons] = find_event(out.matrix, rng);
    out.stats.scans += comparisons;
    if (!event) {
      out.stats.succeeded = true;
      break;
    }
    if (out.stats.resamples >= max_resamples) break;  // RESAMPLE_LIMIT
    ++out.stats.resamples;
    const auto columns = event_columns(*event);
    for (int r = 0; r < rows; ++r)
      for (int c : columns) out.matrix.at(r, c) = rng.uniform_symbol(alphabet);
  }
  out.stats.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace

MtResult construct(const PhfSpec& spec, int rows, std::uint64_t seed, BadEventPolicy policy,
                   std::uint64_t max_resamples) {
  if (rows < 1) throw std::invalid_argument("construct: rows must be positive");
  if (max_resamples == 0) max_resamples = default_resample_cap(spec.n, spec.w);
  return run_construction(
      rows, spec.n, spec.m, seed, max_resamples,
      [&](const HashMatrix& a, SplitMix64& rng) {
        PhfScan s = find_bad_event_phf(a, spec.w, policy, &rng);
        return std::pair(std::move(s.event), s.pair_comparisons);
      },
      [](const std::vector<int>& event) { return event; });
}

MtResult construct(const ShfSpec& spec, int rows, std::uint64_t seed, BadEventPolicy policy,
                   std::uint64_t max_resamples) {
  if (rows < 1) throw std::invalid_argument("construct: rows must be positive");
  if (max_resamples == 0) max_resamples = default_resample_cap(spec.n, spec.weight());
  return run_construction(
      rows, spec.n, spec.m, seed, max_resamples,
      [&](const HashMatrix& a, SplitMix64& rng) {
        ShfScan s = find_bad_event_shf(a, spec.parts, policy, &rng);
        return std::pair(std::move(s.event), s.pair_comparisons);
      },
      [](const std::vector<std::vector<int>>& event) {
        std::vector<int> columns;
        for (const auto& part : event) columns.insert(columns.end(), part.begin(), part.end());
        std::sort(columns.begin(), columns.end());
        return columns;
      });
}

}  // namespace hashfam
