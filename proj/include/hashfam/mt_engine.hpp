#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hashfam/matrix.hpp"
#include "hashfam/rng.hpp"
#include "hashfam/specs.hpp"

namespace hashfam {

/// Which occurring bad event a resampling step picks. LEX_FIRST (the
/// default) takes the first event in the canonical enumeration order and is
/// fully deterministic; RANDOM picks uniformly among all occurring events.
enum class BadEventPolicy { LexFirst, Random };

struct MtStats {
  std::uint64_t seed = 0;
  std::uint64_t resamples = 0;
  std::uint64_t scans = 0;  // entry-pair comparisons spent scanning for bad events
  bool succeeded = false;
  double elapsed_seconds = 0.0;
};

struct MtResult {
  HashMatrix matrix;
  MtStats stats;
};

/// Fresh uniform matrix; entries drawn row-major from the stream, so the
/// result is a pure function of (seed state, N, n, m).
HashMatrix sample_matrix(int rows, int cols, int alphabet, SplitMix64& rng);

/// True iff the row entries at the given columns are pairwise distinct.
/// Cost is counted in pair comparisons against *comparisons.
bool row_is_injective(const int* row, std::span<const int> columns,
                      std::uint64_t* comparisons = nullptr);

/// True iff for every pair of parts the row's value sets on those parts are
/// disjoint (repeats inside a part are fine).
bool row_separates(const int* row, const std::vector<std::vector<int>>& parts,
                   std::uint64_t* comparisons = nullptr);

struct PhfScan {
  std::optional<std::vector<int>> event;  // 0-based sorted column indices
  std::uint64_t pair_comparisons = 0;
};

/// The event E_W occurs iff no row is injective on W. Under LEX_FIRST
/// returns the lexicographically smallest occurring W; under RANDOM scans
/// every W and draws one occurring event uniformly (one rng draw).
PhfScan find_bad_event_phf(const HashMatrix& a, int w, BadEventPolicy policy,
                           SplitMix64* rng = nullptr);

struct ShfScan {
  std::optional<std::vector<std::vector<int>>> event;
  std::uint64_t pair_comparisons = 0;
};

/// The event E_S occurs iff no row separates S. Families are enumerated in
/// the canonical order produced by for_each_family (each unordered family
/// exactly once, C(n,w) * m_w in total).
ShfScan find_bad_event_shf(const HashMatrix& a, const std::vector<int>& parts,
                           BadEventPolicy policy, SplitMix64* rng = nullptr);

/// Canonical enumeration of the disjoint families with the given part
/// sizes over columns [0..n-1]: parts chosen in size-ascending order, each
/// part a sorted subset enumerated lexicographically, equal-size parts
/// required to be lexicographically increasing. The callback returns false
/// to stop early; for_each_family returns false iff it was stopped.
bool for_each_family(int n, const std::vector<int>& parts,
                     const std::function<bool(const std::vector<std::vector<int>>&)>& visit);

/// Resample cap used when the caller does not set one: 100 * C(n,w),
/// saturated to 2^63.
std::uint64_t default_resample_cap(int n, int w);

/// The resampling construction. Step 0 samples the whole matrix; each
/// iteration scans for a bad event and, if one occurs, redraws all N rows of
/// the event's columns (row-major over the block), leaving everything else
/// untouched. Stops when no bad event occurs, or reports failure once
/// max_resamples is exceeded (which suggests N is below the threshold, not
/// that no family exists).
MtResult construct(const PhfSpec& spec, int rows, std::uint64_t seed,
                   BadEventPolicy policy = BadEventPolicy::LexFirst,
                   std::uint64_t max_resamples = 0);
MtResult construct(const ShfSpec& spec, int rows, std::uint64_t seed,
                   BadEventPolicy policy = BadEventPolicy::LexFirst,
                   std::uint64_t max_resamples = 0);

}  // namespace hashfam
