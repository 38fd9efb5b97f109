#pragma once

#include <optional>
#include <vector>

#include "hashfam/bigint.hpp"
#include "hashfam/matrix.hpp"

namespace hashfam {

/// Brute-force reference implementations and exhaustive verifiers. These are
/// written independently of the closed-form/engine code paths they validate
/// (different enumeration and row predicates), and carry hard size guards:
/// they are for desk-scale validation only.

enum class WitnessKind { BadSubset, BadFamily };

struct Witness {
  WitnessKind kind;
  /// The offending columns, 0-based: one part for PHF, s parts for SHF.
  std::vector<std::vector<int>> family;
};

/// Absent iff every w-subset of columns has a row with distinct entries;
/// otherwise the lexicographically first failing subset.
std::optional<Witness> verify_phf(const HashMatrix& a, int w);

/// Absent iff every disjoint family with the given part sizes is separated
/// by some row; otherwise the first failing family in canonical order.
std::optional<Witness> verify_shf(const HashMatrix& a, const std::vector<int>& parts);

/// Direct enumeration of k-element families of pairwise-disjoint w-subsets
/// of [n], each intersecting the fixed reference set {1..w} (which may
/// itself be a member). Guarded: C(n,w) <= 10^4.
BigInt brute_gamma_k(int w, int n, int k);

/// Count proper m-colorings of the complete s-partite graph by enumerating
/// all m^w colorings. Guarded: m^w <= 10^7.
BigInt brute_chromatic(const std::vector<int>& parts, int m);

/// Exact fraction of rows in [m]^w that are not injective. Guarded: m^w <= 10^7.
BigRat brute_row_failure_probability(int w, int m);

/// Exact fraction of rows in [m]^w that fail to separate the parts.
BigRat brute_row_failure_probability(const std::vector<int>& parts, int m);

}  // namespace hashfam
