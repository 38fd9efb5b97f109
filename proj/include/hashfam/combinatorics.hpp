#pragma once

#include <vector>

#include "hashfam/bigint.hpp"

namespace hashfam {

/// k!
BigInt factorial(unsigned long k);

/// C(a,b); 0 when b < 0 or b > a.
BigInt binomial(unsigned long a, long b);

/// a(a-1)...(a-k+1); 1 when k = 0, 0 when k > a.
BigInt falling_factorial(unsigned long a, unsigned long k);

/// Stirling number of the second kind: partitions of a p-set into c
/// nonempty blocks. Memoized (thread-safe); the chromatic polynomial
/// evaluates it for many (p,c) pairs.
BigInt stirling2(unsigned p, unsigned c);

/// [z^j] ((1+z)^w - 1)^k, the number of ways to pick an ordered k-tuple of
/// nonempty subsets of a w-set with sizes summing to j. Computed by
/// truncated polynomial powering, never by enumerating compositions.
BigInt surjective_series_coeff(int w, int k, int j);

/// Number of unordered disjoint families {W_1..W_s} with the given part
/// sizes over a fixed ground set of size sum(parts):
///   m_w = w! / (prod_i w_i!) / (prod_p mult_p!)
BigInt family_multiplicity(const std::vector<int>& parts);

}  // namespace hashfam
