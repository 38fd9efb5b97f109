#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hashfam/bigint.hpp"
#include "hashfam/cluster_expansion.hpp"
#include "hashfam/specs.hpp"

namespace hashfam {

enum class FamilyKind { Phf, Shf };

/// All bounds computed for one parameter set, plus the intermediate
/// quantities they were assembled from. The numerator is A_n(w) for PHF and
/// S_n(w) = A_n(w) + ln m_w for SHF; the denominator is D_m(w) resp. ln(1/q).
struct BoundReport {
  FamilyKind family = FamilyKind::Phf;
  int n = 0;
  int m = 0;
  int w = 0;
  std::vector<int> parts;  // empty for PHF

  double numerator = 0.0;
  bool numerator_attained = true;  // false when degree == 1 (n < 2w)
  double denominator = 0.0;
  long long n_clll = 0;

  std::optional<long long> n_lll;
  std::optional<long long> n_expurgation;
  std::optional<double> log_phi_prime;   // ln phi'(tau), absent when n == w
  std::optional<BigInt> multiplicity;    // m_w (SHF)
  std::optional<BigRat> q;               // SHF per-row failure probability
  std::optional<BigInt> sz_max_columns;  // SHF s=2: SZ bound at N = n_clll
  std::optional<BigInt> sz_asymptotic_max_columns;
};

/// Minimal admissible integer for "N >= ratio": ceiling, with a relative
/// 1e-9 snap so an exactly-integer ratio is taken as-is. Never below 1.
long long min_rows_from_ratio(double numerator, double denominator);

/// D_m(w) = ln(m^w) - ln(m^w - w! C(m,w)), formed from the exact rational
/// per-row failure probability. Errors when w > m (no injective row exists,
/// the denominator vanishes).
double d_m_w(int m, int w);

/// Theorem bound for PHF: N >= A_n(w)/D_m(w).
BoundReport phf_min_rows(const PhfSpec& spec);

/// Chromatic polynomial of the complete s-partite graph with the given part
/// sizes, evaluated at m:  sum over block counts of
/// prod_i stirling2(w_i,c_i) * ff(m, sum c_i).
BigInt chromatic_multipartite(const std::vector<int>& parts, int m);

/// q = 1 - pi(m)/m^w, the exact probability that a uniform row fails to
/// separate a family. Errors when q = 1 (m too small: no row can separate)
/// or q = 0 (degenerate).
BigRat q_shf(const ShfSpec& spec);

/// Theorem bound for SHF: N >= S_n(w)/ln(1/q), S_n(w) = A_n(w) + ln m_w.
BoundReport shf_min_rows(const ShfSpec& spec);

/// Classic local-lemma bound: ceil(L_n(w)/D_m(w)),
/// L_n(w) = ln[ e (C(n,w) - C(n-w,w)) ].
long long lll_phf_bound(const PhfSpec& spec);

/// Expurgation bound: ceil(E_n(w)/D_m(w)), E_n(w) = ln C(2n,w) - ln n.
long long expurgation_phf_bound(const PhfSpec& spec);

/// Expurgation bound for two-part SHF:
/// F_n(w) = ln C(2n,w1) + ln C(2n-w1,w2) - ln n over ln(1/q). s = 2 only.
long long expurgation_shf_bound(const ShfSpec& spec);

/// Delta_n(w) = E_n(w) - A_n(w); positive iff the theorem bound beats
/// expurgation. Evaluated both by direct formula
///   ln(2^w/w) + sum_{j=1}^{w-1} ln((1-j/2n)/(1-w/n)) - ln phi'(tau)
/// and by subtraction; the two routes must agree within 1e-8.
double delta_n(const PhfSpec& spec);

struct SzComparison {
  BigInt sz_max_columns;    // floor of (1 - 1/C_w) (1/q)^(N/(w-1))
  BigInt clll_max_columns;  // floor of (C_w/w^2)^(1/(w-1)) (w-1)/w (1/q)^(N/(w-1))
};

/// Stinson-Zaverucha column maxima for s = 2 at a given number of rows.
/// Both floors are exact: the bounds are raised to the (w-1)-th power in
/// rational arithmetic and an integer root is taken.
SzComparison sz_max_columns(long long rows, int m, const std::vector<int>& parts);

enum class AsymptoticWinner { Clll, Expurgation };

/// Which of the two bounds wins as n -> infinity: the theorem bound iff
/// 2 ln w + (w-1) ln(1 + 1/(w-1)) < w ln 2, i.e. w >= 7.
AsymptoticWinner asymptotic_winner(int w);

/// Reports with the comparison columns (LLL, expurgation, SZ) filled in
/// where defined; used by the CLI.
BoundReport phf_full_report(const PhfSpec& spec);
BoundReport shf_full_report(const ShfSpec& spec);

}  // namespace hashfam
