#include "hashfam/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hashfam/combinatorics.hpp"

namespace hashfam {

namespace {

BigInt pow_int(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

BigRat pow_rat(const BigRat& base, unsigned long e) {
  BigRat r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
  r.canonicalize();
  return r;
}

/// q = 1 - pi(m)/m^w for the part sizes alone (q does not depend on n).
BigRat q_from_parts(const std::vector<int>& parts, int m) {
  int w = 0;
  for (int p : parts) w += p;
  const BigInt total = pow_int(BigInt(m), static_cast<unsigned long>(w));
  const BigInt proper = chromatic_multipartite(parts, m);
  BigRat q(total - proper, total);
  q.canonicalize();
  if (q == 1)
    throw std::domain_error("q_shf: q = 1, no single row can separate these parts over an alphabet of size " +
                            std::to_string(m));
  if (q == 0) throw std::domain_error("q_shf: q = 0, parameters are degenerate (every row separates)");
  return q;
}

/// floor(R^(1/root)) for nonnegative rational R, via integer root of floor(R).
BigInt rational_root_floor(const BigRat& r, unsigned long root) {
  BigInt fl = BigInt(r.get_num()) / BigInt(r.get_den());
  BigInt out;
  mpz_root(out.get_mpz_t(), fl.get_mpz_t(), root);
  return out;
}

}  // namespace

long long min_rows_from_ratio(double numerator, double denominator) {
  const double ratio = numerator / denominator;
  const double nearest = std::round(ratio);
  double value;
  if (std::abs(ratio - nearest) <= 1e-9 * std::max(1.0, std::abs(ratio)))
    value = nearest;  // an exactly-integer ratio is taken as-is
  else
    value = std::ceil(ratio);
  return std::max(1LL, static_cast<long long>(value));
}

double d_m_w(int m, int w) {
  if (m < 2 || w < 2) throw std::invalid_argument("d_m_w: requires m >= 2 and w >= 2");
  if (w > m)
    throw std::domain_error("alphabet too small: no injective row possible (w=" + std::to_string(w) +
                            " > m=" + std::to_string(m) + ")");
  const BigInt total = pow_int(BigInt(m), static_cast<unsigned long>(w));
  const BigInt injective = falling_factorial(static_cast<unsigned long>(m), static_cast<unsigned long>(w));
  BigRat fail(total - injective, total);
  fail.canonicalize();
  // 2 <= w <= m makes the failure probability land strictly inside (0,1)
  return -log_big(fail);
}

BoundReport phf_min_rows(const PhfSpec& spec) {
  BoundReport r;
  r.family = FamilyKind::Phf;
  r.n = spec.n;
  r.m = spec.m;
  r.w = spec.w;
  const BoundNumerator a = a_n_w(spec);
  r.numerator = a.value;
  r.numerator_attained = a.attained;
  r.denominator = d_m_w(spec.m, spec.w);
  r.n_clll = min_rows_from_ratio(r.numerator, r.denominator);
  if (spec.n > spec.w) r.log_phi_prime = log_phi_prime_tau(spec);
  return r;
}

BigInt chromatic_multipartite(const std::vector<int>& parts, int m) {
  if (parts.empty()) throw std::invalid_argument("chromatic_multipartite: parts must be nonempty");
  if (m < 0) throw std::invalid_argument("chromatic_multipartite: m must be nonnegative");
  // Fold the parts in the falling-factorial basis: joining a graph merges
  // block counts additively, with stirling2(w_i, c_i) blocks per part.
  std::vector<BigInt> coeff{BigInt(1)};  // coeff[c] for c color classes
  for (int w_i : parts) {
    if (w_i < 1) throw std::invalid_argument("chromatic_multipartite: part sizes must be positive");
    std::vector<BigInt> next(coeff.size() + static_cast<size_t>(w_i));
    for (size_t c = 0; c < coeff.size(); ++c) {
      if (coeff[c] == 0) continue;
      for (int ci = 1; ci <= w_i; ++ci)
        next[c + static_cast<size_t>(ci)] += coeff[c] * stirling2(static_cast<unsigned>(w_i),
                                                                  static_cast<unsigned>(ci));
    }
    coeff = std::move(next);
  }
  BigInt total = 0;
  for (size_t c = 0; c < coeff.size(); ++c)
    if (coeff[c] != 0)
      total += coeff[c] * falling_factorial(static_cast<unsigned long>(m), static_cast<unsigned long>(c));
  return total;
}

BigRat q_shf(const ShfSpec& spec) { return q_from_parts(spec.parts, spec.m); }

BoundReport shf_min_rows(const ShfSpec& spec) {
  BoundReport r;
  r.family = FamilyKind::Shf;
  r.n = spec.n;
  r.m = spec.m;
  r.w = spec.weight();
  r.parts = spec.parts;
  const PhfSpec core(spec.n, spec.m, r.w);
  const BoundNumerator a = a_n_w(core);
  r.multiplicity = family_multiplicity(spec.parts);
  r.numerator = a.value + log_big(*r.multiplicity);  // S_n(w) = A_n(w) + ln m_w
  r.numerator_attained = a.attained;
  r.q = q_shf(spec);
  r.denominator = -log_big(*r.q);  // ln(1/q)
  r.n_clll = min_rows_from_ratio(r.numerator, r.denominator);
  if (spec.n > r.w) r.log_phi_prime = log_phi_prime_tau(core);
  return r;
}

long long lll_phf_bound(const PhfSpec& spec) {
  const double d = d_m_w(spec.m, spec.w);
  const BigInt neighborhood = binomial(static_cast<unsigned long>(spec.n), spec.w) -
                              binomial(static_cast<unsigned long>(spec.n - spec.w), spec.w);
  const double l = 1.0 + log_big(neighborhood);
  return min_rows_from_ratio(l, d);
}

namespace {

double expurgation_numerator_phf(const PhfSpec& spec) {
  return log_big(binomial(2UL * static_cast<unsigned long>(spec.n), spec.w)) -
         std::log(static_cast<double>(spec.n));
}

}  // namespace

long long expurgation_phf_bound(const PhfSpec& spec) {
  const double d = d_m_w(spec.m, spec.w);
  return min_rows_from_ratio(expurgation_numerator_phf(spec), d);
}

long long expurgation_shf_bound(const ShfSpec& spec) {
  if (spec.parts.size() != 2)
    throw std::invalid_argument("expurgation_shf_bound: defined for exactly 2 parts (got s=" +
                                std::to_string(spec.parts.size()) + ")");
  const unsigned long n2 = 2UL * static_cast<unsigned long>(spec.n);
  const int w1 = spec.parts[0];
  const int w2 = spec.parts[1];
  const double f = log_big(binomial(n2, w1)) + log_big(binomial(n2 - static_cast<unsigned long>(w1), w2)) -
                   std::log(static_cast<double>(spec.n));
  const double denom = -log_big(q_shf(spec));
  return min_rows_from_ratio(f, denom);
}

double delta_n(const PhfSpec& spec) {
  if (spec.n < 2 * spec.w)
    throw std::domain_error("delta_n: requires n >= 2w (stationary point undefined below)");
  const double a = a_n_w(spec).value;
  const double by_subtraction = expurgation_numerator_phf(spec) - a;

  double direct = spec.w * M_LN2 - std::log(static_cast<double>(spec.w));
  const double n = static_cast<double>(spec.n);
  for (int j = 1; j < spec.w; ++j)
    direct += std::log((1.0 - j / (2.0 * n)) / (1.0 - spec.w / n));
  direct -= log_phi_prime_tau(spec);

  if (std::abs(direct - by_subtraction) > 1e-8)
    throw std::logic_error("delta_n: the two computation routes disagree beyond 1e-8");
  return by_subtraction;
}

SzComparison sz_max_columns(long long rows, int m, const std::vector<int>& parts) {
  if (parts.size() != 2) throw std::invalid_argument("sz_max_columns: defined for exactly 2 parts");
  if (rows < 1) throw std::invalid_argument("sz_max_columns: rows must be positive");
  const int w1 = std::min(parts[0], parts[1]);
  const int w2 = std::max(parts[0], parts[1]);
  const int w = w1 + w2;
  const BigRat q = q_from_parts(parts, m);
  BigRat inv_q(q.get_den(), q.get_num());
  inv_q.canonicalize();
  const BigRat inv_q_pow = pow_rat(inv_q, static_cast<unsigned long>(rows));

  BigInt c_w = factorial(static_cast<unsigned long>(w1)) * factorial(static_cast<unsigned long>(w2));
  if (w1 == w2) c_w *= 2;

  // Both bounds are of the form x <= base * (1/q)^(N/(w-1)); compare
  // x^(w-1) <= base^(w-1) (1/q)^N exactly and take the integer root.
  BigRat sz_base(c_w - 1, c_w);
  const BigRat r_sz = pow_rat(sz_base, static_cast<unsigned long>(w - 1)) * inv_q_pow;

  BigRat vai_base(c_w, BigInt(w) * w);
  vai_base.canonicalize();
  BigRat vai_slope(w - 1, w);
  vai_slope.canonicalize();
  const BigRat r_vai = vai_base * pow_rat(vai_slope, static_cast<unsigned long>(w - 1)) * inv_q_pow;

  SzComparison out;
  out.sz_max_columns = rational_root_floor(r_sz, static_cast<unsigned long>(w - 1));
  out.clll_max_columns = rational_root_floor(r_vai, static_cast<unsigned long>(w - 1));
  return out;
}

AsymptoticWinner asymptotic_winner(int w) {
  if (w < 2) throw std::invalid_argument("asymptotic_winner: requires w >= 2");
  const double lhs = 2.0 * std::log(static_cast<double>(w)) + (w - 1) * std::log(1.0 + 1.0 / (w - 1));
  return lhs < w * M_LN2 ? AsymptoticWinner::Clll : AsymptoticWinner::Expurgation;
}

BoundReport phf_full_report(const PhfSpec& spec) {
  BoundReport r = phf_min_rows(spec);
  r.n_lll = lll_phf_bound(spec);
  r.n_expurgation = expurgation_phf_bound(spec);
  return r;
}

BoundReport shf_full_report(const ShfSpec& spec) {
  BoundReport r = shf_min_rows(spec);
  if (spec.parts.size() == 2) {
    r.n_expurgation = expurgation_shf_bound(spec);
    const SzComparison sz = sz_max_columns(r.n_clll, spec.m, spec.parts);
    r.sz_max_columns = sz.sz_max_columns;
    r.sz_asymptotic_max_columns = sz.clll_max_columns;
  }
  return r;
}

}  // namespace hashfam
