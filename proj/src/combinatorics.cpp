#include "hashfam/combinatorics.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace hashfam {

BigInt factorial(unsigned long k) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

BigInt binomial(unsigned long a, long b) {
  if (b < 0 || static_cast<unsigned long>(b) > a) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), a, static_cast<unsigned long>(b));
  return r;
}

BigInt falling_factorial(unsigned long a, unsigned long k) {
  if (k > a) return 0;
  BigInt r = 1;
  for (unsigned long i = 0; i < k; ++i) r *= (a - i);
  return r;
}

namespace {

std::mutex stirling_mutex;
// rows[p][c] = S(p,c) for 0 <= c <= p
std::vector<std::vector<BigInt>> stirling_rows = {{BigInt(1)}};

}  // namespace

BigInt stirling2(unsigned p, unsigned c) {
  if (c > p) return 0;
  std::lock_guard<std::mutex> lock(stirling_mutex);
  while (stirling_rows.size() <= p) {
    const auto& prev = stirling_rows.back();
    const unsigned q = static_cast<unsigned>(stirling_rows.size());
    std::vector<BigInt> row(q + 1);
    row[0] = 0;
    for (unsigned j = 1; j <= q; ++j) {
      // S(q,j) = j S(q-1,j) + S(q-1,j-1)
      row[j] = (j < prev.size() ? BigInt(j * prev[j]) : BigInt(0)) + prev[j - 1];
    }
    stirling_rows.push_back(std::move(row));
  }
  return stirling_rows[p][c];
}

BigInt surjective_series_coeff(int w, int k, int j) {
  if (w < 1 || k < 1 || j < 0) throw std::invalid_argument("surjective_series_coeff: need w>=1, k>=1, j>=0");
  // base = (1+z)^w - 1, truncated at degree j
  std::vector<BigInt> base(static_cast<size_t>(j) + 1);
  for (int i = 1; i <= j; ++i) base[i] = binomial(w, i);
  std::vector<BigInt> acc(static_cast<size_t>(j) + 1);
  acc[0] = 1;
  for (int rep = 0; rep < k; ++rep) {
    std::vector<BigInt> next(static_cast<size_t>(j) + 1);
    for (int a = 0; a <= j; ++a) {
      if (acc[a] == 0) continue;
      for (int b = 1; a + b <= j; ++b) {
        if (base[b] != 0) next[a + b] += acc[a] * base[b];
      }
    }
    acc = std::move(next);
  }
  return acc[j];
}

BigInt family_multiplicity(const std::vector<int>& parts) {
  if (parts.empty()) throw std::invalid_argument("family_multiplicity: parts must be nonempty");
  unsigned long w = 0;
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("family_multiplicity: parts must be positive");
    w += static_cast<unsigned long>(p);
  }
  // multinomial w!/(w_1!...w_s!), then divide out permutations of equal parts
  BigInt count = factorial(w);
  for (int p : parts) mpz_divexact(count.get_mpz_t(), count.get_mpz_t(), factorial(p).get_mpz_t());
  std::map<int, unsigned long> mult;
  for (int p : parts) ++mult[p];
  for (const auto& [size, times] : mult) {
    (void)size;
    mpz_divexact(count.get_mpz_t(), count.get_mpz_t(), factorial(times).get_mpz_t());
  }
  return count;
}

}  // namespace hashfam
