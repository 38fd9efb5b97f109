#include "hashfam/cluster_expansion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hashfam/combinatorics.hpp"

namespace hashfam {

namespace {

void check_k_range(const PhfSpec& spec, int k) {
  const int degree = cluster_degree(spec);
  if (k < 1 || k > degree)
    throw std::invalid_argument("gamma index k=" + std::to_string(k) + " outside [1," +
                                std::to_string(degree) + "] for w=" + std::to_string(spec.w) +
                                ", n=" + std::to_string(spec.n));
}

/// ln of the sum of exp(terms), stable for widely spread magnitudes.
double log_sum_exp(const std::vector<double>& terms) {
  double mx = terms.front();
  for (double t : terms) mx = std::max(mx, t);
  double acc = 0.0;
  for (double t : terms) acc += std::exp(t - mx);
  return mx + std::log(acc);
}

}  // namespace

int cluster_degree(const PhfSpec& spec) {
  return std::min(spec.n / spec.w, spec.w);
}

BigInt gamma_k(const PhfSpec& spec, int k) {
  check_k_range(spec, k);
  const unsigned long w = static_cast<unsigned long>(spec.w);
  const unsigned long n = static_cast<unsigned long>(spec.n);

  // sum_{i0=0}^{w-k} (w!/i0!) * ff(n-w, (k-1)w+i0) * [z^(w-i0)]((1+z)^w-1)^k
  BigInt numerator = 0;
  const BigInt w_fact = factorial(w);
  BigInt i0_fact = 1;
  for (unsigned long i0 = 0; i0 + static_cast<unsigned long>(k) <= w; ++i0) {
    if (i0 > 0) i0_fact *= i0;
    const unsigned long drop = (static_cast<unsigned long>(k) - 1) * w + i0;
    const BigInt ff = falling_factorial(n - w, drop);
    if (ff == 0) continue;
    numerator += (w_fact / i0_fact) * ff *
                 surjective_series_coeff(spec.w, k, spec.w - static_cast<int>(i0));
  }

  BigInt denominator = factorial(static_cast<unsigned long>(k));
  BigInt w_fact_pow;
  mpz_pow_ui(w_fact_pow.get_mpz_t(), w_fact.get_mpz_t(), static_cast<unsigned long>(k));
  denominator *= w_fact_pow;

  if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t()))
    throw std::logic_error("gamma_k: inexact division (internal consistency failure)");
  BigInt result;
  mpz_divexact(result.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
  if (result <= 0) throw std::logic_error("gamma_k: nonpositive count");
  return result;
}

double gamma_tilde(const PhfSpec& spec, int k) {
  check_k_range(spec, k);
  if (spec.n == spec.w)
    throw std::invalid_argument("gamma_tilde: requires n > w (normalization degenerates at n == w)");
  const int w = spec.w;
  const double nw = static_cast<double>(spec.n - spec.w);

  // g(z) = sum_i z^i / ((i+1) i!) * prod_{s=1}^{i} (1 - s/w), truncated at
  // the largest needed power; coefficients vanish for i >= w anyway.
  const int jmax = w - k;
  std::vector<double> g(static_cast<size_t>(jmax) + 1, 0.0);
  {
    double prod = 1.0;      // prod_{s=1}^{i} (1 - s/w)
    double inv_fact = 1.0;  // 1/i!
    for (int i = 0; i <= jmax; ++i) {
      if (i > 0) {
        prod *= 1.0 - static_cast<double>(i) / w;
        inv_fact /= static_cast<double>(i);
      }
      g[static_cast<size_t>(i)] = prod * inv_fact / (i + 1);
    }
  }
  // gk = g^k truncated
  std::vector<double> gk(static_cast<size_t>(jmax) + 1, 0.0);
  gk[0] = 1.0;
  for (int rep = 0; rep < k; ++rep) {
    std::vector<double> next(static_cast<size_t>(jmax) + 1, 0.0);
    for (int a = 0; a <= jmax; ++a) {
      if (gk[static_cast<size_t>(a)] == 0.0) continue;
      for (int b = 0; a + b <= jmax; ++b)
        next[static_cast<size_t>(a + b)] += gk[static_cast<size_t>(a)] * g[static_cast<size_t>(b)];
    }
    gk = std::move(next);
  }

  double total = 0.0;
  double j_fact = 1.0;
  double w_over_nw_pow = 1.0;
  for (int j = 0; j <= jmax; ++j) {
    if (j > 0) {
      j_fact *= static_cast<double>(j);
      w_over_nw_pow *= static_cast<double>(w) / nw;
    }
    // empty product when the upper limit k(w-1)-j-1 <= 0
    double prod = 1.0;
    const int upper = k * (w - 1) - j - 1;
    for (int l = 1; l <= upper; ++l) prod *= 1.0 - static_cast<double>(l) / nw;
    total += binomial(static_cast<unsigned long>(jmax), j).get_d() * prod * w_over_nw_pow *
             j_fact * gk[static_cast<size_t>(j)];
  }
  return total;
}

ClusterPolynomial build_cluster_polynomial(const PhfSpec& spec) {
  ClusterPolynomial poly;
  poly.w = spec.w;
  poly.n = spec.n;
  poly.degree = cluster_degree(spec);
  poly.gammas.reserve(static_cast<size_t>(poly.degree));
  poly.log_gammas.reserve(static_cast<size_t>(poly.degree));
  for (int k = 1; k <= poly.degree; ++k) {
    poly.gammas.push_back(gamma_k(spec, k));
    poly.log_gammas.push_back(log_big(poly.gammas.back()));
  }
  return poly;
}

StationaryPoint solve_stationary_point(const ClusterPolynomial& poly) {
  if (poly.degree < 2)
    throw std::domain_error("solve_stationary_point: degree-1 polynomial has no stationary point "
                            "(n < 2w degenerate case)");

  // Root of Psi(mu) - mu Psi'(mu) = 1 - sum_{k>=2} (k-1) G_k mu^k in
  // t = ln mu: h(t) = ln sum_{k>=2} exp(ln(k-1) + ln G_k + k t) is strictly
  // increasing; solve h = 0.
  const auto h = [&](double t) {
    std::vector<double> terms;
    terms.reserve(static_cast<size_t>(poly.degree) - 1);
    for (int k = 2; k <= poly.degree; ++k)
      terms.push_back(std::log(static_cast<double>(k - 1)) + poly.log_gamma(k) + k * t);
    return log_sum_exp(terms);
  };

  double hi = -poly.log_gamma(2) / 2.0;  // k=2 term alone is 1 there, so h(hi) >= 0
  double lo = hi - 1.0;
  while (h(lo) > 0.0) {
    hi = lo;
    lo -= std::max(1.0, 0.5 * std::abs(lo));
  }
  for (int it = 0; it < 300 && hi - lo > 1e-13 * std::max(1.0, std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (h(mid) > 0.0)
      hi = mid;
    else
      lo = mid;
  }
  const double t = 0.5 * (lo + hi);

  std::vector<double> psi_terms{0.0};  // the constant 1
  for (int k = 1; k <= poly.degree; ++k) psi_terms.push_back(poly.log_gamma(k) + k * t);
  const double log_psi = log_sum_exp(psi_terms);

  StationaryPoint sp;
  sp.log_mu = t;
  sp.mu = std::exp(t);
  sp.log_max_ratio = t - log_psi;
  return sp;
}

BoundNumerator a_n_w(const PhfSpec& spec) {
  const ClusterPolynomial poly = build_cluster_polynomial(spec);
  if (poly.degree == 1) {
    // sup_mu mu/(1 + G_1 mu) = 1/G_1 is approached but never attained;
    // the bound it yields is still valid.
    return {poly.log_gamma(1), false};
  }
  return {-solve_stationary_point(poly).log_max_ratio, true};
}

double log_phi_prime_tau(const PhfSpec& spec) {
  if (spec.n == spec.w)
    throw std::invalid_argument("log_phi_prime_tau: requires n > w");
  const double log_scale = (spec.w - 1) * std::log(static_cast<double>(spec.n - spec.w)) -
                           log_big(factorial(static_cast<unsigned long>(spec.w - 1)));
  return a_n_w(spec).value - log_scale;
}

double phi_prime_limit(int w) {
  if (w < 2) throw std::invalid_argument("phi_prime_limit: requires w >= 2");
  return w * std::pow(1.0 + 1.0 / (w - 1), w - 1);
}

}  // namespace hashfam
