#pragma once

#include <vector>

#include "hashfam/bigint.hpp"
#include "hashfam/specs.hpp"

namespace hashfam {

/// The independent-set generating polynomial of the closed neighborhood of
/// one bad event in the PHF/SHF dependency graph, Psi(mu) = 1 + sum_k G_k mu^k,
/// where G_k counts families of k pairwise-disjoint w-subsets of [n] that all
/// intersect a fixed w-subset. Coefficients are kept exactly and in log form.
struct ClusterPolynomial {
  int w = 0;
  int n = 0;
  int degree = 0;                  // min(floor(n/w), w)
  std::vector<BigInt> gammas;      // G_1..G_degree
  std::vector<double> log_gammas;  // ln G_k

  const BigInt& gamma(int k) const { return gammas.at(k - 1); }
  double log_gamma(int k) const { return log_gammas.at(k - 1); }
};

int cluster_degree(const PhfSpec& spec);

/// Exact count of independent k-sets in the closed neighborhood:
///   G_k = 1/(k! (w!)^k) * sum_{i0=0}^{w-k} (w!/i0!) * ff(n-w,(k-1)w+i0)
///                          * [z^(w-i0)] ((1+z)^w - 1)^k
/// The division is exact; a remainder is an internal-consistency failure.
BigInt gamma_k(const PhfSpec& spec, int k);

/// The normalized coefficient G~_k with
///   G_k = C(w,k) * ((n-w)^(w-1)/(w-1)!)^k * G~_k,
/// evaluated directly from its double-sum form. The inner composition sum is
/// j! [z^j] g(z)^k with g(z) = sum_i z^i/((i+1) i!) prod_{s=1..i}(1-s/w),
/// by truncated series powering. Requires n > w.
double gamma_tilde(const PhfSpec& spec, int k);

ClusterPolynomial build_cluster_polynomial(const PhfSpec& spec);

struct StationaryPoint {
  double mu;             // the positive root of Psi(mu) - mu Psi'(mu) = 0
  double log_mu;
  double log_max_ratio;  // ln( mu* / Psi(mu*) ) = ln max_{mu>0} mu/Psi(mu)
};

/// Root found by bisection on t = ln mu with log-sum-exp evaluation;
/// Psi - mu Psi' is strictly decreasing for degree >= 2, so the root is
/// unique. Throws for degree-1 polynomials (no stationary point exists).
StationaryPoint solve_stationary_point(const ClusterPolynomial& poly);

struct BoundNumerator {
  double value;
  /// False in the degenerate case degree == 1 (n < 2w), where the value is
  /// the supremum ln G_1 of -ln(mu/Psi(mu)), approached but not attained.
  bool attained;
};

/// A_n(w) = ln[phi'_{w,n}(tau)] + (w-1) ln(n-w) - ln (w-1)!
///        = -ln max_{mu>0} mu/Psi(mu).
BoundNumerator a_n_w(const PhfSpec& spec);

/// ln phi'_{w,n}(tau); requires n > w.
double log_phi_prime_tau(const PhfSpec& spec);

/// lim_{n->inf} phi'_{w,n}(tau) = w (1 + 1/(w-1))^(w-1).
double phi_prime_limit(int w);

}  // namespace hashfam
