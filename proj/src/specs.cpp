#include "hashfam/specs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hashfam {

PhfSpec::PhfSpec(int n_, int m_, int w_) : n(n_), m(m_), w(w_) {
  if (w < 2) throw std::invalid_argument("PhfSpec: w must be at least 2 (got w=" + std::to_string(w) + ")");
  if (w > n) throw std::invalid_argument("PhfSpec: need w <= n (got w=" + std::to_string(w) + ", n=" + std::to_string(n) + ")");
  if (m < 2) throw std::invalid_argument("PhfSpec: alphabet m must be at least 2 (got m=" + std::to_string(m) + ")");
}

ShfSpec::ShfSpec(int n_, int m_, std::vector<int> parts_) : n(n_), m(m_), parts(std::move(parts_)) {
  if (parts.size() < 2) throw std::invalid_argument("ShfSpec: need at least 2 parts");
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("ShfSpec: part sizes must be positive");
  }
  std::sort(parts.begin(), parts.end());
  const int w = weight();
  if (w < 2 || w > n)
    throw std::invalid_argument("ShfSpec: need 2 <= sum(parts) <= n (got w=" + std::to_string(w) + ", n=" + std::to_string(n) + ")");
  if (m < 2) throw std::invalid_argument("ShfSpec: alphabet m must be at least 2 (got m=" + std::to_string(m) + ")");
}

int ShfSpec::weight() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

}  // namespace hashfam
