#include "hashfam/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace hashfam {

double log_big(const BigInt& value) {
  if (sgn(value) <= 0) throw std::domain_error("log_big: value must be positive");
  signed long exp2 = 0;
  // mantissa in [0.5,1), value = mantissa * 2^exp2
  const double mantissa = mpz_get_d_2exp(&exp2, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exp2) * M_LN2;
}

double log_big(const BigRat& value) {
  if (sgn(value) <= 0) throw std::domain_error("log_big: value must be positive");
  return log_big(BigInt(value.get_num())) - log_big(BigInt(value.get_den()));
}

}  // namespace hashfam
