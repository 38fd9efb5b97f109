#pragma once

#include <gmpxx.h>

namespace hashfam {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Natural log of a positive big integer, via mantissa/exponent split
/// (no precision loss converting huge integers through double).
double log_big(const BigInt& value);

/// Natural log of a positive rational.
double log_big(const BigRat& value);

}  // namespace hashfam
