#pragma once

// Arbitrary-precision rationals. mpq_class keeps values canonical (reduced,
// positive denominator) as long as every construction from a raw
// numerator/denominator pair goes through make_rat().

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace shamsuddin {

using BigRat = mpq_class;
using BigInt = mpz_class;

BigRat make_rat(long num, long den = 1);
BigRat make_rat(const BigInt& num, const BigInt& den);

/// Parses "n" or "n/m" (optional leading '-'); throws std::invalid_argument.
BigRat parse_rat(std::string_view text);

std::string to_string(const BigRat& r);

/// Least common multiple of a range of denominators.
template <typename Range>
BigInt common_denominator(const Range& values) {
  BigInt l = 1;
  for (const BigRat& v : values) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  return l;
}

}  // namespace shamsuddin
