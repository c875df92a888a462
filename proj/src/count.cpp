//
// graphlet5 - Copyright 2026 The graphlet5 Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "graphlet5/count.hpp"

#include <algorithm>
#include <limits>

namespace graphlet5 {

std::string to_string(Count value) {
  if (value == 0) return "0";

  const bool negative = value < 0;
  // Work in the unsigned domain so the most negative value survives.
  unsigned __int128 magnitude =
      negative ? static_cast<unsigned __int128>(-(value + 1)) + 1
               : static_cast<unsigned __int128>(value);

  std::string digits;
  while (magnitude != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(magnitude % 10)));
    magnitude /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Count choose(Count x, int r) {
  if (r < 0 || x < r) return 0;
  Count result = 1;
  // result stays an integer: after step i it equals C(x - r + i, i).
  for (int i = 1; i <= r; ++i) {
    result = result * (x - r + i) / i;
  }
  return result;
}

Count exact_div(Count numerator, Count denominator, const char *what) {
  if (denominator == 0) {
    throw InexactDivision(std::string(what) + ": division by zero");
  }
  if (numerator % denominator != 0) {
    throw InexactDivision(std::string(what) + ": " + to_string(numerator) +
                          " is not divisible by " + to_string(denominator));
  }
  return numerator / denominator;
}

Count checked_pow(Count base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("checked_pow: negative exponent");
  Count result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (__builtin_mul_overflow(result, base, &result)) {
      throw CountOverflow("checked_pow: result exceeds 128 bits");
    }
  }
  return result;
}

std::int64_t narrow_to_int64(Count value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw CountOverflow("count " + to_string(value) +
                        " does not fit in a signed 64-bit integer");
  }
  return static_cast<std::int64_t>(value);
}

}  // namespace graphlet5
