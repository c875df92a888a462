//
// graphlet5 - Copyright 2026 The graphlet5 Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef GRAPHLET5_COUNT_HPP_
#define GRAPHLET5_COUNT_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace graphlet5 {

/// Exact integer type for walk counts and graphlet counts.
///
/// Entries of g^k grow like n^(k-1) and the count formulae multiply walk
/// entries by degree polynomials, so the largest intermediate at n = 2000 is
/// on the order of n^6 ~ 6.4e19. That overflows int64 but leaves 18 decimal
/// digits of headroom in 128 bits.
using Count = __int128;

}  // namespace graphlet5

namespace Eigen {

template <>
struct NumTraits<graphlet5::Count> : GenericNumTraits<graphlet5::Count> {
  using Real = graphlet5::Count;
  using NonInteger = double;
  using Literal = graphlet5::Count;
  using Nested = graphlet5::Count;

  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4,
  };

  static inline graphlet5::Count highest() {
    return static_cast<graphlet5::Count>(~static_cast<unsigned __int128>(0) >>
                                         1);
  }
  static inline graphlet5::Count lowest() { return -highest() - 1; }
  static inline graphlet5::Count epsilon() { return 0; }
  static inline graphlet5::Count dummy_precision() { return 0; }
  static inline int digits10() { return 38; }
};

}  // namespace Eigen

namespace graphlet5 {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using CountMatrix = MatrixX<Count>;
using CountVector = VectorX<Count>;

/// Raised when a division that the formulae guarantee to be exact leaves a
/// remainder. Seeing one means a formula or its input is wrong.
class InexactDivision : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a count does not fit the requested narrower integer type.
class CountOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

std::string to_string(Count value);

/// Binomial coefficient C(x, r); zero whenever x < r, including negative x.
Count choose(Count x, int r);

/// numerator / denominator, throwing InexactDivision on a nonzero remainder.
Count exact_div(Count numerator, Count denominator, const char *what);

/// base^exponent with overflow detection.
Count checked_pow(Count base, int exponent);

std::int64_t narrow_to_int64(Count value);

}  // namespace graphlet5

#endif  // GRAPHLET5_COUNT_HPP_
