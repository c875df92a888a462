//
// graphlet5 - Copyright 2026 The graphlet5 Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "graphlet5/induced.hpp"

namespace graphlet5 {
namespace {

// clang-format off
constexpr int kInclusion[21][21] = {
    { 0,  0,  1,  0,  0,  0,  1,  0,  0,  1,  0,  2,  1,  0,  0,  1,  0,  2,  1,  3,  5},
    { 0,  0,  2,  0,  2,  2,  5,  1,  4,  9,  6, 12,  4,  0,  4, 10, 10, 20, 20, 36, 60},
    { 0,  0,  0,  0,  0,  0,  2,  0,  0,  3,  0,  6,  2,  0,  0,  3,  0,  8,  4, 15, 30},
    { 0,  0,  0,  0,  1,  2,  2,  2,  4,  6,  6,  6,  4,  5,  7, 10, 14, 18, 24, 36, 60},
    { 0,  0,  0,  0,  0,  0,  2,  0,  2,  6,  0,  6,  0,  0,  1,  5,  4, 14, 12, 30, 60},
    { 0,  0,  0,  0,  0,  0,  1,  0,  1,  3,  6,  6,  0,  0,  2,  4,  8, 12, 16, 30, 60},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  3,  0,  6,  0,  0,  0,  2,  0, 10,  4, 24, 60},
    { 0,  0,  0,  0,  0,  0,  0,  0,  2,  3,  0,  0,  4,  0,  2,  6,  6, 12, 16, 30, 60},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  3,  0,  0,  0,  0,  0,  2,  2,  8,  8, 24, 60},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  2,  0,  6, 20},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  0,  0,  0,  1,  1,  2,  4, 10},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  3, 10},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  0,  2,  2,  6, 15},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  1,  2,  2,  4,  6, 12},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  2,  4,  6, 12, 24, 60},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  4,  4, 18, 60},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  1,  4,  9, 30},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  6, 30},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  3, 15},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, 10},
    { 0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0}
};
// clang-format on

InclusionMatrix build_inclusion_matrix() {
  InclusionMatrix a;
  for (int i = 0; i < 21; ++i) {
    for (int j = 0; j < 21; ++j) a.entries(i, j) = kInclusion[i][j];
  }
  return a;
}

}  // namespace

const InclusionMatrix &inclusion_matrix() {
  static const InclusionMatrix a = build_inclusion_matrix();
  return a;
}

InducedCountVector induced_from_noninduced(const FiveCountVector &y) {
  const Eigen::Matrix<Count, 21, 21> unit =
      Eigen::Matrix<Count, 21, 21>::Identity() + inclusion_matrix().entries;
  // Unit diagonal, so back-substitution never divides.
  return InducedCountVector(
      unit.triangularView<Eigen::UnitUpper>().solve(y.values));
}

InducedCountVector induced_explicit(const FiveCountVector &y) {
  InducedCountVector t;
  t[75] = y[75] - y[79] + y[95] - y[127] - 2 * y[223] + y[235] - y[239] + 2 * y[255] + y[507] - 3 * y[511] + 5 * y[1023];
  t[77] = y[77] - 2 * y[79] - 2 * y[87] - 2 * y[94] + 5 * y[95] - y[117] + 4 * y[119] - 9 * y[127] + 6 * y[222] - 12 * y[223] + 4 * y[235] + 4 * y[237] - 10 * y[239] - 10 * y[254] + 20 * y[255] + 20 * y[507] - 36 * y[511] + 60 * y[1023];
  t[79] = y[79] - 2 * y[95] + 3 * y[127] + 6 * y[223] - 2 * y[235] + 3 * y[239] - 8 * y[255] - 4 * y[507] + 15 * y[511] - 30 * y[1023];
  t[86] = y[86] - y[87] - 2 * y[94] + 2 * y[95] - 2 * y[117] + 4 * y[119] - 6 * y[127] + 6 * y[222] - 6 * y[223] + 4 * y[235] - 5 * y[236] + 7 * y[237] - 10 * y[239] - 14 * y[254] + 18 * y[255] + 24 * y[507] - 36 * y[511] + 60 * y[1023];
  t[87] = y[87] - 2 * y[95] - 2 * y[119] + 6 * y[127] + 6 * y[223] - y[237] + 5 * y[239] + 4 * y[254] - 14 * y[255] - 12 * y[507] + 30 * y[511] - 60 * y[1023];
  t[94] = y[94] - y[95] - y[119] + 3 * y[127] - 6 * y[222] + 6 * y[223] - 2 * y[237] + 4 * y[239] + 8 * y[254] - 12 * y[255] - 16 * y[507] + 30 * y[511] - 60 * y[1023];
  t[95] = y[95] - 3 * y[127] - 6 * y[223] - 2 * y[239] + 10 * y[255] + 4 * y[507] - 24 * y[511] + 60 * y[1023];
  t[117] = y[117] - 2 * y[119] + 3 * y[127] - 4 * y[235] - 2 * y[237] + 6 * y[239] + 6 * y[254] - 12 * y[255] - 16 * y[507] + 30 * y[511] - 60 * y[1023];
  t[119] = y[119] - 3 * y[127] - 2 * y[239] - 2 * y[254] + 8 * y[255] + 8 * y[507] - 24 * y[511] + 60 * y[1023];
  t[127] = y[127] - 2 * y[255] + 6 * y[511] - 20 * y[1023];
  t[222] = y[222] - y[223] - y[254] + y[255] + 2 * y[507] - 4 * y[511] + 10 * y[1023];
  t[223] = y[223] - y[255] + 3 * y[511] - 10 * y[1023];
  t[235] = y[235] - y[239] + 2 * y[255] + 2 * y[507] - 6 * y[511] + 15 * y[1023];
  t[236] = y[236] - y[237] + y[239] + 2 * y[254] - 2 * y[255] - 4 * y[507] + 6 * y[511] - 12 * y[1023];
  t[237] = y[237] - 2 * y[239] - 4 * y[254] + 6 * y[255] + 12 * y[507] - 24 * y[511] + 60 * y[1023];
  t[239] = y[239] - 4 * y[255] - 4 * y[507] + 18 * y[511] - 60 * y[1023];
  t[254] = y[254] - y[255] - 4 * y[507] + 9 * y[511] - 30 * y[1023];
  t[255] = y[255] - 6 * y[511] + 30 * y[1023];
  t[507] = y[507] - 3 * y[511] + 15 * y[1023];
  t[511] = y[511] - 10 * y[1023];
  t[1023] = y[1023];
  return t;
}

FiveCountVector noninduced_from_induced(const InducedCountVector &t) {
  const Vector21 y = t.values + inclusion_matrix().entries * t.values;
  return FiveCountVector(y);
}

}  // namespace graphlet5
