//
// graphlet5 - Copyright 2026 The graphlet5 Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef GRAPHLET5_FIVE_VECTOR_HPP_
#define GRAPHLET5_FIVE_VECTOR_HPP_

#include <cstdint>

#include "graphlet5/count.hpp"
#include "graphlet5/graphlet_id.hpp"

namespace graphlet5 {

using Vector21 = Eigen::Matrix<Count, 21, 1>;

/// Counts of the 21 five-node graphlets in kFiveGraphlets order, indexed by
/// canonical code. `Tag` keeps non-induced and induced vectors apart.
template <typename Tag>
struct FiveNodeVector {
  Vector21 values = Vector21::Zero();

  FiveNodeVector() = default;
  explicit FiveNodeVector(const Vector21 &v) : values(v) {}

  Count operator[](std::uint32_t code) const { return values(five_slot(code)); }
  Count &operator[](std::uint32_t code) { return values(five_slot(code)); }

  friend bool operator==(const FiveNodeVector &a, const FiveNodeVector &b) {
    return a.values == b.values;
  }
};

struct NonInducedTag {};
struct InducedTag {};

using FiveCountVector = FiveNodeVector<NonInducedTag>;
using InducedCountVector = FiveNodeVector<InducedTag>;

}  // namespace graphlet5

#endif  // GRAPHLET5_FIVE_VECTOR_HPP_
