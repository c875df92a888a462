//
// graphlet5 - Copyright 2026 The graphlet5 Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef GRAPHLET5_INDUCED_HPP_
#define GRAPHLET5_INDUCED_HPP_

#include <cstdint>

#include "graphlet5/count.hpp"
#include "graphlet5/counts_five.hpp"

namespace graphlet5 {

/// A(i, j) is the number of copies of five-node graphlet i inside graphlet
/// j, rows and columns in kFiveGraphlets order. Strictly upper triangular.
struct InclusionMatrix {
  Eigen::Matrix<Count, 21, 21> entries;

  Count operator()(std::uint32_t contained, std::uint32_t container) const {
    return entries(five_slot(contained), five_slot(container));
  }
};

/// The constant inclusion matrix.
const InclusionMatrix &inclusion_matrix();

/// Solves (I + A) t = y by back-substitution.
InducedCountVector induced_from_noninduced(const FiveCountVector &y);

/// The same map written out as 21 explicit linear combinations.
InducedCountVector induced_explicit(const FiveCountVector &y);

/// y = (I + A) t.
FiveCountVector noninduced_from_induced(const InducedCountVector &t);

}  // namespace graphlet5

#endif  // GRAPHLET5_INDUCED_HPP_
