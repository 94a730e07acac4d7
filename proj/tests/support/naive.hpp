#pragma once

#include <vector>

#include "homcoord/z2matrix.hpp"

namespace homcoord::testing {

/// Definition-level product: entry (i, j) is the parity of the dot product.
Z2Matrix naive_mat_mul(const Z2Matrix& a, const Z2Matrix& b);

/// Greedy left-to-right independent column selection over plain bool vectors;
/// deliberately shares no code with the packed elimination kernel.
std::vector<std::size_t> naive_earliest_basis(const Z2Matrix& a);

std::size_t naive_rank(const Z2Matrix& a);

}  // namespace homcoord::testing
