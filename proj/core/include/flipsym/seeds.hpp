#pragma once

#include "flipsym/partition.hpp"
#include "flipsym/scheme.hpp"

namespace flipsym {

// Builds the starting scheme for a diagonal partition: one fixed tensor
// D_P (x) D_P (x) D_P per part (D_P the diagonal indicator of P), plus the
// standard-basis decomposition of the remainder grouped into G-orbits.
// Every orbit of the result is full, and verify_f2 holds.
// Throws std::invalid_argument if the partition is invalid for (n, g).
Scheme make_start(int n, Group g, const DiagonalPartition& p);

}  // namespace flipsym
