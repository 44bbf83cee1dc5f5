#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "flipsym/symmetry.hpp"

namespace flipsym {

// A partition of {1..n} into disjoint nonempty parts, written
// `{1,5},{2,4},{3}`.  Indices are 1-based; each part is kept sorted.
// Under C3xZ2 the reversed set {n+1-i : i in P} of every part must itself
// be a part.
struct DiagonalPartition {
    std::vector<std::vector<int>> parts;

    friend bool operator==(const DiagonalPartition&, const DiagonalPartition&) = default;
};

// Parses comma-separated brace groups; throws std::invalid_argument on
// malformed input.  Partition axioms are checked by validate_partition.
DiagonalPartition parse_partition(std::string_view text);

std::string to_string(const DiagonalPartition& p);

// True iff the parts are disjoint nonempty subsets covering {1..n} and,
// for C3xZ2, the reversal-closure condition holds.  On failure *reason
// names the violated condition.
bool validate_partition(const DiagonalPartition& p, int n, Group g, std::string* reason = nullptr);

}  // namespace flipsym
