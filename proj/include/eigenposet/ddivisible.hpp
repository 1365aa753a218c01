#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "eigenposet/dowling.hpp"
#include "eigenposet/errors.hpp"

namespace eigenposet {

struct PointedDivisiblePoset {
    int n = 0;
    int d = 1;
    PartitionPoset poset;   // unweighted partitions (modulus 1)
    bool degenerate = false;  // n < d: a single point
};

PointedDivisiblePoset build_pointed_ddivisible(int n, int d, std::uint64_t budget = default_budget());

// Set partitions of {1..N} with every block size divisible by d, ordered by
// refinement; stored with an otherwise empty zero block.
PartitionPoset divisible_partition_poset(int letters, int d, std::uint64_t budget = default_budget());

struct EraseIsomorphism {
    bool applicable = false;  // d divides n + 1
    bool bijective = false;
    bool covers_match = false;
    bool holds() const { return applicable && bijective && covers_match; }
};

// The zero block {0} u S goes to S u {n+1}.
WeightedPartition erase_zero(const WeightedPartition& pi);
EraseIsomorphism check_erase_isomorphism(int n, int d, std::uint64_t budget = default_budget());

struct ZeroingMap {
    int n = 0;
    int d = 1;
    std::vector<int> image;  // source index -> target index
    bool order_preserving = false;
    bool rank_preserving = false;
    bool surjective = false;
    bool equivariant = false;
    // Number of source atoms over each target atom, in target index order.
    std::vector<std::size_t> atom_fibers;
    bool verified() const { return order_preserving && rank_preserving && surjective && equivariant; }
};

// Weight-forgetting map from balanced partitions to pointed d-divisible ones.
// Throws VerificationFailure when a property fails.
ZeroingMap zeroing_poset_map(int n, int d, std::uint64_t budget = default_budget());

struct TopMapReport {
    bool surjective = false;
    std::int64_t rank = 0;
    std::pair<std::int64_t, std::int64_t> dims;  // (source, target) top homology
    int degree = 0;
};

TopMapReport induced_top_map_surjective(int n, int d, std::uint64_t budget = default_budget());

}  // namespace eigenposet
