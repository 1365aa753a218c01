#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eigenposet/dowling.hpp"
#include "eigenposet/errors.hpp"
#include "eigenposet/poset.hpp"

namespace eigenposet {

// Weakly decreasing positive parts; used both for cycle types and for shapes.
using IntPartition = std::vector<int>;

// All partitions of n, in decreasing lexicographic order: (n), (n-1,1), ...
std::vector<IntPartition> partitions_of(int n);
std::string to_string(const IntPartition& lambda);
IntPartition parse_partition(const std::string& text);

std::uint64_t factorial(int n);
std::uint64_t centralizer_order(const IntPartition& mu);
std::uint64_t class_size(const IntPartition& mu);
// Letters 1..n, cycles of mu on consecutive letters; perm[a-1] is the image of a.
std::vector<int> class_representative(const IntPartition& mu);
IntPartition cycle_type(std::span<const int> perm);

std::int64_t irreducible_character(const IntPartition& lambda, const IntPartition& mu);

struct CharacterVector {
    int n = 0;
    std::vector<IntPartition> classes;  // partitions_of(n)
    std::vector<std::int64_t> values;

    static CharacterVector zero(int n);
    static CharacterVector trivial(int n);
    static CharacterVector irreducible(const IntPartition& lambda);
    std::int64_t at(const IntPartition& mu) const;
    std::int64_t degree() const { return values.back(); }
    bool is_zero() const;
    std::string to_string() const;

    friend bool operator==(const CharacterVector&, const CharacterVector&) = default;
};

CharacterVector operator+(const CharacterVector& a, const CharacterVector& b);
CharacterVector operator-(const CharacterVector& a, const CharacterVector& b);
CharacterVector scaled(const CharacterVector& a, std::int64_t factor);

// Exact; throws VerificationFailure when the result is not an integer.
std::int64_t inner_product(const CharacterVector& a, const CharacterVector& b);

using Decomposition = std::vector<std::pair<IntPartition, std::int64_t>>;
// Nonzero multiplicities, shapes in partitions_of order.
Decomposition decompose(const CharacterVector& chi);
CharacterVector recompose(int n, const Decomposition& parts);

// Permutation character on the cosets of the Young subgroup of a composition.
CharacterVector young_permutation_character(std::span<const int> composition);
CharacterVector ribbon_character(std::vector<int> composition);
CharacterVector induced_cyclic_character(int n, int d);

using LetterAction = std::function<std::vector<int>(std::span<const int>)>;

// proper_part carries an S_n action: action(perm) is an automorphism of it.
// Homology is assumed concentrated in top_degree (checked when budget > 0).
CharacterVector top_homology_character(const FinitePoset& proper_part, int n, int top_degree, const LetterAction& action,
                                       std::uint64_t verify_budget = 0);
// The poset with its top removed, top_degree = rank(top) - 1.
CharacterVector top_homology_character(const PartitionPoset& poset, std::uint64_t verify_budget = 0);

std::int64_t sphere_count(int n, int d);

}  // namespace eigenposet
