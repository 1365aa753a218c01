#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "eigenposet/poset.hpp"

namespace eigenposet {

// A weighted partition of {0,...,n} with weights in Z/M, encoding the subspace
//   z_a = 0 for a in the zero block,
//   omega^{w(a)} z_a equal across each nonzero block.
// Always stored canonically: blocks numbered 1..l by minimal letter, the
// minimal letter of each block has weight 0, zero-block letters weight 0.
class WeightedPartition {
public:
    // Bottom element: all singletons.
    WeightedPartition(int n, int modulus);

    static WeightedPartition top(int n, int modulus);
    // block[a] is an arbitrary label for letter a (0..n), label 0 meaning the
    // zero block; block[0] must be 0.  weight[a] is taken mod M.
    static WeightedPartition from_labels(int modulus, std::span<const int> block, std::span<const int> weight);
    // Inverse of to_string.
    static WeightedPartition parse(std::string_view text, int n, int modulus);

    int size() const { return static_cast<int>(block_.size()) - 1; }
    int modulus() const { return modulus_; }
    int block_count() const { return blocks_; }
    int block_of(int letter) const { return block_[letter]; }
    int weight(int letter) const { return weight_[letter]; }
    bool is_top() const { return blocks_ == 0; }

    std::vector<int> zero_block() const;
    std::vector<std::vector<int>> blocks() const;
    std::vector<int> block_sizes() const;

    std::string to_string() const;
    // Compact byte encoding for hashing.
    std::string key() const;

    // Letter a (1..n) is sent to perm[a-1]; weights travel with their letters.
    WeightedPartition relabeled(std::span<const int> perm) const;
    // Same partition viewed with modulus M*factor (weights scaled).
    WeightedPartition rescaled(int factor) const;

    friend auto operator<=>(const WeightedPartition&, const WeightedPartition&) = default;

private:
    WeightedPartition() = default;
    void canonicalize();

    int modulus_ = 1;
    int blocks_ = 0;
    std::vector<int> block_;
    std::vector<int> weight_;
};

bool leq(const WeightedPartition& lower, const WeightedPartition& upper);
// Intersection of the two subspaces.
WeightedPartition join(const WeightedPartition& a, const WeightedPartition& b);

// The hyperplanes z_i = omega^x z_j (i<j) and z_i = 0.
WeightedPartition dowling_atom(int n, int modulus, int i, int j, int x);
WeightedPartition coordinate_atom(int n, int modulus, int i);
std::vector<WeightedPartition> dowling_atoms(int n, int modulus);

WeightedPartition zeroing(const WeightedPartition& pi);
// Same blocks as an element of the modulus-1 lattice.
WeightedPartition forget_weights(const WeightedPartition& pi);

bool is_balanced(const WeightedPartition& pi, int d);

struct PointedType {
    int zero_size = 0;    // size of the zero block minus one
    std::vector<int> parts;  // nonzero block sizes, weakly decreasing

    friend auto operator<=>(const PointedType&, const PointedType&) = default;
};

PointedType type_of(const WeightedPartition& pi);
std::string to_string(const PointedType& type);
std::uint64_t stabilizer_order(const PointedType& type, int d);
std::uint64_t dowling_interval_homology_dim(int ell, int d);

// A finite poset whose elements are weighted partitions, indexed in sorted
// canonical order, with the symmetric group acting by relabeling letters.
class PartitionPoset {
public:
    PartitionPoset() = default;
    // Elements in any order; covers index into that order.  Elements are
    // re-sorted by text form.
    PartitionPoset(std::vector<WeightedPartition> elements, std::vector<std::pair<int, int>> covers);

    int letters() const { return n_; }
    int modulus() const { return modulus_; }
    std::size_t size() const { return elements_.size(); }
    const std::vector<WeightedPartition>& elements() const { return elements_; }
    const WeightedPartition& element(int i) const { return elements_[i]; }
    const FinitePoset& order() const { return order_; }
    // -1 when absent.
    int find(const WeightedPartition& pi) const;
    bool contains(const WeightedPartition& pi) const { return find(pi) >= 0; }

    // Element permutation induced by a letter permutation (perm[a-1] = image of a).
    std::vector<int> action(std::span<const int> perm) const;

    // Same element set and cover relation.
    friend bool operator==(const PartitionPoset& a, const PartitionPoset& b);

private:
    friend PartitionPoset partition_poset_from_order(std::vector<WeightedPartition> elements);
    void index_elements();

    int n_ = 0;
    int modulus_ = 1;
    std::vector<WeightedPartition> elements_;
    std::unordered_map<std::string, int> index_;
    FinitePoset order_;
};

// Covers are obtained by joining with atoms; result contains the generators
// and everything above them.
PartitionPoset upward_closure(std::span<const WeightedPartition> generators,
                              std::span<const WeightedPartition> atoms, std::uint64_t budget);

// Elements given explicitly, order from leq via the generic builder.
PartitionPoset partition_poset_from_order(std::vector<WeightedPartition> elements);

PartitionPoset dowling_lattice(int n, int modulus, std::uint64_t budget);
// All weighted partitions of {0..n} with modulus M, by direct enumeration.
std::vector<WeightedPartition> enumerate_weighted_partitions(int n, int modulus, std::uint64_t budget);

std::vector<WeightedPartition> balanced_partitions(int n, int d, std::uint64_t budget);
PartitionPoset balanced_poset(int n, int d, std::uint64_t budget);

}  // namespace eigenposet
