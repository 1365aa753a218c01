#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eigenposet/dowling.hpp"
#include "eigenposet/errors.hpp"
#include "eigenposet/grouprep.hpp"

namespace eigenposet {

// Fixed letters, then disjoint cycles ordered by minimal letter.
struct EigenWord {
    std::vector<int> fixed_letters;
    std::vector<ColoredCycle> cycles;

    std::string to_string() const;
    friend bool operator==(const EigenWord&, const EigenWord&) = default;
};

std::strong_ordering lex_compare(const ColoredCycle& a, const ColoredCycle& b);
std::strong_ordering lex_compare(const EigenWord& a, const EigenWord& b);

struct BuildOptions {
    std::uint64_t budget = default_budget();
    // Groups at most this large are cross-checked against all of their elements.
    std::uint64_t brute_force_limit = 5000;
    bool cross_check = true;
};

WeightedPartition eigenspace_of_word(const EigenWord& word, const GroupParams& params);
EigenWord word_of(const WeightedPartition& maximal, const GroupParams& params);

// An element of G(m,p,n) whose eigenspace is exactly that of the word, if any.
std::optional<ColoredPermutation> realize(const EigenWord& word, const GroupParams& params);

// Words of all maximal eigenspaces, in lexicographic order.
std::vector<EigenWord> maximal_eigenspace_words(const GroupParams& params, const BuildOptions& options = {});
// Sorted by canonical form.
std::vector<WeightedPartition> maximal_eigenspaces(const GroupParams& params, const BuildOptions& options = {});

// { V(g, zeta) : g in W }, sorted and deduplicated.
std::vector<WeightedPartition> brute_force_eigenspaces(const GroupParams& params, std::uint64_t budget);

// Atoms of the lattice in which E(W,zeta) sits as an upper ideal.
std::vector<WeightedPartition> ambient_atoms(const GroupParams& params);

struct EigenPoset {
    GroupParams params;
    PartitionPoset poset;
};

EigenPoset build_E(const GroupParams& params, const BuildOptions& options = {});

// Equal as posets of subspaces of C^n, after bringing both to a common modulus.
bool same_subspace_poset(const PartitionPoset& a, const PartitionPoset& b);

bool check_geometric_upper_intervals(const FinitePoset& poset);

struct IndependenceResult {
    bool posets_equal = false;
    bool degree_sets_equal = false;
    bool agrees() const { return posets_equal == degree_sets_equal; }
};

IndependenceResult independence_check(const GroupParams& params, int other_d, const BuildOptions& options = {});

enum class ArrangementVerdict { EqualsReflectionArrangement, FreeKPi1Hyperplane, Neither, Empty };

struct ArrangementClass {
    ArrangementVerdict verdict = ArrangementVerdict::Neither;
    std::string detail;
};

std::string to_string(ArrangementVerdict verdict);
ArrangementClass classify_arrangement(const GroupParams& params);

// Reduced cohomology dimensions of the complement of the union of proper
// eigenspaces, indexed by degree 0..2n.
std::vector<std::int64_t> complement_cohomology(const GroupParams& params, const BuildOptions& options = {});

}  // namespace eigenposet
