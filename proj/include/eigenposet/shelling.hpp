#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eigenposet/eigenposet.hpp"

namespace eigenposet {

struct AtomOrdering {
    FinitePoset poset;   // bounded
    std::vector<int> atoms;
};

struct RaoReport {
    bool holds = false;
    // Positions (i, j) in the ordering of the first failing pair; j alone
    // (i = -1) when the interval above the j-th atom has no suitable ordering.
    std::optional<std::pair<int, int>> counterexample;
    std::string message;
};

RaoReport check_rao_recursive(const AtomOrdering& ordering, std::uint64_t budget = default_budget());
RaoReport check_rao_sagan(const AtomOrdering& ordering);
bool verify_rao_recursive(const AtomOrdering& ordering, std::uint64_t budget = default_budget());
// Throws PreconditionViolated when some interval above an atom is not a semimodular lattice.
bool verify_rao_sagan(const AtomOrdering& ordering);

// E(W,zeta) with a bottom adjoined, atoms in lexicographic word order.
AtomOrdering lex_atom_order(const EigenPoset& eigen);
AtomOrdering lex_atom_order(const GroupParams& params, const BuildOptions& options = {});

enum class WitnessCase { FixedLetter, CrossReflection, DiagonalPair };
std::string to_string(WitnessCase which);

struct RaoWitness {
    WitnessCase which = WitnessCase::FixedLetter;
    int column = 0;  // 1-based column k of the first differing cycle column; 0 in the fixed-letter case
    ColoredPermutation r;
    std::optional<ColoredPermutation> s;
    WeightedPartition hyperplane;
    WeightedPartition C;
    EigenWord word_C;
};

// Needs word(A) < word(B).  Throws VerificationFailure when the constructed
// atom does not satisfy the required properties.
RaoWitness rao_witness(const WeightedPartition& A, const WeightedPartition& B, const GroupParams& params);

struct WitnessSummary {
    std::size_t pairs = 0;
    std::size_t fixed_letter = 0;
    std::size_t cross = 0;
    std::size_t diagonal = 0;
};

// Runs rao_witness on every lexicographically ordered pair of atoms.
WitnessSummary check_all_witnesses(const GroupParams& params, const BuildOptions& options = {});

}  // namespace eigenposet
