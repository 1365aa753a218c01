#include "eigenposet/shelling.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "eigenposet/parallel.hpp"

namespace eigenposet {
namespace {

using Bits = boost::dynamic_bitset<>;

class RaoSearch {
public:
    RaoSearch(const FinitePoset& poset, std::uint64_t budget) : poset_(poset), budget_(budget), length_(poset.size(), 0)
    {
        const auto& order = poset.linear_extension();
        for (auto it = order.rbegin(); it != order.rend(); ++it)
            for (int y : poset.upper_covers(*it)) length_[*it] = std::max(length_[*it], length_[y] + 1);
    }

    int length_above(int x) const { return length_[x]; }

    // Atoms of [a,1^] lying above some element of `earlier`.
    std::vector<int> inherited(int a, const std::vector<int>& earlier) const
    {
        Bits above(poset_.size());
        for (int e : earlier) above |= poset_.up_set(e);
        std::vector<int> out;
        for (int z : poset_.upper_covers(a))
            if (above.test(z)) out.push_back(z);
        return out;
    }

    // Condition (ii) for atom a placed after `earlier`; returns the first
    // offending earlier atom.
    std::optional<int> second_condition(int a, const std::vector<int>& earlier) const
    {
        const auto q = inherited(a, earlier);
        Bits reachable(poset_.size());
        for (int z : q) reachable |= poset_.up_set(z);
        for (int e : earlier) {
            const Bits common = poset_.up_set(e) & poset_.up_set(a);
            if (!common.is_subset_of(reachable)) return e;
        }
        return std::nullopt;
    }

    // Does [x,1^] admit a recursive atom ordering putting `first` first?
    bool admits(int x, std::vector<int> first)
    {
        if (length_[x] <= 2) return true;
        std::sort(first.begin(), first.end());
        std::ostringstream key;
        key << x << ':';
        for (int f : first) key << f << ',';
        if (auto it = memo_.find(key.str()); it != memo_.end()) return it->second;

        const auto& atoms = poset_.upper_covers(x);
        const std::size_t t = atoms.size();
        Bits required(t);
        for (std::size_t i = 0; i < t; ++i)
            if (std::binary_search(first.begin(), first.end(), atoms[i])) required.set(i);

        std::set<Bits> seen;
        std::vector<Bits> stack{Bits(t)};
        seen.insert(stack.back());
        bool found = false;
        while (!stack.empty()) {
            const Bits state = stack.back();
            stack.pop_back();
            if (state.all()) {
                found = true;
                break;
            }
            check_budget(++visited_, budget_, "recursive atom ordering search");
            std::vector<int> earlier;
            for (std::size_t i = 0; i < t; ++i)
                if (state.test(i)) earlier.push_back(atoms[i]);
            const bool in_required_phase = !required.is_subset_of(state);
            for (std::size_t i = t; i-- > 0;) {
                if (state.test(i)) continue;
                if (in_required_phase && !required.test(i)) continue;
                Bits next = state;
                next.set(i);
                if (seen.count(next)) continue;
                if (second_condition(atoms[i], earlier)) continue;
                if (!admits(atoms[i], inherited(atoms[i], earlier))) continue;
                seen.insert(next);
                stack.push_back(std::move(next));
            }
        }
        memo_.emplace(key.str(), found);
        return found;
    }

private:
    const FinitePoset& poset_;
    std::uint64_t budget_;
    std::uint64_t visited_ = 0;
    std::vector<int> length_;
    std::unordered_map<std::string, bool> memo_;
};

void validate_ordering(const AtomOrdering& ordering)
{
    const auto bottom = ordering.poset.bottom();
    require(bottom.has_value() && ordering.poset.top().has_value(), "atom ordering needs a bounded poset");
    auto expected = ordering.poset.atoms();
    auto given = ordering.atoms;
    std::sort(expected.begin(), expected.end());
    std::sort(given.begin(), given.end());
    require(expected == given, "atom ordering does not list exactly the atoms");
}

std::string position_message(const char* what, int i, int j)
{
    std::ostringstream out;
    out << what << " fails";
    if (i >= 0) out << " for atoms " << i + 1 << " and " << j + 1;
    else out << " above atom " << j + 1;
    return out.str();
}

}  // namespace

RaoReport check_rao_recursive(const AtomOrdering& ordering, std::uint64_t budget)
{
    validate_ordering(ordering);
    RaoSearch search(ordering.poset, budget);
    RaoReport report;
    if (search.length_above(*ordering.poset.bottom()) <= 2) {
        report.holds = true;
        return report;
    }
    std::vector<int> earlier;
    std::unordered_map<int, int> position;
    for (std::size_t j = 0; j < ordering.atoms.size(); ++j) {
        const int a = ordering.atoms[j];
        if (auto bad = search.second_condition(a, earlier)) {
            report.counterexample = std::make_pair(position[*bad], static_cast<int>(j));
            report.message = position_message("condition (ii)", position[*bad], static_cast<int>(j));
            return report;
        }
        if (!search.admits(a, search.inherited(a, earlier))) {
            report.counterexample = std::make_pair(-1, static_cast<int>(j));
            report.message = position_message("condition (i)", -1, static_cast<int>(j));
            return report;
        }
        position[a] = static_cast<int>(j);
        earlier.push_back(a);
    }
    report.holds = true;
    return report;
}

RaoReport check_rao_sagan(const AtomOrdering& ordering)
{
    validate_ordering(ordering);
    for (int a : ordering.atoms) {
        const LatticeReport lattice = lattice_tests(ordering.poset.upper_interval(a));
        if (!lattice.is_lattice || !lattice.is_semimodular)
            throw PreconditionViolated("interval above atom " + ordering.poset.label(a) + " is not a semimodular lattice");
    }
    RaoSearch search(ordering.poset, default_budget());
    RaoReport report;
    std::vector<int> earlier;
    std::unordered_map<int, int> position;
    for (std::size_t j = 0; j < ordering.atoms.size(); ++j) {
        const int a = ordering.atoms[j];
        if (auto bad = search.second_condition(a, earlier)) {
            report.counterexample = std::make_pair(position[*bad], static_cast<int>(j));
            report.message = position_message("condition (ii)", position[*bad], static_cast<int>(j));
            return report;
        }
        position[a] = static_cast<int>(j);
        earlier.push_back(a);
    }
    report.holds = true;
    return report;
}

bool verify_rao_recursive(const AtomOrdering& ordering, std::uint64_t budget)
{
    return check_rao_recursive(ordering, budget).holds;
}

bool verify_rao_sagan(const AtomOrdering& ordering) { return check_rao_sagan(ordering).holds; }

AtomOrdering lex_atom_order(const EigenPoset& eigen)
{
    const auto& order = eigen.poset.order();
    std::vector<std::pair<EigenWord, int>> labelled;
    for (int x : order.minimal_elements()) labelled.emplace_back(word_of(eigen.poset.element(x), eigen.params), x);
    std::sort(labelled.begin(), labelled.end(),
              [](const auto& u, const auto& v) { return lex_compare(u.first, v.first) < 0; });
    AtomOrdering out{order.with_bottom("0^"), {}};
    for (const auto& [word, x] : labelled) out.atoms.push_back(x);
    return out;
}

AtomOrdering lex_atom_order(const GroupParams& params, const BuildOptions& options)
{
    return lex_atom_order(build_E(params, options));
}

std::string to_string(WitnessCase which)
{
    switch (which) {
    case WitnessCase::FixedLetter: return "1";
    case WitnessCase::CrossReflection: return "2a";
    case WitnessCase::DiagonalPair: return "2b";
    }
    return "?";
}

RaoWitness rao_witness(const WeightedPartition& A, const WeightedPartition& B, const GroupParams& params)
{
    require(params.d > 1, "rao_witness needs d > 1");
    const EigenWord word_a = word_of(A, params);
    const EigenWord word_b = word_of(B, params);
    require(lex_compare(word_a, word_b) < 0, "rao_witness needs word(A) < word(B)");
    const int n = params.n;
    const int modulus = params.modulus();

    auto swap_letters = [&](int x, int y, int color_x, int color_y) {
        std::vector<int> one_line(n), colors(n, 0);
        for (int i = 0; i < n; ++i) one_line[i] = i + 1;
        one_line[x - 1] = y;
        one_line[y - 1] = x;
        colors[x - 1] = color_x;
        colors[y - 1] = color_y;
        return ColoredPermutation(std::move(one_line), std::move(colors), modulus);
    };
    auto diagonal = [&](int x, int color) {
        std::vector<int> one_line(n), colors(n, 0);
        for (int i = 0; i < n; ++i) one_line[i] = i + 1;
        colors[x - 1] = color;
        return ColoredPermutation(std::move(one_line), std::move(colors), modulus);
    };

    WitnessCase which = WitnessCase::FixedLetter;
    int column = 0;
    std::optional<ColoredPermutation> r, s;
    std::optional<WeightedPartition> C;

    const auto mismatch = std::mismatch(word_a.fixed_letters.begin(), word_a.fixed_letters.end(), word_b.fixed_letters.begin());
    if (mismatch.first != word_a.fixed_letters.end()) {
        r = swap_letters(*mismatch.first, *mismatch.second, 0, 0);
        C = act(*r, B);
    } else {
        std::size_t j = 0;
        while (j < word_a.cycles.size() && word_a.cycles[j] == word_b.cycles[j]) ++j;
        if (j == word_a.cycles.size()) throw VerificationFailure("rao_witness: equal words");
        const ColoredCycle& sigma = word_a.cycles[j];
        const ColoredCycle& tau = word_b.cycles[j];
        const int len = sigma.length();
        int k = 0;
        while (k < len) {
            const int next = (k + 1) % len;
            if (sigma.support()[k] != tau.support()[k])
                throw VerificationFailure("rao_witness: cycles differ in a leading letter");
            if (sigma.support()[next] != tau.support()[next] || sigma.colors()[k] != tau.colors()[k]) break;
            ++k;
        }
        column = k + 1;
        const int next = (k + 1) % len;
        const int delta = sigma.colors()[k];
        const int epsilon = tau.colors()[k];
        if (sigma.support()[next] < tau.support()[next]) {
            which = WitnessCase::CrossReflection;
            r = swap_letters(sigma.support()[next], tau.support()[next], epsilon - delta, delta - epsilon);
            C = act(*r, B);
        } else if (sigma.support()[next] == tau.support()[next]) {
            which = WitnessCase::DiagonalPair;
            r = diagonal(tau.support()[k], delta - epsilon);
            s = diagonal(tau.support()[len - 1], epsilon - delta);
            const auto h = realize(word_b, params);
            if (!h) throw VerificationFailure("rao_witness: B is not realizable");
            const ColoredPermutation shifted = compose(*h, compose(*r, *s));
            if (!shifted.in_group(params)) throw VerificationFailure("rao_witness: h r s is not in W");
            C = eigenspace(shifted, params);
        } else {
            throw VerificationFailure("rao_witness: words are not in lexicographic order");
        }
    }

    const WeightedPartition H = fixed_space(*r);
    const std::string context = " (" + word_a.to_string() + " vs " + word_b.to_string() + ")";
    if (H.block_count() != n - 1) throw VerificationFailure("rao_witness: r is not a reflection" + context);
    if (C->block_count() != a_of_d(params)) throw VerificationFailure("rao_witness: C is not maximal" + context);
    const EigenWord word_c = word_of(*C, params);
    if (!realize(word_c, params)) throw VerificationFailure("rao_witness: C is not an eigenspace of W" + context);
    if (lex_compare(word_c, word_b) >= 0) throw VerificationFailure("rao_witness: word(C) is not below word(B)" + context);
    const WeightedPartition b_cap_h = join(B, H);
    if (!leq(*C, b_cap_h)) throw VerificationFailure("rao_witness: B and H do not meet inside C" + context);
    if (!leq(b_cap_h, join(A, B))) throw VerificationFailure("rao_witness: A and B do not meet inside H" + context);
    return RaoWitness{which, column, *r, s, H, *C, word_c};
}

WitnessSummary check_all_witnesses(const GroupParams& params, const BuildOptions& options)
{
    std::vector<WeightedPartition> atoms;
    for (const auto& word : maximal_eigenspace_words(params, options)) atoms.push_back(eigenspace_of_word(word, params));
    const std::size_t t = atoms.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = i + 1; j < t; ++j) pairs.emplace_back(i, j);
    check_budget(pairs.size(), options.budget, "witness pairs");
    std::atomic<std::size_t> fixed{0}, cross{0}, diagonal{0};
    parallel_for(pairs.size(), [&](std::size_t i) {
        const RaoWitness w = rao_witness(atoms[pairs[i].first], atoms[pairs[i].second], params);
        switch (w.which) {
        case WitnessCase::FixedLetter: ++fixed; break;
        case WitnessCase::CrossReflection: ++cross; break;
        case WitnessCase::DiagonalPair: ++diagonal; break;
        }
    });
    return WitnessSummary{pairs.size(), fixed.load(), cross.load(), diagonal.load()};
}

}  // namespace eigenposet
