#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "eigenposet/errors.hpp"
#include "eigenposet/ddivisible.hpp"
#include "eigenposet/eigenposet.hpp"
#include "eigenposet/parallel.hpp"
#include "eigenposet/shelling.hpp"
#include "eigenposet/sym_char.hpp"

using namespace eigenposet;

namespace {

const std::uint64_t kBudget = 200'000'000;

struct Outcome {
    bool pass = false;
    std::string detail;
};

// Sphere counts, rows n = 2..9, columns d = 2..n.
const std::map<int, std::vector<std::int64_t>> kTable3{
    {2, {0}},
    {3, {2, 1}},
    {4, {1, 7, 5}},
    {5, {21, 19, 29, 23}},
    {6, {24, 91, 89, 143, 119}},
    {7, {510, 841, 209, 503, 839, 719}},
    {8, {918, 3529, 5251, 1343, 3359, 5759, 5039}},
    {9, {22246, 32367, 50275, 3023, 10079, 25919, 45359, 40319}},
};

std::int64_t table3(int n, int d) { return kTable3.at(n).at(d - 2); }

// Multiplicity rows of the decomposition tables, in column order; 0 is a blank.
const std::map<std::pair<int, int>, std::vector<int>> kSpecht{
    {{4, 2}, {0, 0, 0, 1}},
    {{4, 3}, {1, 0, 1, 1}},
    {{4, 4}, {0, 1, 1, 0}},
    {{5, 2}, {0, 1, 1, 1, 1, 1}},
    {{5, 3}, {1, 1, 1, 0, 1, 0}},
    {{5, 4}, {1, 1, 1, 2, 1, 0}},
    {{5, 5}, {0, 1, 2, 1, 0, 1}},
    {{6, 2}, {0, 0, 0, 0, 0, 1, 0, 1, 1, 0}},
    {{6, 3}, {0, 0, 1, 0, 2, 2, 1, 2, 1, 1}},
    {{6, 4}, {1, 2, 1, 0, 2, 1, 1, 1, 0, 0}},
    {{6, 5}, {1, 1, 2, 1, 4, 2, 1, 1, 1, 1}},
    {{6, 6}, {0, 2, 2, 1, 2, 2, 2, 1, 1, 0}},
    {{7, 2}, {0, 0, 0, 1, 2, 2, 2, 2, 5, 3, 2, 3, 2, 0}},
    {{7, 3}, {0, 1, 2, 1, 5, 4, 3, 3, 7, 4, 3, 3, 2, 1}},
    {{7, 4}, {1, 2, 1, 1, 2, 1, 0, 1, 1, 0, 0, 0, 0, 0}},
    {{7, 5}, {1, 2, 2, 1, 4, 2, 3, 2, 3, 1, 1, 0, 1, 0}},
    {{7, 6}, {1, 2, 2, 3, 6, 4, 3, 4, 5, 3, 3, 2, 1, 0}},
    {{7, 7}, {0, 2, 3, 2, 5, 2, 3, 3, 5, 3, 2, 2, 0, 1}},
};

const std::vector<std::array<int, 4>> kGeometricCases = [] {
    std::vector<std::array<int, 4>> cases;
    for (int n = 1; n <= 6; ++n)
        for (int d : {2, 3, 4}) cases.push_back({1, 1, n, d});
    for (int d : {2, 4, 6}) cases.push_back({2, 1, 3, d});
    for (int d : {2, 4}) cases.push_back({2, 2, 4, d});
    for (int d : {2, 3}) cases.push_back({3, 3, 3, d});
    for (int d : {2, 4}) cases.push_back({4, 4, 2, d});
    cases.push_back({4, 2, 2, 4});
    return cases;
}();

std::string name_of(const std::array<int, 4>& c)
{
    return "G(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) + ") d=" + std::to_string(c[3]);
}

// Degrees counted directly: m, 2m, ..., (n-1)m and nm/p.
int count_divisible_degrees(int m, int p, int n, int d)
{
    int a = 0;
    for (int i = 1; i < n; ++i) a += (i * m) % d == 0;
    a += (n * m / p) % d == 0;
    return a;
}

Outcome criterion1()
{
    const auto start = std::chrono::steady_clock::now();
    int mismatches = 0;
    for (int n = 2; n <= 9; ++n)
        for (int d = 2; d <= n; ++d) mismatches += sphere_count(n, d) != table3(n, d);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream detail;
    detail << "36 entries, " << mismatches << " mismatches, " << seconds << " s";
    return {mismatches == 0 && seconds < 1.0, detail.str()};
}

Outcome criterion2()
{
    int checked = 0;
    for (int n = 2; n <= 6; ++n)
        for (int d = 2; d <= n; ++d) {
            const PartitionPoset P = balanced_poset(n, d, kBudget);
            std::vector<int> keep;
            for (int x = 0; x < static_cast<int>(P.size()); ++x)
                if (x != *P.order().top()) keep.push_back(x);
            const BettiVector b = betti_reduced(P.order().induced(keep), kBudget);
            const int top = n / d - 1;
            for (int k = BettiVector::kMinDegree; k < top; ++k)
                if (b[k] != 0) return {false, "nonzero homology below the top degree for n=" + std::to_string(n)};
            if (b[top] != table3(n, d)) return {false, "wrong top Betti number for n=" + std::to_string(n)};
            ++checked;
        }
    return {true, std::to_string(checked) + " posets"};
}

Outcome criterion3()
{
    std::set<std::int64_t> identity_values;
    int checked = 0;
    for (int n = 2; n <= 9; ++n)
        for (int d = n / 2 + 1; d <= n; ++d) {
            if (d < 2) continue;
            const std::uint64_t verify = n <= 7 ? kBudget : 0;
            const CharacterVector chi = top_homology_character(balanced_poset(n, d, kBudget), verify);
            if (chi != induced_cyclic_character(n, d))
                return {false, "character mismatch at n=" + std::to_string(n) + " d=" + std::to_string(d)};
            if (chi.degree() != table3(n, d)) return {false, "identity value differs from the table"};
            identity_values.insert(chi.degree());
            ++checked;
        }
    const std::set<std::int64_t> listed{23, 29, 89, 119, 143, 209, 503, 719, 839, 1343, 3359, 5039, 5759, 3023, 10079, 25919, 40319, 45359};
    const bool covered = std::includes(identity_values.begin(), identity_values.end(), listed.begin(), listed.end());
    return {covered, std::to_string(checked) + " pairs (n<=9), all listed identity values reproduced"};
}

// Columns are the nontrivial shapes of n in reverse lexicographic order; that
// assignment is the unique one consistent with every row.
Outcome criterion4()
{
    for (const auto& [key, row] : kSpecht) {
        const auto [n, d] = key;
        const std::uint64_t verify = n <= 6 ? kBudget : 0;
        const CharacterVector chi = top_homology_character(balanced_poset(n, d, kBudget), verify);
        std::map<IntPartition, std::int64_t> multiplicity;
        for (const auto& [lambda, m] : decompose(chi)) {
            if (m < 0) return {false, "negative multiplicity"};
            multiplicity[lambda] = m;
        }
        const std::vector<IntPartition> shapes = partitions_of(n);
        std::vector<std::int64_t> got;
        std::int64_t dimension = 0;
        for (std::size_t i = 1; i < shapes.size(); ++i) {
            got.push_back(multiplicity[shapes[i]]);
            dimension += got.back() * irreducible_character(shapes[i], IntPartition(n, 1));
        }
        const std::vector<std::int64_t> expected(row.begin(), row.end());
        if (multiplicity[shapes.front()] != 0 || got != expected || dimension != table3(n, d))
            return {false, "multiplicities differ at n=" + std::to_string(n) + " d=" + std::to_string(d)};
    }
    return {true, std::to_string(kSpecht.size()) + " rows, column by column"};
}

Outcome criterion5()
{
    for (const auto& c : kGeometricCases) {
        const EigenPoset E = build_E(GroupParams::make(c[0], c[1], c[2], c[3]));
        if (!check_geometric_upper_intervals(E.poset.order())) return {false, name_of(c)};
    }
    return {true, std::to_string(kGeometricCases.size()) + " groups"};
}

EigenWord word(std::vector<int> fixed, std::vector<std::pair<std::vector<int>, std::vector<int>>> cycles, int modulus)
{
    EigenWord w;
    w.fixed_letters = std::move(fixed);
    for (auto& [support, colors] : cycles) w.cycles.emplace_back(support, colors, modulus);
    return w;
}

bool worked_examples(std::string& why)
{
    const GroupParams g8 = GroupParams::make(4, 2, 8, 3);
    const EigenWord a = word({4, 7}, {{{1, 3, 2}, {3, 6, 3}}, {{5, 6, 8}, {6, 6, 0}}}, 12);
    const EigenWord b1 = word({4, 8}, {{{1, 6, 5}, {6, 0, 6}}, {{2, 7, 3}, {0, 0, 0}}}, 12);
    const RaoWitness w1 = rao_witness(eigenspace_of_word(a, g8), eigenspace_of_word(b1, g8), g8);
    const bool case1 = w1.which == WitnessCase::FixedLetter &&
                       w1.r == ColoredPermutation::parse("[1,2,3,4,5,6,8,7] ; [0,0,0,0,0,0,0,0]", 12) &&
                       w1.word_C == word({4, 7}, {{{1, 6, 5}, {6, 0, 6}}, {{2, 8, 3}, {0, 0, 0}}}, 12);
    const EigenWord b2 = word({4, 7}, {{{1, 3, 2}, {6, 0, 6}}, {{5, 8, 6}, {0, 0, 0}}}, 12);
    const RaoWitness w2 = rao_witness(eigenspace_of_word(a, g8), eigenspace_of_word(b2, g8), g8);
    const bool case2b = w2.which == WitnessCase::DiagonalPair && w2.column == 1 &&
                        w2.r == ColoredPermutation::parse("[1,2,3,4,5,6,7,8] ; [9,0,0,0,0,0,0,0]", 12) && w2.s &&
                        *w2.s == ColoredPermutation::parse("[1,2,3,4,5,6,7,8] ; [0,3,0,0,0,0,0,0]", 12) &&
                        w2.word_C == word({4, 7}, {{{1, 3, 2}, {3, 0, 9}}, {{5, 8, 6}, {0, 0, 0}}}, 12);
    const GroupParams g9 = GroupParams::make(4, 2, 9, 16);
    const EigenWord a3 = word({4}, {{{1, 3, 2, 7}, {4, 8, 8, 0}}, {{5, 9, 6, 8}, {0, 4, 0, 0}}}, 16);
    const EigenWord b3 = word({4}, {{{1, 3, 9, 8}, {4, 12, 0, 4}}, {{2, 6, 5, 7}, {12, 0, 8, 0}}}, 16);
    const RaoWitness w3 = rao_witness(eigenspace_of_word(a3, g9), eigenspace_of_word(b3, g9), g9);
    const bool case2a = w3.which == WitnessCase::CrossReflection && w3.column == 2 &&
                        w3.r == ColoredPermutation::parse("[1,9,3,4,5,6,7,8,2] ; [0,4,0,0,0,0,0,0,12]", 16) &&
                        w3.word_C == word({4}, {{{1, 3, 2, 8}, {4, 8, 4, 4}}, {{5, 7, 9, 6}, {8, 4, 8, 0}}}, 16);
    if (!case1) why += " case 1 differs;";
    if (!case2a) why += " case 2a differs;";
    if (!case2b) why += " case 2b differs;";
    return case1 && case2a && case2b;
}

Outcome criterion6()
{
    std::size_t pairs = 0, recursive_runs = 0;
    for (const auto& c : kGeometricCases) {
        const GroupParams params = GroupParams::make(c[0], c[1], c[2], c[3]);
        const EigenPoset E = build_E(params);
        const AtomOrdering ordering = lex_atom_order(E);
        if (!verify_rao_sagan(ordering)) return {false, "Sagan criterion fails for " + name_of(c)};
        if (ordering.atoms.size() <= 12) {
            if (!verify_rao_recursive(ordering, kBudget)) return {false, "recursive check disagrees for " + name_of(c)};
            ++recursive_runs;
        }
        pairs += check_all_witnesses(params).pairs;
    }
    std::string why;
    if (!worked_examples(why)) return {false, "worked examples:" + why};
    return {true, std::to_string(recursive_runs) + " recursive checks, " + std::to_string(pairs) +
                      " witness pairs, three worked examples reproduced"};
}

Outcome criterion7()
{
    int checked = 0;
    for (const auto& c : kGeometricCases) {
        const GroupParams params = GroupParams::make(c[0], c[1], c[2], c[3]);
        if (params.order() > 5000) continue;
        const EigenPoset E = build_E(params);
        std::vector<WeightedPartition> built = E.poset.elements();
        std::sort(built.begin(), built.end());
        if (built != brute_force_eigenspaces(params, kBudget)) return {false, "brute force differs for " + name_of(c)};

        // Upward closure by filtering the ambient lattice, without joins.
        const auto minimal = E.poset.order().minimal_elements();
        std::vector<WeightedPartition> ambient;
        if (a_of_d(params) < params.n) {
            ambient = enumerate_weighted_partitions(params.n, params.modulus(), kBudget);
        } else {
            std::set<WeightedPartition> fixed;
            for_each_group_element(params, kBudget, [&](const ColoredPermutation& g) {
                fixed.insert(fixed_space(g).rescaled(params.modulus() / g.modulus()));
            });
            ambient.assign(fixed.begin(), fixed.end());
        }
        std::vector<WeightedPartition> closure;
        for (const auto& y : ambient)
            if (std::any_of(minimal.begin(), minimal.end(), [&](int x) { return leq(E.poset.element(x), y); }))
                closure.push_back(y);
        std::sort(closure.begin(), closure.end());
        if (closure != built) return {false, "upward closure differs for " + name_of(c)};

        for (const auto& x : built)
            for (const auto& h : ambient_atoms(params))
                if (!E.poset.contains(join(x, h))) return {false, "not closed under joins for " + name_of(c)};
        ++checked;
    }
    return {true, std::to_string(checked) + " groups with |W| <= 5000"};
}

Outcome criterion8()
{
    if (!same_subspace_poset(build_E(GroupParams::make(4, 4, 2, 1)).poset, build_E(GroupParams::make(4, 4, 2, 2)).poset))
        return {false, "E(G(4,4,2), zeta_1) differs from E(G(4,4,2), zeta_2)"};
    std::set<std::array<int, 3>> groups;
    for (const auto& c : kGeometricCases) groups.insert({c[0], c[1], c[2]});
    int pairs = 0;
    for (const auto& [m, p, n] : groups)
        for (int d = 1; d <= 8; ++d)
            for (int e = d + 1; e <= 8; ++e) {
                const IndependenceResult r = independence_check(GroupParams::make(m, p, n, d), e);
                if (!r.agrees())
                    return {false, "G(" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(n) + ") d=" +
                                       std::to_string(d) + " d'=" + std::to_string(e)};
                ++pairs;
            }
    return {true, std::to_string(pairs) + " pairs"};
}

Outcome criterion9()
{
    int checked = 0;
    for (int m = 1; m <= 6; ++m)
        for (int p = 1; p <= m; ++p) {
            if (m % p) continue;
            for (int n = 1; n <= 6; ++n)
                for (int d = 1; d <= 12; ++d) {
                    const ArrangementClass c = classify_arrangement(GroupParams::make(m, p, n, d));
                    const int a = count_divisible_degrees(m, p, n, d);
                    if ((c.verdict == ArrangementVerdict::EqualsReflectionArrangement) != (a == n) ||
                        (c.verdict == ArrangementVerdict::FreeKPi1Hyperplane) != (a == n - 1))
                        return {false, "verdict wrong"};
                    std::string product;
                    for (int i = 1; i <= n; ++i) product += "z" + std::to_string(i);
                    const bool lemma = m % d == 0 && (n * m / p) % d != 0;
                    if ((c.detail == product) != lemma) return {false, "lemma detail wrong"};
                    ++checked;
                }
        }
    return {true, std::to_string(checked) + " parameter tuples"};
}

Outcome criterion10()
{
    int checked = 0;
    for (int n = 2; n <= 7; ++n)
        for (int d : {2, 3}) {
            if (n < d) continue;
            const CharacterVector chi = top_homology_character(build_pointed_ddivisible(n, d, kBudget).poset, kBudget);
            bool ok;
            if (n % d == 0) {
                ok = chi.is_zero();
            } else {
                std::vector<int> composition{n - d * (n / d)};
                for (int i = 0; i < n / d; ++i) composition.push_back(d);
                ok = chi == ribbon_character(composition);
            }
            if (!ok) return {false, "n=" + std::to_string(n) + " d=" + std::to_string(d)};
            ++checked;
        }
    return {true, std::to_string(checked) + " pairs"};
}

Outcome criterion11()
{
    int maps = 0;
    for (int n = 2; n <= 7; ++n)
        for (int d = 2; d <= n; ++d) {
            if (!zeroing_poset_map(n, d, kBudget).verified()) return {false, "zeroing map"};
            ++maps;
        }
    std::ostringstream record;
    for (int n = 2; n <= 6; ++n)
        for (int d : {2, 3}) {
            if (n < d) continue;
            const TopMapReport r = induced_top_map_surjective(n, d, kBudget);
            record << " (" << n << "," << d << "):" << r.rank << "/" << r.dims.second << (r.surjective ? "onto" : "not-onto");
        }
    return {true, std::to_string(maps) + " maps verified; induced rank/target dim:" + record.str()};
}

}  // namespace

int main()
{
    set_worker_threads(std::max(1u, std::thread::hardware_concurrency()));
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Table 3 sphere counts", criterion1},
        {"homology concentration and dimension", criterion2},
        {"a(d)=1 character identity", criterion3},
        {"Specht decomposition tables", criterion4},
        {"geometric upper intervals", criterion5},
        {"CL-shellability via atom orderings and witnesses", criterion6},
        {"upper order ideal and brute force", criterion7},
        {"independence of the eigenvalue", criterion8},
        {"K(pi,1) and free classifier", criterion9},
        {"ribbon theorem", criterion10},
        {"zeroing map and top-homology harness", criterion11},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        const auto start = std::chrono::steady_clock::now();
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && outcome.pass;
        std::cout << (outcome.pass ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].first << ": " << outcome.detail << " ["
                  << seconds << " s]" << std::endl;
    }
    // Exceptional groups are outside this artifact; the criterion asks only
    // that the compensating property suites above succeed.
    std::cout << (all ? "PASS " : "FAIL ")
              << "12 exceptional-group tables: not reproduced (out of scope), compensating suites 1-11 "
              << (all ? "passed" : "did not all pass") << std::endl;
    return all ? 0 : 1;
}
