#include "eigenposet/eigenposet.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "eigenposet/parallel.hpp"

namespace eigenposet {
namespace {

int zeta_exponent(const GroupParams& params) { return params.d == 1 ? 0 : params.zeta(); }

std::optional<WeightedBlock> block_of_cycle(const ColoredCycle& cycle, const GroupParams& params)
{
    if (params.d > 1) return cycle_eigenspace(cycle, params);
    const ColoredPermutation g = ColoredPermutation::from_cycles(params.n, cycle.modulus(), std::span(&cycle, 1));
    const WeightedPartition fixed = fixed_space(g);
    const int label = fixed.block_of(cycle.support().front());
    if (label == 0) return std::nullopt;
    WeightedBlock block;
    for (int letter : cycle.support()) block.emplace_back(letter, fixed.weight(letter));
    return block;
}

}  // namespace

std::string EigenWord::to_string() const
{
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < fixed_letters.size(); ++i) out << (i ? "," : "") << fixed_letters[i];
    out << ';';
    for (std::size_t i = 0; i < cycles.size(); ++i) out << (i ? ", " : " ") << cycles[i].to_string();
    out << ')';
    return out.str();
}

std::strong_ordering lex_compare(const ColoredCycle& a, const ColoredCycle& b)
{
    require(a.length() == b.length(), "lex_compare: cycles of different length");
    const int len = a.length();
    for (int k = 0; k < len; ++k) {
        const int next = (k + 1) % len;
        if (auto c = a.support()[k] <=> b.support()[k]; c != 0) return c;
        if (auto c = a.support()[next] <=> b.support()[next]; c != 0) return c;
        if (auto c = a.colors()[k] <=> b.colors()[k]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering lex_compare(const EigenWord& a, const EigenWord& b)
{
    require(a.fixed_letters.size() == b.fixed_letters.size() && a.cycles.size() == b.cycles.size(),
            "lex_compare: words of different shape");
    for (std::size_t i = 0; i < a.fixed_letters.size(); ++i)
        if (auto c = a.fixed_letters[i] <=> b.fixed_letters[i]; c != 0) return c;
    for (std::size_t i = 0; i < a.cycles.size(); ++i)
        if (auto c = lex_compare(a.cycles[i], b.cycles[i]); c != 0) return c;
    return std::strong_ordering::equal;
}

WeightedPartition eigenspace_of_word(const EigenWord& word, const GroupParams& params)
{
    std::vector<int> block(params.n + 1, 0), weight(params.n + 1, 0);
    int label = 0;
    for (const auto& cycle : word.cycles) {
        auto blk = block_of_cycle(cycle, params);
        require(blk.has_value(), "word cycle " + cycle.to_string() + " has no eigenvector");
        ++label;
        for (const auto& [letter, w] : *blk) {
            require(letter <= params.n && block[letter] == 0, "word cycles overlap or exceed n");
            block[letter] = label;
            weight[letter] = w;
        }
    }
    return WeightedPartition::from_labels(params.modulus(), block, weight);
}

EigenWord word_of(const WeightedPartition& maximal, const GroupParams& params)
{
    require(maximal.size() == params.n && maximal.modulus() == params.modulus(), "word_of: element does not match params");
    const int a = a_of_d(params);
    const int ell = ell_of_d(params.m, params.d);
    const int modulus = params.modulus();
    const int step = params.root_step();
    const int zeta = zeta_exponent(params);
    require(maximal.block_count() == a, "word_of: not a maximal eigenspace (block count differs from a(d))");

    EigenWord word;
    for (int x : maximal.zero_block())
        if (x != 0) word.fixed_letters.push_back(x);
    for (const auto& members : maximal.blocks()) {
        require(static_cast<int>(members.size()) == ell, "word_of: block size differs from l(d)");
        std::vector<int> support(ell, 0);
        for (int x : members) {
            const int w = maximal.weight(x);
            int position = -1;
            for (int j = 0; j < ell; ++j)
                if (mod(static_cast<long long>(j) * zeta - w, step) == 0) position = j;
            require(position >= 0 && support[position] == 0, "word_of: weights do not come from a cycle in G(m,1,n)");
            support[position] = x;
        }
        std::vector<int> colors(ell);
        long long used = 0;
        for (int j = 0; j + 1 < ell; ++j) {
            colors[j] = mod(static_cast<long long>(maximal.weight(support[j])) - maximal.weight(support[j + 1]) + zeta, modulus);
            used += colors[j];
        }
        colors[ell - 1] = mod(static_cast<long long>(ell) * zeta - used, modulus);
        word.cycles.emplace_back(std::move(support), std::move(colors), modulus);
    }
    require(eigenspace_of_word(word, params) == maximal, "word_of: round trip failed");
    return word;
}

std::optional<ColoredPermutation> realize(const EigenWord& word, const GroupParams& params)
{
    const int modulus = params.modulus();
    const int step = params.root_step();
    const int zeta = zeta_exponent(params);
    const int p = params.p;
    const int m = params.m;
    long long units = 0;
    for (const auto& cycle : word.cycles)
        for (int c : cycle.colors()) {
            if (c % step != 0) return std::nullopt;
            units += c / step;
        }
    const int need = mod(-units, p);

    // A cycle of length len on leftover letters with total color exponent
    // step*U must not have the eigenvalue: step*U != len*zeta (mod M).
    auto pick_units = [&](int len, int residue) -> std::optional<int> {
        const long long target = static_cast<long long>(len) * zeta;
        for (int u = residue; u < m; u += p) {
            if (mod(static_cast<long long>(u) * step - target, modulus) != 0) return u;
        }
        return std::nullopt;
    };

    const int r = static_cast<int>(word.fixed_letters.size());
    std::vector<std::vector<char>> reach(r + 1, std::vector<char>(p, 0));
    reach[0][0] = 1;
    for (int k = 1; k <= r; ++k)
        for (int s = 0; s < p; ++s)
            for (int len = 1; len <= k && !reach[k][s]; ++len)
                for (int t = 0; t < p && !reach[k][s]; ++t)
                    if (reach[k - len][mod(s - t, p)] && pick_units(len, t)) reach[k][s] = 1;
    if (!reach[r][need]) return std::nullopt;

    std::vector<ColoredCycle> cycles = word.cycles;
    int k = r, s = need, pos = 0;
    while (k > 0) {
        bool placed = false;
        for (int len = 1; len <= k && !placed; ++len)
            for (int t = 0; t < p && !placed; ++t) {
                if (!reach[k - len][mod(s - t, p)]) continue;
                auto u = pick_units(len, t);
                if (!u) continue;
                std::vector<int> support(word.fixed_letters.begin() + pos, word.fixed_letters.begin() + pos + len);
                std::vector<int> colors(len, 0);
                colors[0] = *u * step;
                cycles.emplace_back(std::move(support), std::move(colors), modulus);
                pos += len;
                k -= len;
                s = mod(s - t, p);
                placed = true;
            }
        if (!placed) throw VerificationFailure("realize: reachability table inconsistent");
    }
    ColoredPermutation g = ColoredPermutation::from_cycles(params.n, modulus, cycles);
    if (!g.in_group(params) || eigenspace(g, params) != eigenspace_of_word(word, params))
        throw VerificationFailure("realize: constructed element " + g.to_string() + " is wrong");
    return g;
}

std::vector<EigenWord> maximal_eigenspace_words(const GroupParams& params, const BuildOptions& options)
{
    const int n = params.n;
    const int a = a_of_d(params);
    const int ell = ell_of_d(params.m, params.d);
    const int modulus = params.modulus();
    const int step = params.root_step();
    const int zeta = zeta_exponent(params);
    if (a * ell > n) throw VerificationFailure("a(d) * l(d) exceeds n for " + to_string(params));
    const int fixed_target = n - a * ell;

    std::vector<EigenWord> words;
    std::uint64_t candidates = 0;
    std::vector<char> used(n + 1, 0);
    EigenWord current;

    std::function<void(int)> place = [&](int from) {
        int x = from;
        while (x <= n && used[x]) ++x;
        if (x > n) {
            if (static_cast<int>(current.cycles.size()) != a) return;
            check_budget(++candidates, options.budget, "maximal eigenspace candidates");
            if (realize(current, params)) words.push_back(current);
            return;
        }
        if (static_cast<int>(current.fixed_letters.size()) < fixed_target) {
            used[x] = 1;
            current.fixed_letters.push_back(x);
            place(x + 1);
            current.fixed_letters.pop_back();
            used[x] = 0;
        }
        if (static_cast<int>(current.cycles.size()) >= a) return;
        used[x] = 1;
        std::vector<int> support{x};
        std::vector<int> colors;
        std::function<void()> extend = [&] {
            if (static_cast<int>(support.size()) == ell) {
                long long sum = 0;
                for (int c : colors) sum += c;
                std::vector<int> full = colors;
                full.push_back(mod(static_cast<long long>(ell) * zeta - sum, modulus));
                current.cycles.emplace_back(support, std::move(full), modulus);
                place(x + 1);
                current.cycles.pop_back();
                return;
            }
            for (int y = x + 1; y <= n; ++y) {
                if (used[y]) continue;
                used[y] = 1;
                support.push_back(y);
                for (int u = 0; u < params.m; ++u) {
                    colors.push_back(u * step);
                    extend();
                    colors.pop_back();
                }
                support.pop_back();
                used[y] = 0;
            }
        };
        if (ell == 1) {
            current.cycles.emplace_back(support, std::vector<int>{mod(zeta, modulus)}, modulus);
            place(x + 1);
            current.cycles.pop_back();
        } else {
            extend();
        }
        used[x] = 0;
    };
    place(1);
    std::sort(words.begin(), words.end(), [](const EigenWord& u, const EigenWord& v) { return lex_compare(u, v) < 0; });
    return words;
}

std::vector<WeightedPartition> brute_force_eigenspaces(const GroupParams& params, std::uint64_t budget)
{
    std::set<WeightedPartition> found;
    for_each_group_element(params, budget, [&](const ColoredPermutation& g) { found.insert(eigenspace(g, params)); });
    return {found.begin(), found.end()};
}

std::vector<WeightedPartition> maximal_eigenspaces(const GroupParams& params, const BuildOptions& options)
{
    std::vector<WeightedPartition> out;
    for (const auto& word : maximal_eigenspace_words(params, options)) out.push_back(eigenspace_of_word(word, params));
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw VerificationFailure("two words give the same maximal eigenspace");

    if (options.cross_check && params.order() <= options.brute_force_limit) {
        const auto all = brute_force_eigenspaces(params, options.budget);
        std::vector<WeightedPartition> largest;
        for (const auto& x : all) {
            bool is_min = true;
            for (const auto& y : all)
                if (y != x && leq(y, x)) {
                    is_min = false;
                    break;
                }
            if (is_min) largest.push_back(x);
        }
        if (largest != out)
            throw VerificationFailure("maximal eigenspace generator disagrees with brute force for " + to_string(params));
    }
    return out;
}

std::vector<WeightedPartition> ambient_atoms(const GroupParams& params)
{
    if (a_of_d(params) == params.n) return reflection_hyperplanes(params, params.modulus());
    return dowling_atoms(params.n, params.modulus());
}

EigenPoset build_E(const GroupParams& params, const BuildOptions& options)
{
    const auto generators = maximal_eigenspaces(params, options);
    const auto atoms = ambient_atoms(params);
    return EigenPoset{params, upward_closure(generators, atoms, options.budget)};
}

bool same_subspace_poset(const PartitionPoset& a, const PartitionPoset& b)
{
    if (a.letters() != b.letters() || a.size() != b.size()) return false;
    const int common = std::lcm(a.modulus(), b.modulus());
    auto encode = [&](const PartitionPoset& P) {
        std::vector<std::string> keys;
        for (const auto& e : P.elements()) keys.push_back(e.rescaled(common / P.modulus()).to_string());
        std::set<std::pair<std::string, std::string>> covers;
        for (const auto& [x, y] : P.order().covers()) covers.emplace(keys[x], keys[y]);
        std::sort(keys.begin(), keys.end());
        return std::make_pair(keys, covers);
    };
    return encode(a) == encode(b);
}

bool check_geometric_upper_intervals(const FinitePoset& poset)
{
    if (!poset.top()) return false;
    std::vector<char> ok(poset.size(), 0);
    parallel_for(poset.size(), [&](std::size_t x) {
        ok[x] = lattice_tests(poset.upper_interval(static_cast<int>(x))).is_geometric ? 1 : 0;
    });
    return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

IndependenceResult independence_check(const GroupParams& params, int other_d, const BuildOptions& options)
{
    const GroupParams other = GroupParams::make(params.m, params.p, params.n, other_d);
    IndependenceResult result;
    result.posets_equal = same_subspace_poset(build_E(params, options).poset, build_E(other, options).poset);
    result.degree_sets_equal = A_of_d(params) == A_of_d(other);
    return result;
}

std::string to_string(ArrangementVerdict verdict)
{
    switch (verdict) {
    case ArrangementVerdict::EqualsReflectionArrangement: return "EQUALS_REFLECTION_ARRANGEMENT";
    case ArrangementVerdict::FreeKPi1Hyperplane: return "FREE_KPI1_HYPERPLANE";
    case ArrangementVerdict::Neither: return "NEITHER";
    case ArrangementVerdict::Empty: return "EMPTY";
    }
    return "NEITHER";
}

ArrangementClass classify_arrangement(const GroupParams& params)
{
    const int a = a_of_d(params);
    const int n = params.n;
    ArrangementClass result;
    if (a == n) {
        result.verdict = ArrangementVerdict::EqualsReflectionArrangement;
        result.detail = "reflection arrangement";
    } else if (a == n - 1) {
        result.verdict = ArrangementVerdict::FreeKPi1Hyperplane;
        const int last = n * params.m / params.p;
        if (params.m % params.d == 0 && last % params.d != 0) {
            for (int i = 1; i <= n; ++i) result.detail += "z" + std::to_string(i);
        } else if (n == 2) {
            result.detail = "lines through the origin";
        }
    } else if (a == 0) {
        result.verdict = ArrangementVerdict::Empty;
    } else {
        result.verdict = ArrangementVerdict::Neither;
    }
    return result;
}

std::vector<std::int64_t> complement_cohomology(const GroupParams& params, const BuildOptions& options)
{
    const int n = params.n;
    const EigenPoset E = build_E(params, options);
    const bool whole_space_present = a_of_d(params) == n;
    const FinitePoset lattice = whole_space_present ? E.poset.order() : E.poset.order().with_bottom("C^n");
    const int bottom = whole_space_present ? *lattice.bottom() : static_cast<int>(E.poset.size());

    std::vector<std::int64_t> cohomology(2 * n + 1, 0);
    for (int x = 0; x < static_cast<int>(E.poset.size()); ++x) {
        if (x == bottom) continue;
        const int codim = n - E.poset.element(x).block_count();
        const BettiVector betti = interval_betti(lattice, bottom, x, options.budget);
        for (int k = BettiVector::kMinDegree; k <= betti.max_degree(); ++k) {
            if (betti[k] == 0) continue;
            const int degree = 2 * codim - k - 2;
            if (degree < 0 || degree > 2 * n) throw VerificationFailure("complement cohomology degree out of range");
            cohomology[degree] += betti[k];
        }
    }
    return cohomology;
}

}  // namespace eigenposet
