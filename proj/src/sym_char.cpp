#include "eigenposet/sym_char.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "eigenposet/parallel.hpp"

namespace eigenposet {
namespace {

using boost::multiprecision::cpp_int;

void partitions_rec(int remaining, int largest, IntPartition& prefix, std::vector<IntPartition>& out)
{
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (int part = std::min(remaining, largest); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

void require_partition(const IntPartition& lambda)
{
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        require(lambda[i] > 0, "partition parts must be positive");
        require(i == 0 || lambda[i] <= lambda[i - 1], "partition parts must be weakly decreasing");
    }
}

int size_of(const IntPartition& lambda) { return std::accumulate(lambda.begin(), lambda.end(), 0); }

// Murnaghan-Nakayama on beta-numbers; mu is consumed from the front.
std::int64_t mn_character(const IntPartition& lambda, const IntPartition& mu, std::size_t next,
                          std::map<std::pair<IntPartition, std::size_t>, std::int64_t>& memo)
{
    if (next == mu.size()) return 1;
    const auto key = std::make_pair(lambda, next);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int k = mu[next];
    const int length = static_cast<int>(lambda.size());
    std::vector<int> beta(length);
    for (int i = 0; i < length; ++i) beta[i] = lambda[i] + (length - 1 - i);
    std::int64_t total = 0;
    for (int i = 0; i < length; ++i) {
        const int target = beta[i] - k;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int between = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++between;
        std::vector<int> moved = beta;
        moved[i] = target;
        std::sort(moved.rbegin(), moved.rend());
        IntPartition reduced;
        for (int j = 0; j < length; ++j)
            if (int part = moved[j] - (length - 1 - j); part > 0) reduced.push_back(part);
        const std::int64_t term = mn_character(reduced, mu, next + 1, memo);
        total += between % 2 ? -term : term;
    }
    memo.emplace(key, total);
    return total;
}

CharacterVector tabulate(int n, const std::function<std::int64_t(const IntPartition&)>& value)
{
    CharacterVector chi = CharacterVector::zero(n);
    for (std::size_t i = 0; i < chi.classes.size(); ++i) chi.values[i] = value(chi.classes[i]);
    return chi;
}

std::int64_t to_int64(const cpp_int& value, const char* what)
{
    if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min())
        throw BudgetExceeded(std::string(what) + ": value exceeds 64 bits");
    return static_cast<std::int64_t>(value);
}

}  // namespace

std::vector<IntPartition> partitions_of(int n)
{
    require(n >= 0, "partitions_of needs n >= 0");
    std::vector<IntPartition> out;
    IntPartition prefix;
    partitions_rec(n, n, prefix, out);
    return out;
}

std::string to_string(const IntPartition& lambda)
{
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < lambda.size(); ++i) out << (i ? "," : "") << lambda[i];
    out << ')';
    return out.str();
}

IntPartition parse_partition(const std::string& text)
{
    IntPartition lambda;
    std::string cleaned;
    for (char c : text) cleaned += (c == ',' || c == '(' || c == ')') ? ' ' : c;
    std::istringstream in(cleaned);
    int part = 0;
    while (in >> part) lambda.push_back(part);
    require(in.eof(), "cannot parse partition '" + text + "'");
    require_partition(lambda);
    return lambda;
}

std::uint64_t factorial(int n)
{
    require(n >= 0 && n <= 20, "factorial out of range");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::uint64_t centralizer_order(const IntPartition& mu)
{
    require_partition(mu);
    std::map<int, int> multiplicity;
    for (int part : mu) ++multiplicity[part];
    std::uint64_t z = 1;
    for (const auto& [part, count] : multiplicity) {
        for (int i = 0; i < count; ++i) z *= static_cast<std::uint64_t>(part);
        z *= factorial(count);
    }
    return z;
}

std::uint64_t class_size(const IntPartition& mu) { return factorial(size_of(mu)) / centralizer_order(mu); }

std::vector<int> class_representative(const IntPartition& mu)
{
    require_partition(mu);
    std::vector<int> perm(size_of(mu));
    int start = 1;
    for (int part : mu) {
        for (int i = 0; i < part; ++i) perm[start - 1 + i] = start + (i + 1) % part;
        start += part;
    }
    return perm;
}

IntPartition cycle_type(std::span<const int> perm)
{
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(n + 1, false);
    IntPartition type;
    for (int a = 1; a <= n; ++a) {
        if (seen[a]) continue;
        int length = 0;
        for (int b = a; !seen[b]; b = perm[b - 1]) {
            require(b >= 1 && b <= n, "not a permutation");
            seen[b] = true;
            ++length;
        }
        type.push_back(length);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

std::int64_t irreducible_character(const IntPartition& lambda, const IntPartition& mu)
{
    require_partition(lambda);
    require_partition(mu);
    require(size_of(lambda) == size_of(mu), "irreducible_character: sizes differ");
    thread_local std::map<std::pair<IntPartition, IntPartition>, std::int64_t> cache;
    const auto key = std::make_pair(lambda, mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    std::map<std::pair<IntPartition, std::size_t>, std::int64_t> memo;
    const std::int64_t value = mn_character(lambda, mu, 0, memo);
    cache.emplace(key, value);
    return value;
}

CharacterVector CharacterVector::zero(int n)
{
    CharacterVector chi;
    chi.n = n;
    chi.classes = partitions_of(n);
    chi.values.assign(chi.classes.size(), 0);
    return chi;
}

CharacterVector CharacterVector::trivial(int n)
{
    CharacterVector chi = zero(n);
    std::fill(chi.values.begin(), chi.values.end(), 1);
    return chi;
}

CharacterVector CharacterVector::irreducible(const IntPartition& lambda)
{
    return tabulate(size_of(lambda), [&](const IntPartition& mu) { return irreducible_character(lambda, mu); });
}

std::int64_t CharacterVector::at(const IntPartition& mu) const
{
    const auto it = std::find(classes.begin(), classes.end(), mu);
    require(it != classes.end(), "no such conjugacy class: " + eigenposet::to_string(mu));
    return values[it - classes.begin()];
}

bool CharacterVector::is_zero() const
{
    return std::all_of(values.begin(), values.end(), [](std::int64_t v) { return v == 0; });
}

std::string CharacterVector::to_string() const
{
    std::ostringstream out;
    for (std::size_t i = 0; i < classes.size(); ++i)
        out << eigenposet::to_string(classes[i]) << " : " << values[i] << '\n';
    return out.str();
}

CharacterVector operator+(const CharacterVector& a, const CharacterVector& b)
{
    require(a.n == b.n, "characters of different degrees");
    CharacterVector c = a;
    for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] += b.values[i];
    return c;
}

CharacterVector operator-(const CharacterVector& a, const CharacterVector& b) { return a + scaled(b, -1); }

CharacterVector scaled(const CharacterVector& a, std::int64_t factor)
{
    CharacterVector c = a;
    for (auto& v : c.values) v *= factor;
    return c;
}

std::int64_t inner_product(const CharacterVector& a, const CharacterVector& b)
{
    require(a.n == b.n, "characters of different degrees");
    cpp_int total = 0;
    for (std::size_t i = 0; i < a.classes.size(); ++i)
        total += cpp_int(class_size(a.classes[i])) * a.values[i] * b.values[i];
    const cpp_int order = factorial(a.n);
    if (total % order != 0) throw VerificationFailure("character inner product is not an integer");
    return to_int64(total / order, "inner product");
}

Decomposition decompose(const CharacterVector& chi)
{
    Decomposition parts;
    for (const auto& lambda : partitions_of(chi.n))
        if (std::int64_t m = inner_product(chi, CharacterVector::irreducible(lambda)); m != 0) parts.emplace_back(lambda, m);
    return parts;
}

CharacterVector recompose(int n, const Decomposition& parts)
{
    CharacterVector chi = CharacterVector::zero(n);
    for (const auto& [lambda, m] : parts) chi = chi + scaled(CharacterVector::irreducible(lambda), m);
    return chi;
}

CharacterVector young_permutation_character(std::span<const int> composition)
{
    std::vector<int> parts(composition.begin(), composition.end());
    for (int part : parts) require(part >= 0, "composition parts must be nonnegative");
    const int n = std::accumulate(parts.begin(), parts.end(), 0);
    return tabulate(n, [&](const IntPartition& mu) {
        // Ways to distribute the cycles of mu among the parts so each part is filled exactly.
        std::map<std::pair<std::size_t, std::vector<int>>, std::int64_t> memo;
        std::function<std::int64_t(std::size_t, std::vector<int>&)> count = [&](std::size_t c, std::vector<int>& room) {
            if (c == mu.size()) return std::int64_t{1};
            auto key = std::make_pair(c, room);
            if (auto it = memo.find(key); it != memo.end()) return it->second;
            std::int64_t ways = 0;
            for (auto& r : room) {
                if (r < mu[c]) continue;
                r -= mu[c];
                ways += count(c + 1, room);
                r += mu[c];
            }
            memo.emplace(std::move(key), ways);
            return ways;
        };
        return count(0, parts);
    });
}

CharacterVector ribbon_character(std::vector<int> composition)
{
    if (!composition.empty() && composition.front() == 0) composition.erase(composition.begin());
    for (int part : composition) require(part > 0, "ribbon composition parts must be positive");
    const int n = std::accumulate(composition.begin(), composition.end(), 0);
    if (composition.size() <= 1) return CharacterVector::trivial(n);
    const std::size_t cuts = composition.size() - 1;
    require(cuts < 63, "ribbon composition too long");
    CharacterVector chi = CharacterVector::zero(n);
    for (std::uint64_t kept = 0; kept < (std::uint64_t{1} << cuts); ++kept) {
        std::vector<int> coarser{composition[0]};
        for (std::size_t i = 0; i < cuts; ++i) {
            if (kept >> i & 1) coarser.push_back(composition[i + 1]);
            else coarser.back() += composition[i + 1];
        }
        const bool negative = (cuts - static_cast<std::size_t>(__builtin_popcountll(kept))) % 2;
        const CharacterVector h = young_permutation_character(coarser);
        chi = negative ? chi - h : chi + h;
    }
    return chi;
}

CharacterVector induced_cyclic_character(int n, int d)
{
    require(d >= 1 && n >= d && n / d == 1, "induced_cyclic_character needs floor(n/d) = 1");
    // The cosets of C_d x S_{n-d} are the d-cycles of S_n; count those commuting with g.
    std::vector<std::vector<int>> cycles;
    std::vector<int> chosen;
    std::function<void(int)> choose = [&](int from) {
        if (static_cast<int>(chosen.size()) == d) {
            std::vector<int> rest(chosen.begin() + 1, chosen.end());
            do {
                std::vector<int> cycle{chosen[0]};
                cycle.insert(cycle.end(), rest.begin(), rest.end());
                cycles.push_back(cycle);
            } while (std::next_permutation(rest.begin(), rest.end()));
            return;
        }
        for (int a = from; a <= n; ++a) {
            chosen.push_back(a);
            choose(a + 1);
            chosen.pop_back();
        }
    };
    choose(1);
    CharacterVector chi = tabulate(n, [&](const IntPartition& mu) {
        const auto g = class_representative(mu);
        std::int64_t fixed = 0;
        for (const auto& cycle : cycles) {
            // g c g^-1 = c  iff  g maps each step a -> c(a) to g(a) -> c(g(a)).
            std::vector<int> c(n + 1);
            for (int i = 0; i < d; ++i) c[cycle[i]] = cycle[(i + 1) % d];
            bool commutes = true;
            for (int i = 0; i < d && commutes; ++i) {
                const int a = cycle[i];
                const int ga = g[a - 1];
                commutes = c[ga] != 0 && c[ga] == g[c[a] - 1];
            }
            if (commutes) ++fixed;
        }
        return fixed;
    });
    return chi - CharacterVector::trivial(n);
}

CharacterVector top_homology_character(const FinitePoset& proper_part, int n, int top_degree, const LetterAction& action,
                                       std::uint64_t verify_budget)
{
    if (verify_budget > 0) {
        const BettiVector betti = betti_reduced(proper_part, verify_budget);
        const auto degree = betti.concentrated_degree();
        if (!betti.is_zero() && (!degree || *degree != top_degree))
            throw PreconditionViolated("homology is not concentrated in degree " + std::to_string(top_degree) + ": " +
                                       betti.to_string());
    }
    CharacterVector chi = CharacterVector::zero(n);
    parallel_for(chi.classes.size(), [&](std::size_t i) {
        const auto perm = class_representative(chi.classes[i]);
        const auto map = action(perm);
        // An automorphism fixing a chain setwise fixes it pointwise, so the
        // Lefschetz number is the reduced Euler characteristic of the fixed points.
        const std::int64_t euler = reduced_euler_char(fixed_subposet(proper_part, map));
        chi.values[i] = top_degree % 2 == 0 ? euler : -euler;
    });
    return chi;
}

CharacterVector top_homology_character(const PartitionPoset& poset, std::uint64_t verify_budget)
{
    const FinitePoset& order = poset.order();
    const auto top = order.top();
    require(top.has_value(), "top_homology_character needs a poset with a top");
    const auto rank = order.rank_function();
    require(rank.has_value(), "top_homology_character needs a graded poset");
    std::vector<int> keep, position(order.size(), -1);
    for (int x = 0; x < static_cast<int>(order.size()); ++x)
        if (x != *top) {
            position[x] = static_cast<int>(keep.size());
            keep.push_back(x);
        }
    const FinitePoset proper = order.induced(keep);
    const int top_degree = (*rank)[*top] - 1;
    const LetterAction action = [&](std::span<const int> perm) {
        const auto full = poset.action(perm);
        std::vector<int> map(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i) map[i] = position[full[keep[i]]];
        return map;
    };
    return top_homology_character(proper, poset.letters(), top_degree, action, verify_budget);
}

std::int64_t sphere_count(int n, int d)
{
    require(d > 1 && n >= 0, "sphere_count needs d > 1 and n >= 0");
    const int a = n / d;
    const cpp_int n_factorial = [&] {
        cpp_int f = 1;
        for (int i = 2; i <= n; ++i) f *= i;
        return f;
    }();
    cpp_int total = 0;
    for (int size = 0; size <= a; ++size)
        for (const auto& lambda : partitions_of(size)) {
            PointedType type;
            type.zero_size = n - d * size;
            for (int part : lambda) type.parts.push_back(d * part);
            const cpp_int orbit = n_factorial / stabilizer_order(type, d);
            cpp_int homology = 1;
            for (int i = 1; i < static_cast<int>(lambda.size()); ++i) homology *= 1 + i * d;
            const bool negative = (a + static_cast<int>(lambda.size())) % 2;
            const cpp_int term = orbit * homology;
            if (negative) total -= term;
            else total += term;
        }
    return to_int64(total, "sphere_count");
}

}  // namespace eigenposet
