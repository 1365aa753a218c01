#include "eigenposet/ddivisible.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "eigenposet/exact_rank.hpp"
#include "eigenposet/poset.hpp"

namespace eigenposet {
namespace {

std::vector<int> transposition(int n)
{
    std::vector<int> perm(n);
    for (int a = 1; a <= n; ++a) perm[a - 1] = a;
    if (n >= 2) std::swap(perm[0], perm[1]);
    return perm;
}

std::vector<int> long_cycle(int n)
{
    std::vector<int> perm(n);
    for (int a = 1; a <= n; ++a) perm[a - 1] = a % n + 1;
    return perm;
}

bool nonzero_blocks_divisible(const WeightedPartition& pi, int d)
{
    const auto sizes = pi.block_sizes();
    return std::all_of(sizes.begin(), sizes.end(), [d](int s) { return s % d == 0; });
}

FinitePoset without_top(const FinitePoset& order)
{
    std::vector<int> keep;
    for (int x = 0; x < static_cast<int>(order.size()); ++x)
        if (x != *order.top()) keep.push_back(x);
    return order.induced(keep);
}

}  // namespace

PointedDivisiblePoset build_pointed_ddivisible(int n, int d, std::uint64_t budget)
{
    require(n >= 1 && d >= 1, "pointed d-divisible poset needs n, d >= 1");
    const int a = n / d;
    PointedDivisiblePoset out;
    out.n = n;
    out.d = d;
    out.degenerate = n < d;
    const auto all = enumerate_weighted_partitions(n, 1, budget);
    std::vector<WeightedPartition> generators, expected;
    for (const auto& pi : all) {
        const PointedType type = type_of(pi);
        if (type.zero_size == n - d * a && type.parts == std::vector<int>(a, d)) generators.push_back(pi);
        if (nonzero_blocks_divisible(pi, d)) expected.push_back(pi);
    }
    out.poset = upward_closure(generators, dowling_atoms(n, 1), budget);
    std::sort(expected.begin(), expected.end(),
              [](const auto& x, const auto& y) { return x.to_string() < y.to_string(); });
    if (out.poset.elements() != expected)
        throw VerificationFailure("pointed d-divisible poset differs from the block-size characterization");
    return out;
}

PartitionPoset divisible_partition_poset(int letters, int d, std::uint64_t budget)
{
    std::vector<WeightedPartition> elements;
    for (const auto& pi : enumerate_weighted_partitions(letters, 1, budget))
        if (pi.zero_block().size() == 1 && nonzero_blocks_divisible(pi, d)) elements.push_back(pi);
    return partition_poset_from_order(std::move(elements));
}

WeightedPartition erase_zero(const WeightedPartition& pi)
{
    const int n = pi.size();
    std::vector<int> block(n + 2), weight(n + 2, 0);
    block[0] = 0;
    for (int a = 1; a <= n; ++a) block[a] = pi.block_of(a) == 0 ? pi.block_count() + 1 : pi.block_of(a);
    block[n + 1] = pi.block_count() + 1;
    return WeightedPartition::from_labels(1, block, weight);
}

EraseIsomorphism check_erase_isomorphism(int n, int d, std::uint64_t budget)
{
    EraseIsomorphism result;
    result.applicable = (n + 1) % d == 0;
    if (!result.applicable) return result;
    const PartitionPoset source = build_pointed_ddivisible(n, d, budget).poset;
    const PartitionPoset target = divisible_partition_poset(n + 1, d, budget);
    std::vector<int> map(source.size());
    std::set<int> hit;
    for (std::size_t i = 0; i < source.size(); ++i) {
        map[i] = target.find(erase_zero(source.element(static_cast<int>(i))));
        if (map[i] >= 0) hit.insert(map[i]);
    }
    result.bijective = source.size() == target.size() && hit.size() == target.size() &&
                       std::none_of(map.begin(), map.end(), [](int j) { return j < 0; });
    if (!result.bijective) return result;
    std::set<std::pair<int, int>> mapped;
    for (const auto& [x, y] : source.order().covers()) mapped.emplace(map[x], map[y]);
    const auto& target_covers = target.order().covers();
    result.covers_match = mapped == std::set<std::pair<int, int>>(target_covers.begin(), target_covers.end());
    return result;
}

ZeroingMap zeroing_poset_map(int n, int d, std::uint64_t budget)
{
    const PartitionPoset source = balanced_poset(n, d, budget);
    const PartitionPoset target = build_pointed_ddivisible(n, d, budget).poset;
    ZeroingMap z;
    z.n = n;
    z.d = d;
    z.image.resize(source.size());
    for (std::size_t i = 0; i < source.size(); ++i) {
        z.image[i] = target.find(forget_weights(source.element(static_cast<int>(i))));
        if (z.image[i] < 0) throw VerificationFailure("zeroing leaves the pointed d-divisible poset");
    }
    const FinitePoset& src = source.order();
    const FinitePoset& tgt = target.order();
    z.order_preserving = std::all_of(src.covers().begin(), src.covers().end(),
                                     [&](const auto& c) { return tgt.leq(z.image[c.first], z.image[c.second]); });
    const auto src_rank = src.rank_function();
    const auto tgt_rank = tgt.rank_function();
    z.rank_preserving = src_rank && tgt_rank;
    for (std::size_t i = 0; z.rank_preserving && i < source.size(); ++i)
        z.rank_preserving = (*src_rank)[i] == (*tgt_rank)[z.image[i]];
    std::vector<std::size_t> fiber(target.size(), 0);
    for (int j : z.image) ++fiber[j];
    z.surjective = std::none_of(fiber.begin(), fiber.end(), [](std::size_t f) { return f == 0; });
    z.equivariant = true;
    for (const auto& g : {transposition(n), long_cycle(n)}) {
        const auto on_source = source.action(g);
        const auto on_target = target.action(g);
        for (std::size_t i = 0; z.equivariant && i < source.size(); ++i)
            z.equivariant = z.image[on_source[i]] == on_target[z.image[i]];
    }
    for (int t : tgt.minimal_elements()) z.atom_fibers.push_back(fiber[t]);
    if (!z.verified())
        throw VerificationFailure("zeroing map check failed for n=" + std::to_string(n) + ", d=" + std::to_string(d));
    return z;
}

TopMapReport induced_top_map_surjective(int n, int d, std::uint64_t budget)
{
    require(n >= d, "induced top map needs n >= d");
    const ZeroingMap z = zeroing_poset_map(n, d, budget);
    const PartitionPoset source = balanced_poset(n, d, budget);
    const PartitionPoset target = build_pointed_ddivisible(n, d, budget).poset;
    const int top_source = *source.order().top();
    const int top_target = *target.order().top();

    std::vector<int> source_keep, target_position(target.size(), -1);
    for (int x = 0; x < static_cast<int>(source.size()); ++x)
        if (x != top_source) source_keep.push_back(x);
    for (int x = 0, next = 0; x < static_cast<int>(target.size()); ++x)
        if (x != top_target) target_position[x] = next++;

    const ChainComplex S = order_complex(without_top(source.order()), budget);
    const ChainComplex T = order_complex(without_top(target.order()), budget);
    TopMapReport report;
    report.degree = n / d - 1;
    const int r = report.degree;
    const auto top_count = [r](const ChainComplex& c) { return static_cast<std::int64_t>(c.count(r)); };

    const auto boundary_s = S.boundary(r);
    const auto boundary_t = T.boundary(r);
    const std::int64_t cycles_s = top_count(S) - static_cast<std::int64_t>(exact_rank(boundary_s));
    const std::int64_t cycles_t = top_count(T) - static_cast<std::int64_t>(exact_rank(boundary_t));
    report.dims = {cycles_s, cycles_t};

    // Rows are the source top chains; columns hold the boundary followed by the chain map.
    const int offset = static_cast<int>(r >= 1 ? S.count(r - 1) : 1);
    std::vector<SparseRow> stacked = boundary_s;
    std::vector<int> image(r + 1);
    for (std::size_t i = 0; i < S.count(r); ++i) {
        const auto& chain = S.simplices[r][i];
        for (int k = 0; k <= r; ++k) image[k] = target_position[z.image[source_keep[chain[k]]]];
        const int column = T.find(r, image);
        if (column < 0) throw VerificationFailure("zeroing does not map top chains to chains");
        stacked[i].emplace_back(offset + column, 1);
    }
    const std::int64_t kernel_of_both = top_count(S) - static_cast<std::int64_t>(exact_rank(stacked));
    report.rank = cycles_s - kernel_of_both;
    report.surjective = report.rank == cycles_t;
    return report;
}

}  // namespace eigenposet
