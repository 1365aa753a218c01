#include "eigenposet/grouprep.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "eigenposet/errors.hpp"

namespace eigenposet {
namespace {

std::vector<int> parse_int_list(std::string_view text)
{
    std::string body(text);
    for (char& c : body)
        if (c == '[' || c == ']' || c == ',') c = ' ';
    std::istringstream in(body);
    std::vector<int> out;
    int v;
    while (in >> v) out.push_back(v);
    require(in.eof(), "malformed integer list: " + std::string(text));
    return out;
}

std::string int_list(const std::vector<int>& values)
{
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
    out << ']';
    return out.str();
}

// Weights of the eigenvector of a cycle for the eigenvalue omega^zeta, or nothing.
std::optional<WeightedBlock> cycle_block(const ColoredCycle& cycle, int zeta)
{
    const int modulus = cycle.modulus();
    if (mod(static_cast<long long>(zeta) * cycle.length() - cycle.color_sum(), modulus) != 0) return std::nullopt;
    WeightedBlock block;
    long long w = 0;
    for (int j = 0; j < cycle.length(); ++j) {
        block.emplace_back(cycle.support()[j], mod(w, modulus));
        w += zeta - cycle.colors()[j];
    }
    return block;
}

}  // namespace

GroupParams GroupParams::make(int m, int p, int n, int d)
{
    require(m >= 1 && p >= 1 && n >= 1 && d >= 1, "m, p, n, d must be positive");
    require(m % p == 0, "p must divide m");
    return GroupParams{m, p, n, d};
}

int GroupParams::modulus() const { return std::lcm(m, d); }
int GroupParams::zeta() const { return modulus() / d; }
int GroupParams::root_step() const { return modulus() / m; }

std::uint64_t GroupParams::order() const
{
    unsigned __int128 total = 1;
    const unsigned __int128 cap = UINT64_MAX;
    for (int i = 0; i < n && total <= cap; ++i) total *= static_cast<unsigned>(m);
    for (int i = 2; i <= n && total <= cap; ++i) total *= static_cast<unsigned>(i);
    if (total > cap) return UINT64_MAX;
    return static_cast<std::uint64_t>(total / static_cast<unsigned>(p));
}

std::string to_string(const GroupParams& params)
{
    std::ostringstream out;
    out << "G(" << params.m << ',' << params.p << ',' << params.n << "), d=" << params.d;
    return out.str();
}

ColoredCycle::ColoredCycle(std::vector<int> support, std::vector<int> colors, int modulus)
    : support_(std::move(support)), colors_(std::move(colors)), modulus_(modulus)
{
    require(modulus_ >= 1, "cycle modulus must be positive");
    require(!support_.empty() && support_.size() == colors_.size(), "cycle support and colors must match");
    auto sorted = support_;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() && sorted.front() >= 1,
            "cycle letters must be distinct positive integers");
    const auto start = std::min_element(support_.begin(), support_.end()) - support_.begin();
    std::rotate(support_.begin(), support_.begin() + start, support_.end());
    std::rotate(colors_.begin(), colors_.begin() + start, colors_.end());
    for (int& c : colors_) c = mod(c, modulus_);
}

int ColoredCycle::color_sum() const
{
    long long s = 0;
    for (int c : colors_) s += c;
    return mod(s, modulus_);
}

std::string ColoredCycle::to_string() const { return int_list(support_) + " ; " + int_list(colors_); }

ColoredPermutation::ColoredPermutation(std::vector<int> one_line, std::vector<int> colors, int modulus)
    : image_(std::move(one_line)), color_(std::move(colors)), modulus_(modulus)
{
    require(modulus_ >= 1, "modulus must be positive");
    require(image_.size() == color_.size(), "permutation and color vector differ in length");
    std::vector<char> seen(image_.size() + 1, 0);
    for (int v : image_) {
        require(v >= 1 && v <= static_cast<int>(image_.size()) && !seen[v], "one-line form is not a permutation");
        seen[v] = 1;
    }
    for (int& c : color_) c = mod(c, modulus_);
}

ColoredPermutation ColoredPermutation::identity(int n, int modulus)
{
    std::vector<int> one_line(n);
    std::iota(one_line.begin(), one_line.end(), 1);
    return ColoredPermutation(std::move(one_line), std::vector<int>(n, 0), modulus);
}

ColoredPermutation ColoredPermutation::from_cycles(int n, int modulus, std::span<const ColoredCycle> cycles)
{
    std::vector<int> one_line(n), colors(n, 0);
    std::iota(one_line.begin(), one_line.end(), 1);
    std::vector<char> used(n + 1, 0);
    for (const auto& cycle : cycles) {
        require(cycle.modulus() == modulus, "cycle modulus mismatch");
        const int len = cycle.length();
        for (int k = 0; k < len; ++k) {
            const int a = cycle.support()[k];
            require(a <= n && !used[a], "cycles are not disjoint or exceed n");
            used[a] = 1;
            one_line[a - 1] = cycle.support()[(k + 1) % len];
            colors[a - 1] = cycle.colors()[k];
        }
    }
    return ColoredPermutation(std::move(one_line), std::move(colors), modulus);
}

ColoredPermutation ColoredPermutation::parse(std::string_view text, int modulus)
{
    const auto split = text.find(';');
    require(split != std::string_view::npos, "colored permutation text needs '[perm] ; [colors]'");
    return ColoredPermutation(parse_int_list(text.substr(0, split)), parse_int_list(text.substr(split + 1)), modulus);
}

ColoredPermutation ColoredPermutation::inverse() const
{
    std::vector<int> one_line(size()), colors(size());
    for (int a = 1; a <= size(); ++a) {
        one_line[image(a) - 1] = a;
        colors[image(a) - 1] = -color(a);
    }
    return ColoredPermutation(std::move(one_line), std::move(colors), modulus_);
}

bool ColoredPermutation::in_group(const GroupParams& params) const
{
    if (size() != params.n || modulus_ != params.modulus()) return false;
    const int step = params.root_step();
    long long units = 0;
    for (int c : color_) {
        if (c % step != 0) return false;
        units += c / step;
    }
    return units % params.p == 0;
}

std::string ColoredPermutation::to_string() const { return int_list(image_) + " ; " + int_list(color_); }

ColoredPermutation compose(const ColoredPermutation& a, const ColoredPermutation& b)
{
    require(a.size() == b.size() && a.modulus() == b.modulus(), "compose: mismatched n or M");
    std::vector<int> one_line(a.size()), colors(a.size());
    for (int i = 1; i <= a.size(); ++i) {
        one_line[i - 1] = a.image(b.image(i));
        colors[i - 1] = b.color(i) + a.color(b.image(i));
    }
    return ColoredPermutation(std::move(one_line), std::move(colors), a.modulus());
}

std::vector<ColoredCycle> cycle_decomposition(const ColoredPermutation& g)
{
    std::vector<ColoredCycle> cycles;
    std::vector<char> seen(g.size() + 1, 0);
    for (int start = 1; start <= g.size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> support, colors;
        for (int a = start; !seen[a]; a = g.image(a)) {
            seen[a] = 1;
            support.push_back(a);
            colors.push_back(g.color(a));
        }
        cycles.emplace_back(std::move(support), std::move(colors), g.modulus());
    }
    return cycles;
}

std::vector<int> degrees(const GroupParams& params)
{
    std::vector<int> out;
    for (int i = 1; i < params.n; ++i) out.push_back(i * params.m);
    out.push_back(params.n * params.m / params.p);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> A_of_d(const GroupParams& params)
{
    std::vector<int> out;
    for (int deg : degrees(params))
        if (deg % params.d == 0) out.push_back(deg);
    return out;
}

int a_of_d(const GroupParams& params) { return static_cast<int>(A_of_d(params).size()); }

int ell_of_d(int m, int d)
{
    require(m >= 1 && d >= 1, "ell_of_d needs positive arguments");
    return d / std::gcd(m, d);
}

std::optional<WeightedBlock> cycle_eigenspace(const ColoredCycle& cycle, const GroupParams& params)
{
    require(params.d > 1, "cycle_eigenspace needs d > 1; use the fixed-space rule for d = 1");
    require(cycle.modulus() == params.modulus(), "cycle modulus differs from lcm(m,d)");
    return cycle_block(cycle, params.zeta());
}

WeightedPartition eigenspace_for_exponent(const ColoredPermutation& g, int exponent)
{
    std::vector<int> block(g.size() + 1, 0), weight(g.size() + 1, 0);
    int label = 0;
    for (const auto& cycle : cycle_decomposition(g)) {
        auto blk = cycle_block(cycle, exponent);
        if (!blk) continue;
        ++label;
        for (const auto& [letter, w] : *blk) {
            block[letter] = label;
            weight[letter] = w;
        }
    }
    return WeightedPartition::from_labels(g.modulus(), block, weight);
}

WeightedPartition fixed_space(const ColoredPermutation& g) { return eigenspace_for_exponent(g, 0); }

WeightedPartition eigenspace(const ColoredPermutation& g, const GroupParams& params)
{
    require(g.size() == params.n && g.modulus() == params.modulus(), "eigenspace: element does not match params");
    return eigenspace_for_exponent(g, params.d == 1 ? 0 : params.zeta());
}

WeightedPartition act(const ColoredPermutation& g, const WeightedPartition& pi)
{
    require(g.size() == pi.size() && g.modulus() == pi.modulus(), "act: mismatched n or M");
    std::vector<int> block(pi.size() + 1, 0), weight(pi.size() + 1, 0);
    for (int a = 1; a <= pi.size(); ++a) {
        block[g.image(a)] = pi.block_of(a);
        weight[g.image(a)] = pi.weight(a) - g.color(a);
    }
    return WeightedPartition::from_labels(pi.modulus(), block, weight);
}

void for_each_group_element(const GroupParams& params, std::uint64_t budget,
                            const std::function<void(const ColoredPermutation&)>& visit)
{
    check_budget(params.order(), budget, "group enumeration");
    const int n = params.n;
    const int step = params.root_step();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        std::vector<int> units(n, 0);
        while (true) {
            const int sum = std::accumulate(units.begin(), units.end(), 0);
            if (sum % params.p == 0) {
                std::vector<int> colors(n);
                for (int i = 0; i < n; ++i) colors[i] = units[i] * step;
                visit(ColoredPermutation(perm, std::move(colors), params.modulus()));
            }
            int i = n - 1;
            while (i >= 0 && units[i] == params.m - 1) units[i--] = 0;
            if (i < 0) break;
            ++units[i];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<ColoredPermutation> enumerate_group(const GroupParams& params, std::uint64_t budget)
{
    std::vector<ColoredPermutation> out;
    for_each_group_element(params, budget, [&](const ColoredPermutation& g) { out.push_back(g); });
    return out;
}

std::vector<WeightedPartition> reflection_hyperplanes(const GroupParams& params, int modulus)
{
    require(modulus % params.m == 0, "hyperplane modulus must be a multiple of m");
    const int step = modulus / params.m;
    std::vector<WeightedPartition> out;
    for (int i = 1; i <= params.n; ++i)
        for (int j = i + 1; j <= params.n; ++j)
            for (int u = 0; u < params.m; ++u) out.push_back(dowling_atom(params.n, modulus, i, j, u * step));
    if (params.m > params.p)
        for (int i = 1; i <= params.n; ++i) out.push_back(coordinate_atom(params.n, modulus, i));
    return out;
}

}  // namespace eigenposet
