#include "eigenposet/poset.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "eigenposet/errors.hpp"

namespace eigenposet {

using Bits = boost::dynamic_bitset<>;

FinitePoset::FinitePoset(std::vector<std::string> labels, std::vector<std::pair<int, int>> covers)
    : labels_(std::move(labels)), covers_(std::move(covers))
{
    const int n = static_cast<int>(labels_.size());
    if (n > 60000) throw BudgetExceeded("poset too large for an explicit order relation");
    up_.assign(n, {});
    down_.assign(n, {});
    for (const auto& [a, b] : covers_) {
        require(a >= 0 && a < n && b >= 0 && b < n && a != b, "cover index out of range");
        up_[a].push_back(b);
        down_[b].push_back(a);
    }
    std::sort(covers_.begin(), covers_.end());
    require(std::adjacent_find(covers_.begin(), covers_.end()) == covers_.end(), "duplicate cover");
    for (auto& v : up_) std::sort(v.begin(), v.end());
    for (auto& v : down_) std::sort(v.begin(), v.end());

    std::vector<int> indegree(n);
    for (int x = 0; x < n; ++x) indegree[x] = static_cast<int>(down_[x].size());
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int x = 0; x < n; ++x)
        if (indegree[x] == 0) ready.push(x);
    while (!ready.empty()) {
        const int x = ready.top();
        ready.pop();
        topo_.push_back(x);
        for (int y : up_[x])
            if (--indegree[y] == 0) ready.push(y);
    }
    require(static_cast<int>(topo_.size()) == n, "cover relation has a cycle");

    up_sets_.assign(n, Bits(n));
    down_sets_.assign(n, Bits(n));
    for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
        up_sets_[*it].set(*it);
        for (int y : up_[*it]) up_sets_[*it] |= up_sets_[y];
    }
    for (int x : topo_) {
        down_sets_[x].set(x);
        for (int y : down_[x]) down_sets_[x] |= down_sets_[y];
    }
}

bool FinitePoset::covers(int lower, int upper) const
{
    return std::binary_search(up_[lower].begin(), up_[lower].end(), upper);
}

bool FinitePoset::leq(int x, int y) const { return up_sets_[x].test(y); }

std::vector<int> FinitePoset::minimal_elements() const
{
    std::vector<int> out;
    for (int x = 0; x < static_cast<int>(size()); ++x)
        if (down_[x].empty()) out.push_back(x);
    return out;
}

std::vector<int> FinitePoset::maximal_elements() const
{
    std::vector<int> out;
    for (int x = 0; x < static_cast<int>(size()); ++x)
        if (up_[x].empty()) out.push_back(x);
    return out;
}

std::optional<int> FinitePoset::bottom() const
{
    auto mins = minimal_elements();
    if (mins.size() == 1) return mins.front();
    return std::nullopt;
}

std::optional<int> FinitePoset::top() const
{
    auto maxs = maximal_elements();
    if (maxs.size() == 1) return maxs.front();
    return std::nullopt;
}

std::vector<int> FinitePoset::atoms() const
{
    auto b = bottom();
    if (!b) return {};
    return up_[*b];
}

std::optional<std::vector<int>> FinitePoset::rank_function() const
{
    std::vector<int> height(size(), 0);
    for (int x : topo_)
        for (int y : down_[x]) height[x] = std::max(height[x], height[y] + 1);
    for (const auto& [a, b] : covers_)
        if (height[b] != height[a] + 1) return std::nullopt;
    return height;
}

bool FinitePoset::is_graded() const
{
    auto rank = rank_function();
    if (!rank) return false;
    std::optional<int> top_rank;
    for (int x : maximal_elements()) {
        if (top_rank && *top_rank != (*rank)[x]) return false;
        top_rank = (*rank)[x];
    }
    return true;
}

FinitePoset FinitePoset::induced(std::span<const int> subset) const
{
    std::vector<int> keep(subset.begin(), subset.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    const int n = static_cast<int>(size());
    std::vector<int> position(n, -1);
    Bits mask(n);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        require(keep[i] >= 0 && keep[i] < n, "subset index out of range");
        position[keep[i]] = static_cast<int>(i);
        mask.set(keep[i]);
    }
    std::vector<std::string> labels;
    labels.reserve(keep.size());
    for (int x : keep) labels.push_back(labels_[x]);
    std::vector<std::pair<int, int>> covers;
    for (int x : keep) {
        Bits above = up_sets_[x] & mask;
        above.reset(x);
        for (auto y = above.find_first(); y != Bits::npos; y = above.find_next(y)) {
            Bits between = down_sets_[y] & above;
            if (between.count() == 1) covers.emplace_back(position[x], position[y]);
        }
    }
    return FinitePoset(std::move(labels), std::move(covers));
}

FinitePoset FinitePoset::interval(int x, int y) const
{
    require(leq(x, y), "interval endpoints are not comparable");
    Bits mask = up_sets_[x] & down_sets_[y];
    std::vector<int> subset;
    for (auto z = mask.find_first(); z != Bits::npos; z = mask.find_next(z)) subset.push_back(static_cast<int>(z));
    return induced(subset);
}

FinitePoset FinitePoset::open_interval(int x, int y) const
{
    require(leq(x, y), "interval endpoints are not comparable");
    Bits mask = up_sets_[x] & down_sets_[y];
    mask.reset(x);
    mask.reset(y);
    std::vector<int> subset;
    for (auto z = mask.find_first(); z != Bits::npos; z = mask.find_next(z)) subset.push_back(static_cast<int>(z));
    return induced(subset);
}

FinitePoset FinitePoset::upper_interval(int x) const
{
    std::vector<int> subset;
    for (auto z = up_sets_[x].find_first(); z != Bits::npos; z = up_sets_[x].find_next(z)) subset.push_back(static_cast<int>(z));
    return induced(subset);
}

FinitePoset FinitePoset::without_bounds() const
{
    std::vector<int> subset;
    auto b = bottom();
    auto t = top();
    for (int x = 0; x < static_cast<int>(size()); ++x)
        if (x != b && x != t) subset.push_back(x);
    return induced(subset);
}

FinitePoset FinitePoset::with_bottom(const std::string& label) const
{
    auto labels = labels_;
    auto covers = covers_;
    const int b = static_cast<int>(labels.size());
    labels.push_back(label);
    for (int x : minimal_elements()) covers.emplace_back(b, x);
    return FinitePoset(std::move(labels), std::move(covers));
}

FinitePoset FinitePoset::with_top(const std::string& label) const
{
    auto labels = labels_;
    auto covers = covers_;
    const int t = static_cast<int>(labels.size());
    labels.push_back(label);
    for (int x : maximal_elements()) covers.emplace_back(x, t);
    return FinitePoset(std::move(labels), std::move(covers));
}

FinitePoset FinitePoset::bounded_extension() const
{
    auto labels = labels_;
    auto covers = covers_;
    const int b = static_cast<int>(labels.size());
    const int t = b + 1;
    labels.push_back("0^");
    labels.push_back("1^");
    if (empty()) {
        covers.emplace_back(b, t);
    } else {
        for (int x : minimal_elements()) covers.emplace_back(b, x);
        for (int x : maximal_elements()) covers.emplace_back(x, t);
    }
    return FinitePoset(std::move(labels), std::move(covers));
}

std::string FinitePoset::to_json() const
{
    nlohmann::json j;
    j["elements"] = labels_;
    auto cov = nlohmann::json::array();
    for (const auto& [a, b] : covers_) cov.push_back({a, b});
    j["covers"] = cov;
    if (auto rank = rank_function())
        j["rank"] = *rank;
    else
        j["rank"] = nullptr;
    return j.dump();
}

std::string FinitePoset::to_dot(const std::string& name) const
{
    std::ostringstream out;
    out << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=plaintext];\n";
    for (std::size_t i = 0; i < size(); ++i) out << "  n" << i << " [label=" << nlohmann::json(labels_[i]).dump() << "];\n";
    for (const auto& [a, b] : covers_) out << "  n" << a << " -> n" << b << ";\n";
    out << "}\n";
    return out.str();
}

FinitePoset build_poset(std::vector<std::string> labels, const std::function<bool(int, int)>& leq)
{
    const int n = static_cast<int>(labels.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return labels[a] < labels[b]; });
    for (int i = 1; i < n; ++i)
        require(labels[order[i - 1]] != labels[order[i]], "duplicate element encoding: " + labels[order[i]]);

    std::vector<Bits> above(n, Bits(n)), below(n, Bits(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !leq(order[i], order[j])) continue;
            above[i].set(j);
            below[j].set(i);
        }
    for (int i = 0; i < n; ++i)
        if ((above[i] & below[i]).any()) throw InvalidArgument("order oracle is not antisymmetric at " + labels[order[i]]);

    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < n; ++i)
        for (auto j = above[i].find_first(); j != Bits::npos; j = above[i].find_next(j))
            if (!(above[i] & below[j]).any()) covers.emplace_back(i, static_cast<int>(j));

    std::vector<std::string> sorted;
    sorted.reserve(n);
    for (int i : order) sorted.push_back(std::move(labels[i]));
    FinitePoset poset(std::move(sorted), std::move(covers));
    for (int i = 0; i < n; ++i) {
        Bits strict = poset.up_set(i);
        strict.reset(i);
        if (strict != above[i]) throw InvalidArgument("order oracle is not transitive");
    }
    return poset;
}

std::int64_t BettiVector::operator[](int degree) const
{
    const int i = degree - kMinDegree;
    if (i < 0 || i >= static_cast<int>(dims_.size())) return 0;
    return dims_[i];
}

void BettiVector::set(int degree, std::int64_t value)
{
    const int i = degree - kMinDegree;
    require(i >= 0, "homological degree below -2");
    if (i >= static_cast<int>(dims_.size())) dims_.resize(i + 1, 0);
    dims_[i] = value;
    while (!dims_.empty() && dims_.back() == 0) dims_.pop_back();
}

std::optional<int> BettiVector::concentrated_degree() const
{
    std::optional<int> found;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (dims_[i] == 0) continue;
        if (found) return std::nullopt;
        found = static_cast<int>(i) + kMinDegree;
    }
    return found;
}

bool BettiVector::is_zero() const { return dims_.empty(); }

std::int64_t BettiVector::euler_characteristic() const
{
    std::int64_t chi = 0;
    for (int k = -1; k <= max_degree(); ++k) chi += (k % 2 == 0 ? 1 : -1) * (*this)[k];
    return chi;
}

std::string BettiVector::to_string() const
{
    std::ostringstream out;
    bool first = true;
    for (int k = kMinDegree; k <= max_degree(); ++k) {
        if ((*this)[k] == 0) continue;
        if (!first) out << ' ';
        out << "H" << k << '=' << (*this)[k];
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

std::size_t ChainComplex::count(int k) const
{
    if (k == -1) return 1;
    if (k < -1 || k > dimension()) return 0;
    return simplices[k].size();
}

int ChainComplex::find(int k, std::span<const int> chain) const
{
    const auto& level = simplices.at(k);
    auto it = std::lower_bound(level.begin(), level.end(), chain, [](const std::vector<int>& a, std::span<const int> b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    if (it == level.end() || !std::equal(it->begin(), it->end(), chain.begin(), chain.end())) return -1;
    return static_cast<int>(it - level.begin());
}

std::vector<SparseRow> ChainComplex::boundary(int k) const
{
    std::vector<SparseRow> rows;
    if (k < 0 || k > dimension()) return rows;
    rows.reserve(simplices[k].size());
    if (k == 0) {
        for (std::size_t i = 0; i < simplices[0].size(); ++i) rows.push_back({{0, 1}});
        return rows;
    }
    std::vector<int> face(k);
    for (const auto& chain : simplices[k]) {
        SparseRow row;
        row.reserve(k + 1);
        for (int drop = 0; drop <= k; ++drop) {
            std::copy(chain.begin(), chain.begin() + drop, face.begin());
            std::copy(chain.begin() + drop + 1, chain.end(), face.begin() + drop);
            const int col = find(k - 1, face);
            row.emplace_back(col, drop % 2 == 0 ? 1 : -1);
        }
        std::sort(row.begin(), row.end());
        rows.push_back(std::move(row));
    }
    return rows;
}

ChainComplex order_complex(const FinitePoset& poset, std::uint64_t budget)
{
    ChainComplex complex;
    std::uint64_t total = 0;
    std::vector<int> chain;
    std::function<void(int)> extend = [&](int x) {
        chain.push_back(x);
        const std::size_t k = chain.size() - 1;
        if (complex.simplices.size() <= k) complex.simplices.resize(k + 1);
        complex.simplices[k].push_back(chain);
        check_budget(++total, budget, "order complex chain count");
        const auto& up = poset.up_set(x);
        for (auto y = up.find_first(); y != Bits::npos; y = up.find_next(y))
            if (static_cast<int>(y) != x) extend(static_cast<int>(y));
        chain.pop_back();
    };
    for (int x = 0; x < static_cast<int>(poset.size()); ++x) extend(x);
    for (auto& level : complex.simplices) std::sort(level.begin(), level.end());
    return complex;
}

BettiVector betti_reduced(const FinitePoset& poset, std::uint64_t budget)
{
    const ChainComplex complex = order_complex(poset, budget);
    const int top = complex.dimension();
    std::vector<std::int64_t> rank(top + 2, 0);
    for (int k = 0; k <= top; ++k) rank[k] = static_cast<std::int64_t>(exact_rank(complex.boundary(k)));
    BettiVector betti;
    for (int k = -1; k <= top; ++k) {
        const std::int64_t down = k >= 0 ? rank[k] : 0;
        const std::int64_t up = rank[k + 1];
        betti.set(k, static_cast<std::int64_t>(complex.count(k)) - down - up);
    }
    return betti;
}

BettiVector interval_betti(const FinitePoset& poset, int x, int y, std::uint64_t budget)
{
    require(poset.leq(x, y), "interval endpoints are not comparable");
    if (x == y) {
        BettiVector degenerate;
        degenerate.set(-2, 1);
        return degenerate;
    }
    return betti_reduced(poset.open_interval(x, y), budget);
}

std::int64_t reduced_euler_char(const FinitePoset& poset)
{
    std::vector<std::int64_t> signed_chains(poset.size(), 0);
    std::int64_t chi = -1;
    for (int x : poset.linear_extension()) {
        std::int64_t value = 1;
        const auto& below = poset.down_set(x);
        for (auto y = below.find_first(); y != Bits::npos; y = below.find_next(y))
            if (static_cast<int>(y) != x) value -= signed_chains[y];
        signed_chains[x] = value;
        chi += value;
    }
    return chi;
}

std::int64_t moebius(const FinitePoset& poset, int x, int y)
{
    require(poset.leq(x, y), "moebius: x is not below y");
    const Bits span = poset.up_set(x) & poset.down_set(y);
    std::vector<std::int64_t> mu(poset.size(), 0);
    for (int z : poset.linear_extension()) {
        if (!span.test(z)) continue;
        if (z == x) {
            mu[z] = 1;
            continue;
        }
        std::int64_t sum = 0;
        Bits between = poset.down_set(z) & span;
        between.reset(z);
        for (auto w = between.find_first(); w != Bits::npos; w = between.find_next(w)) sum += mu[w];
        mu[z] = -sum;
    }
    return mu[y];
}

std::optional<int> join(const FinitePoset& poset, int x, int y)
{
    const Bits common = poset.up_set(x) & poset.up_set(y);
    for (auto z = common.find_first(); z != Bits::npos; z = common.find_next(z))
        if (common.is_subset_of(poset.up_set(z))) return static_cast<int>(z);
    return std::nullopt;
}

std::optional<int> meet(const FinitePoset& poset, int x, int y)
{
    const Bits common = poset.down_set(x) & poset.down_set(y);
    for (auto z = common.find_first(); z != Bits::npos; z = common.find_next(z))
        if (common.is_subset_of(poset.down_set(z))) return static_cast<int>(z);
    return std::nullopt;
}

LatticeReport lattice_tests(const FinitePoset& poset)
{
    const auto bottom = poset.bottom();
    const auto top = poset.top();
    if (!bottom || !top) throw InvalidArgument("lattice tests need a bounded poset");
    const int n = static_cast<int>(poset.size());
    LatticeReport report;
    report.is_graded = poset.is_graded();

    std::vector<std::vector<int>> joins(n, std::vector<int>(n, -1));
    report.is_lattice = true;
    for (int x = 0; x < n && report.is_lattice; ++x)
        for (int y = x; y < n; ++y) {
            auto j = join(poset, x, y);
            if (!j || !meet(poset, x, y)) {
                report.is_lattice = false;
                break;
            }
            joins[x][y] = joins[y][x] = *j;
        }
    if (!report.is_lattice) return report;

    const auto atoms = poset.atoms();
    report.is_atomic = true;
    for (int x = 0; x < n && report.is_atomic; ++x) {
        if (x == *bottom) continue;
        int acc = *bottom;
        for (int a : atoms)
            if (poset.leq(a, x)) acc = joins[acc][a];
        report.is_atomic = acc == x;
    }

    report.is_semimodular = true;
    for (int z = 0; z < n && report.is_semimodular; ++z) {
        const auto& up = poset.upper_covers(z);
        for (std::size_t i = 0; i < up.size() && report.is_semimodular; ++i)
            for (std::size_t j = i + 1; j < up.size(); ++j) {
                const int u = joins[up[i]][up[j]];
                if (!poset.covers(up[i], u) || !poset.covers(up[j], u)) {
                    report.is_semimodular = false;
                    break;
                }
            }
    }
    report.is_geometric = report.is_lattice && report.is_graded && report.is_atomic && report.is_semimodular;
    return report;
}

bool is_automorphism(const FinitePoset& poset, std::span<const int> map)
{
    const int n = static_cast<int>(poset.size());
    if (static_cast<int>(map.size()) != n) return false;
    std::vector<char> hit(n, 0);
    for (int y : map) {
        if (y < 0 || y >= n || hit[y]) return false;
        hit[y] = 1;
    }
    for (const auto& [a, b] : poset.covers())
        if (!poset.covers(map[a], map[b])) return false;
    return true;
}

FinitePoset fixed_subposet(const FinitePoset& poset, std::span<const int> automorphism)
{
    require(is_automorphism(poset, automorphism), "map is not an order automorphism");
    std::vector<int> fixed;
    for (int x = 0; x < static_cast<int>(poset.size()); ++x)
        if (automorphism[x] == x) fixed.push_back(x);
    return poset.induced(fixed);
}

}  // namespace eigenposet
