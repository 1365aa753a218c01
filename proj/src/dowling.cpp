#include "eigenposet/dowling.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "eigenposet/errors.hpp"

namespace eigenposet {
namespace {

int reduce(long long a, int modulus)
{
    long long r = a % modulus;
    return static_cast<int>(r < 0 ? r + modulus : r);
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw BudgetExceeded("integer overflow in exact product");
    return r;
}

std::uint64_t factorial(int k)
{
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f = checked_mul(f, static_cast<std::uint64_t>(i));
    return f;
}

// Union-find over letters 0..n carrying potentials mod M.
class PotentialForest {
public:
    PotentialForest(int n, int modulus) : parent_(n + 1), offset_(n + 1, 0), dead_(n + 1, 0), modulus_(modulus)
    {
        std::iota(parent_.begin(), parent_.end(), 0);
        dead_[0] = 1;
    }

    // (root, phi(x) - phi(root))
    std::pair<int, int> find(int x)
    {
        if (parent_[x] == x) return {x, 0};
        auto [root, above] = find(parent_[x]);
        offset_[x] = reduce(offset_[x] + above, modulus_);
        parent_[x] = root;
        return {root, offset_[x]};
    }

    // Impose phi(x) - phi(y) = delta.
    void unite(int x, int y, int delta)
    {
        auto [rx, ox] = find(x);
        auto [ry, oy] = find(y);
        if (rx == ry) {
            if (reduce(ox - oy - delta, modulus_) != 0) dead_[rx] = 1;
            return;
        }
        parent_[ry] = rx;
        offset_[ry] = reduce(ox - oy - delta, modulus_);
        dead_[rx] = dead_[rx] | dead_[ry];
    }

    bool dead(int root) const { return dead_[root] != 0; }

private:
    std::vector<int> parent_;
    std::vector<int> offset_;
    std::vector<char> dead_;
    int modulus_;
};

}  // namespace

WeightedPartition::WeightedPartition(int n, int modulus) : modulus_(modulus), blocks_(n), block_(n + 1), weight_(n + 1, 0)
{
    require(n >= 0 && modulus >= 1, "weighted partition needs n >= 0 and M >= 1");
    std::iota(block_.begin(), block_.end(), 0);
}

WeightedPartition WeightedPartition::top(int n, int modulus)
{
    WeightedPartition pi(n, modulus);
    std::fill(pi.block_.begin(), pi.block_.end(), 0);
    pi.blocks_ = 0;
    return pi;
}

WeightedPartition WeightedPartition::from_labels(int modulus, std::span<const int> block, std::span<const int> weight)
{
    require(modulus >= 1, "modulus must be positive");
    require(!block.empty() && block.size() == weight.size(), "block and weight arrays must match");
    require(block[0] == 0, "letter 0 must lie in the zero block");
    WeightedPartition pi;
    pi.modulus_ = modulus;
    pi.block_.assign(block.begin(), block.end());
    pi.weight_.resize(weight.size());
    for (std::size_t a = 0; a < weight.size(); ++a) pi.weight_[a] = reduce(weight[a], modulus);
    pi.canonicalize();
    return pi;
}

void WeightedPartition::canonicalize()
{
    const int n = size();
    std::unordered_map<int, std::pair<int, int>> renumber;  // label -> (id, shift)
    int next = 1;
    for (int a = 1; a <= n; ++a) {
        if (block_[a] == 0) {
            weight_[a] = 0;
            continue;
        }
        auto [it, fresh] = renumber.try_emplace(block_[a], next, weight_[a]);
        if (fresh) ++next;
        block_[a] = it->second.first;
        weight_[a] = reduce(weight_[a] - it->second.second, modulus_);
    }
    weight_[0] = 0;
    blocks_ = next - 1;
}

WeightedPartition WeightedPartition::parse(std::string_view text, int n, int modulus)
{
    std::vector<int> block(n + 1, -1), weight(n + 1, 0);
    std::string chunk;
    std::stringstream whole{std::string(text)};
    int label = 0;
    auto set_letter = [&](const std::string& token, int lab) {
        const auto caret = token.find('^');
        std::size_t used = 0;
        const int letter = std::stoi(token.substr(0, caret), &used);
        require(used == token.substr(0, caret).size(), "bad letter token: " + token);
        require(letter >= 0 && letter <= n && block[letter] == -1, "letter repeated or out of range: " + token);
        block[letter] = lab;
        if (caret != std::string::npos) {
            require(lab != 0, "zero-block letters carry no weight: " + token);
            weight[letter] = std::stoi(token.substr(caret + 1));
        }
    };
    while (std::getline(whole, chunk, '|')) {
        std::stringstream tokens(chunk);
        std::string token;
        bool any = false;
        while (tokens >> token) {
            set_letter(token, label);
            any = true;
        }
        require(any, "empty block in weighted partition");
        ++label;
    }
    for (int a = 0; a <= n; ++a) require(block[a] != -1, "letter missing from weighted partition: " + std::to_string(a));
    return from_labels(modulus, block, weight);
}

std::vector<int> WeightedPartition::zero_block() const
{
    std::vector<int> out;
    for (int a = 0; a <= size(); ++a)
        if (block_[a] == 0) out.push_back(a);
    return out;
}

std::vector<std::vector<int>> WeightedPartition::blocks() const
{
    std::vector<std::vector<int>> out(blocks_);
    for (int a = 1; a <= size(); ++a)
        if (block_[a] != 0) out[block_[a] - 1].push_back(a);
    return out;
}

std::vector<int> WeightedPartition::block_sizes() const
{
    std::vector<int> out(blocks_, 0);
    for (int a = 1; a <= size(); ++a)
        if (block_[a] != 0) ++out[block_[a] - 1];
    return out;
}

std::string WeightedPartition::to_string() const
{
    std::ostringstream out;
    bool first = true;
    for (int a : zero_block()) {
        if (!first) out << ' ';
        out << a;
        first = false;
    }
    for (const auto& b : blocks()) {
        out << " |";
        for (int a : b) out << ' ' << a << '^' << weight_[a];
    }
    return out.str();
}

std::string WeightedPartition::key() const
{
    std::string k;
    k.reserve(3 * block_.size());
    for (std::size_t a = 1; a < block_.size(); ++a) {
        k.push_back(static_cast<char>(block_[a]));
        k.push_back(static_cast<char>(weight_[a] & 0xff));
        k.push_back(static_cast<char>(weight_[a] >> 8));
    }
    return k;
}

WeightedPartition WeightedPartition::relabeled(std::span<const int> perm) const
{
    require(static_cast<int>(perm.size()) == size(), "relabeling has the wrong size");
    std::vector<int> block(block_.size(), -1), weight(block_.size(), 0);
    block[0] = 0;
    for (int a = 1; a <= size(); ++a) {
        const int b = perm[a - 1];
        require(b >= 1 && b <= size() && block[b] == -1, "relabeling is not a permutation");
        block[b] = block_[a];
        weight[b] = weight_[a];
    }
    return from_labels(modulus_, block, weight);
}

WeightedPartition WeightedPartition::rescaled(int factor) const
{
    require(factor >= 1, "rescale factor must be positive");
    WeightedPartition pi = *this;
    pi.modulus_ *= factor;
    for (auto& w : pi.weight_) w *= factor;
    return pi;
}

bool leq(const WeightedPartition& lower, const WeightedPartition& upper)
{
    require(lower.size() == upper.size() && lower.modulus() == upper.modulus(), "leq: mismatched n or M");
    const int n = lower.size();
    const int modulus = lower.modulus();
    std::vector<int> target(lower.block_count() + 1, -1), shift(lower.block_count() + 1, 0);
    for (int a = 1; a <= n; ++a) {
        const int b = lower.block_of(a);
        const int c = upper.block_of(a);
        if (b == 0) {
            if (c != 0) return false;
            continue;
        }
        const int diff = reduce(upper.weight(a) - lower.weight(a), modulus);
        if (target[b] == -1) {
            target[b] = c;
            shift[b] = diff;
        } else if (target[b] != c || (c != 0 && shift[b] != diff)) {
            return false;
        }
    }
    return true;
}

WeightedPartition join(const WeightedPartition& a, const WeightedPartition& b)
{
    require(a.size() == b.size() && a.modulus() == b.modulus(), "join: mismatched n or M");
    const int n = a.size();
    const int modulus = a.modulus();
    PotentialForest forest(n, modulus);
    for (const WeightedPartition* pi : {&a, &b}) {
        std::vector<int> first(pi->block_count() + 1, -1);
        for (int x = 1; x <= n; ++x) {
            const int blk = pi->block_of(x);
            if (blk == 0) {
                forest.unite(0, x, 0);
                continue;
            }
            if (first[blk] == -1) {
                first[blk] = x;
                continue;
            }
            const int f = first[blk];
            forest.unite(f, x, reduce(pi->weight(f) - pi->weight(x), modulus));
        }
    }
    std::vector<int> block(n + 1), weight(n + 1, 0);
    for (int x = 0; x <= n; ++x) {
        auto [root, off] = forest.find(x);
        if (forest.dead(root)) {
            block[x] = 0;
        } else {
            block[x] = root + 1;
            weight[x] = off;
        }
    }
    return WeightedPartition::from_labels(modulus, block, weight);
}

WeightedPartition dowling_atom(int n, int modulus, int i, int j, int x)
{
    require(1 <= i && i < j && j <= n, "dowling atom needs 1 <= i < j <= n");
    std::vector<int> block(n + 1), weight(n + 1, 0);
    std::iota(block.begin(), block.end(), 0);
    block[j] = i;
    weight[j] = x;
    return WeightedPartition::from_labels(modulus, block, weight);
}

WeightedPartition coordinate_atom(int n, int modulus, int i)
{
    require(1 <= i && i <= n, "coordinate atom letter out of range");
    std::vector<int> block(n + 1), weight(n + 1, 0);
    std::iota(block.begin(), block.end(), 0);
    block[i] = 0;
    return WeightedPartition::from_labels(modulus, block, weight);
}

std::vector<WeightedPartition> dowling_atoms(int n, int modulus)
{
    std::vector<WeightedPartition> atoms;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int x = 0; x < modulus; ++x) atoms.push_back(dowling_atom(n, modulus, i, j, x));
    for (int i = 1; i <= n; ++i) atoms.push_back(coordinate_atom(n, modulus, i));
    return atoms;
}

WeightedPartition zeroing(const WeightedPartition& pi)
{
    std::vector<int> block(pi.size() + 1), weight(pi.size() + 1, 0);
    for (int a = 0; a <= pi.size(); ++a) block[a] = pi.block_of(a);
    return WeightedPartition::from_labels(pi.modulus(), block, weight);
}

WeightedPartition forget_weights(const WeightedPartition& pi)
{
    std::vector<int> block(pi.size() + 1), weight(pi.size() + 1, 0);
    for (int a = 0; a <= pi.size(); ++a) block[a] = pi.block_of(a);
    return WeightedPartition::from_labels(1, block, weight);
}

bool is_balanced(const WeightedPartition& pi, int d)
{
    require(d >= 1, "balance needs d >= 1");
    require(pi.modulus() % d == 0, "balance needs d dividing the modulus");
    const int step = pi.modulus() / d;
    std::vector<std::vector<int>> counts(pi.block_count() + 1, std::vector<int>(d, 0));
    for (int a = 1; a <= pi.size(); ++a) {
        if (pi.block_of(a) == 0) continue;
        if (pi.weight(a) % step != 0) return false;
        ++counts[pi.block_of(a)][pi.weight(a) / step];
    }
    for (int b = 1; b <= pi.block_count(); ++b)
        for (int r = 1; r < d; ++r)
            if (counts[b][r] != counts[b][0]) return false;
    return true;
}

PointedType type_of(const WeightedPartition& pi)
{
    PointedType type;
    type.zero_size = static_cast<int>(pi.zero_block().size()) - 1;
    type.parts = pi.block_sizes();
    std::sort(type.parts.rbegin(), type.parts.rend());
    return type;
}

std::string to_string(const PointedType& type)
{
    std::ostringstream out;
    out << '(' << type.zero_size << ", {";
    for (std::size_t i = 0; i < type.parts.size(); ++i) out << (i ? "," : "") << type.parts[i];
    out << "})";
    return out.str();
}

std::uint64_t stabilizer_order(const PointedType& type, int d)
{
    require(d >= 1, "stabilizer order needs d >= 1");
    std::uint64_t order = factorial(type.zero_size);
    std::vector<int> parts = type.parts;
    std::sort(parts.begin(), parts.end());
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const int part = parts[i];
        const int multiplicity = static_cast<int>(j - i);
        require(part % d == 0, "stabilizer order: part " + std::to_string(part) + " not divisible by d");
        order = checked_mul(order, factorial(multiplicity));
        const std::uint64_t inner = factorial(part / d);
        for (int k = 0; k < multiplicity * d; ++k) order = checked_mul(order, inner);
        for (int k = 0; k < multiplicity; ++k) order = checked_mul(order, static_cast<std::uint64_t>(d));
        i = j;
    }
    return order;
}

std::uint64_t dowling_interval_homology_dim(int ell, int d)
{
    require(ell >= 0, "ell must be nonnegative");
    std::uint64_t product = 1;
    for (int i = 0; i < ell; ++i) product = checked_mul(product, static_cast<std::uint64_t>(1 + i * d));
    return product;
}

PartitionPoset::PartitionPoset(std::vector<WeightedPartition> elements, std::vector<std::pair<int, int>> covers)
{
    const int count = static_cast<int>(elements.size());
    std::vector<std::string> labels(count);
    for (int i = 0; i < count; ++i) labels[i] = elements[i].to_string();
    std::vector<int> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return labels[a] < labels[b]; });
    std::vector<int> position(count);
    for (int i = 0; i < count; ++i) position[order[i]] = i;
    std::vector<std::string> sorted_labels;
    sorted_labels.reserve(count);
    for (int i : order) {
        elements_.push_back(std::move(elements[i]));
        sorted_labels.push_back(std::move(labels[i]));
    }
    for (auto& [a, b] : covers) {
        a = position[a];
        b = position[b];
    }
    order_ = FinitePoset(std::move(sorted_labels), std::move(covers));
    index_elements();
}

void PartitionPoset::index_elements()
{
    if (!elements_.empty()) {
        n_ = elements_.front().size();
        modulus_ = elements_.front().modulus();
    }
    index_.clear();
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        require(elements_[i].size() == n_ && elements_[i].modulus() == modulus_, "mixed n or M in partition poset");
        const bool fresh = index_.emplace(elements_[i].key(), static_cast<int>(i)).second;
        require(fresh, "duplicate element in partition poset");
    }
}

int PartitionPoset::find(const WeightedPartition& pi) const
{
    if (pi.size() != n_ || pi.modulus() != modulus_) return -1;
    auto it = index_.find(pi.key());
    return it == index_.end() ? -1 : it->second;
}

std::vector<int> PartitionPoset::action(std::span<const int> perm) const
{
    std::vector<int> map(size());
    for (std::size_t i = 0; i < size(); ++i) {
        const int j = find(elements_[i].relabeled(perm));
        require(j >= 0, "letter permutation does not preserve the poset");
        map[i] = j;
    }
    return map;
}

bool operator==(const PartitionPoset& a, const PartitionPoset& b)
{
    return a.n_ == b.n_ && a.modulus_ == b.modulus_ && a.elements_ == b.elements_ && a.order_.covers() == b.order_.covers();
}

PartitionPoset upward_closure(std::span<const WeightedPartition> generators, std::span<const WeightedPartition> atoms,
                              std::uint64_t budget)
{
    std::vector<WeightedPartition> elements;
    std::unordered_map<std::string, int> index;
    std::deque<int> queue;
    auto add = [&](const WeightedPartition& pi) {
        auto [it, fresh] = index.try_emplace(pi.key(), static_cast<int>(elements.size()));
        if (fresh) {
            elements.push_back(pi);
            queue.push_back(it->second);
            check_budget(elements.size(), budget, "upward closure element count");
        }
        return it->second;
    };
    for (const auto& g : generators) add(g);
    std::vector<std::pair<int, int>> covers;
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        std::vector<int> above;
        for (const auto& h : atoms) {
            WeightedPartition y = join(elements[x], h);
            if (y == elements[x]) continue;
            above.push_back(add(y));
        }
        std::sort(above.begin(), above.end());
        above.erase(std::unique(above.begin(), above.end()), above.end());
        for (int y : above) covers.emplace_back(x, y);
    }
    return PartitionPoset(std::move(elements), std::move(covers));
}

PartitionPoset partition_poset_from_order(std::vector<WeightedPartition> elements)
{
    std::vector<std::string> labels;
    labels.reserve(elements.size());
    for (const auto& e : elements) labels.push_back(e.to_string());
    FinitePoset order = build_poset(labels, [&](int i, int j) { return leq(elements[i], elements[j]); });
    std::sort(elements.begin(), elements.end(),
              [](const WeightedPartition& a, const WeightedPartition& b) { return a.to_string() < b.to_string(); });
    PartitionPoset result;
    result.elements_ = std::move(elements);
    result.order_ = std::move(order);
    result.index_elements();
    return result;
}

PartitionPoset dowling_lattice(int n, int modulus, std::uint64_t budget)
{
    require(n >= 0 && modulus >= 1, "dowling lattice needs n >= 0, M >= 1");
    const WeightedPartition bottom(n, modulus);
    const auto atoms = dowling_atoms(n, modulus);
    return upward_closure(std::span(&bottom, 1), atoms, budget);
}

std::vector<WeightedPartition> enumerate_weighted_partitions(int n, int modulus, std::uint64_t budget)
{
    std::vector<WeightedPartition> out;
    std::vector<int> block(n + 1, 0), weight(n + 1, 0);
    std::function<void(int, int)> place = [&](int letter, int used) {
        if (letter > n) {
            out.push_back(WeightedPartition::from_labels(modulus, block, weight));
            check_budget(out.size(), budget, "weighted partition enumeration");
            return;
        }
        block[letter] = 0;
        weight[letter] = 0;
        place(letter + 1, used);
        for (int b = 1; b <= used; ++b)
            for (int w = 0; w < modulus; ++w) {
                block[letter] = b;
                weight[letter] = w;
                place(letter + 1, used);
            }
        block[letter] = used + 1;
        weight[letter] = 0;
        place(letter + 1, used + 1);
    };
    place(1, 0);
    return out;
}

std::vector<WeightedPartition> balanced_partitions(int n, int d, std::uint64_t budget)
{
    require(d > 1, "balanced partitions need d > 1");
    std::vector<WeightedPartition> out;
    std::vector<int> block(n + 1, -1), weight(n + 1, 0);
    block[0] = 0;

    // Assign balanced weights to the letters of one block, minimal letter weight 0.
    std::function<void(const std::vector<int>&, std::size_t, std::vector<int>&, const std::function<void()>&)> weigh =
        [&](const std::vector<int>& members, std::size_t pos, std::vector<int>& left, const std::function<void()>& done) {
            if (pos == members.size()) {
                done();
                return;
            }
            for (int r = 0; r < d; ++r) {
                if (left[r] == 0) continue;
                if (pos == 0 && r != 0) continue;
                --left[r];
                weight[members[pos]] = r;
                weigh(members, pos + 1, left, done);
                ++left[r];
            }
        };

    std::function<void(int)> next_block = [&](int label) {
        int first = 1;
        while (first <= n && block[first] != -1) ++first;
        if (first > n) {
            out.push_back(WeightedPartition::from_labels(d, block, weight));
            check_budget(out.size(), budget, "balanced partition enumeration");
            return;
        }
        block[first] = 0;
        weight[first] = 0;
        next_block(label);
        block[first] = -1;

        std::vector<int> free;
        for (int a = first + 1; a <= n; ++a)
            if (block[a] == -1) free.push_back(a);
        for (int size = d; size <= static_cast<int>(free.size()) + 1; size += d) {
            std::vector<char> pick(free.size(), 0);
            std::fill(pick.begin(), pick.begin() + (size - 1), 1);
            do {
                std::vector<int> members{first};
                for (std::size_t i = 0; i < free.size(); ++i)
                    if (pick[i]) members.push_back(free[i]);
                for (int a : members) block[a] = label;
                std::vector<int> left(d, size / d);
                weigh(members, 0, left, [&] { next_block(label + 1); });
                for (int a : members) {
                    block[a] = -1;
                    weight[a] = 0;
                }
            } while (std::prev_permutation(pick.begin(), pick.end()));
        }
    };
    next_block(1);
    return out;
}

PartitionPoset balanced_poset(int n, int d, std::uint64_t budget)
{
    require(d > 1, "balanced poset needs d > 1");
    auto elements = balanced_partitions(n, d, budget);
    std::unordered_map<std::string, int> index;
    for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i].key(), static_cast<int>(i));
    const auto atoms = dowling_atoms(n, d);
    std::vector<std::pair<int, int>> covers;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        std::vector<int> above;
        for (const auto& h : atoms) {
            WeightedPartition y = join(elements[i], h);
            if (y == elements[i]) continue;
            auto it = index.find(y.key());
            if (it != index.end()) above.push_back(it->second);
        }
        std::sort(above.begin(), above.end());
        above.erase(std::unique(above.begin(), above.end()), above.end());
        for (int y : above) covers.emplace_back(static_cast<int>(i), y);
    }
    return PartitionPoset(std::move(elements), std::move(covers));
}

}  // namespace eigenposet
