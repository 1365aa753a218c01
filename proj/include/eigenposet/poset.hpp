#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eigenposet/exact_rank.hpp"

namespace eigenposet {

class FinitePoset {
public:
    FinitePoset() = default;
    // Elements keep the given order; covers are pairs (lower, upper).
    FinitePoset(std::vector<std::string> labels, std::vector<std::pair<int, int>> covers);

    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    const std::string& label(int x) const { return labels_[x]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    const std::vector<int>& upper_covers(int x) const { return up_[x]; }
    const std::vector<int>& lower_covers(int x) const { return down_[x]; }
    bool covers(int lower, int upper) const;

    bool leq(int x, int y) const;
    bool less(int x, int y) const { return x != y && leq(x, y); }
    // All y with x <= y, as a bitset over element indices.
    const boost::dynamic_bitset<>& up_set(int x) const { return up_sets_[x]; }
    const boost::dynamic_bitset<>& down_set(int x) const { return down_sets_[x]; }

    // Linear extension, smallest available index first.
    const std::vector<int>& linear_extension() const { return topo_; }

    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;
    std::optional<int> bottom() const;
    std::optional<int> top() const;
    std::vector<int> atoms() const;

    // Longest-chain height from below; present when every cover raises it by one.
    std::optional<std::vector<int>> rank_function() const;
    bool is_graded() const;

    FinitePoset induced(std::span<const int> subset) const;
    FinitePoset interval(int x, int y) const;
    FinitePoset open_interval(int x, int y) const;
    FinitePoset upper_interval(int x) const;
    FinitePoset without_bounds() const;
    // Adjoins a new bottom and a new top (P-hat).
    FinitePoset bounded_extension() const;
    FinitePoset with_bottom(const std::string& label = "0^") const;
    FinitePoset with_top(const std::string& label = "1^") const;

    std::string to_json() const;
    std::string to_dot(const std::string& name = "poset") const;

private:
    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> up_;
    std::vector<std::vector<int>> down_;
    std::vector<int> topo_;
    std::vector<boost::dynamic_bitset<>> up_sets_;
    std::vector<boost::dynamic_bitset<>> down_sets_;
};

// Elements are reindexed by sorted label; covers are the transitive reduction.
FinitePoset build_poset(std::vector<std::string> labels, const std::function<bool(int, int)>& leq);

class BettiVector {
public:
    static constexpr int kMinDegree = -2;

    std::int64_t operator[](int degree) const;
    void set(int degree, std::int64_t value);
    int max_degree() const { return kMinDegree + static_cast<int>(dims_.size()) - 1; }
    std::optional<int> concentrated_degree() const;
    bool is_zero() const;
    std::int64_t euler_characteristic() const;
    std::string to_string() const;

    friend bool operator==(const BettiVector&, const BettiVector&) = default;

private:
    std::vector<std::int64_t> dims_;
};

struct ChainComplex {
    // simplices[k] holds the chains with k+1 elements, sorted lexicographically.
    std::vector<std::vector<std::vector<int>>> simplices;

    int dimension() const { return static_cast<int>(simplices.size()) - 1; }
    std::size_t count(int k) const;
    int find(int k, std::span<const int> chain) const;
    // Boundary of each k-simplex over the (k-1)-simplices; k = 0 is the augmentation.
    std::vector<SparseRow> boundary(int k) const;
};

ChainComplex order_complex(const FinitePoset& poset, std::uint64_t budget);

BettiVector betti_reduced(const FinitePoset& poset, std::uint64_t budget);
// Reduced homology of the open interval (x,y); x == y gives degree -2.
BettiVector interval_betti(const FinitePoset& poset, int x, int y, std::uint64_t budget);
std::int64_t reduced_euler_char(const FinitePoset& poset);
std::int64_t moebius(const FinitePoset& poset, int x, int y);

struct LatticeReport {
    bool is_lattice = false;
    bool is_atomic = false;
    bool is_semimodular = false;
    bool is_graded = false;
    bool is_geometric = false;
};

// Requires a bounded poset.
LatticeReport lattice_tests(const FinitePoset& poset);

// Join of x and y when the least upper bound exists.
std::optional<int> join(const FinitePoset& poset, int x, int y);
std::optional<int> meet(const FinitePoset& poset, int x, int y);

bool is_automorphism(const FinitePoset& poset, std::span<const int> map);
FinitePoset fixed_subposet(const FinitePoset& poset, std::span<const int> automorphism);

}  // namespace eigenposet
