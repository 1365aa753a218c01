#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eigenposet/dowling.hpp"

namespace eigenposet {

// The group G(m,p,n) together with the order d of the eigenvalue.
// Roots of unity are exponents in Z/M with M = lcm(m,d).
struct GroupParams {
    int m = 1;
    int p = 1;
    int n = 1;
    int d = 1;

    static GroupParams make(int m, int p, int n, int d);

    int modulus() const;   // lcm(m,d)
    int zeta() const;      // exponent of the eigenvalue, M/d
    int root_step() const; // M/m, the exponent step of an m-th root of unity
    // |G(m,p,n)|, saturating at UINT64_MAX.
    std::uint64_t order() const;

    friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

std::string to_string(const GroupParams& params);

inline int mod(long long a, int modulus)
{
    long long r = a % modulus;
    return static_cast<int>(r < 0 ? r + modulus : r);
}

// A cycle sigma_1 -> sigma_2 -> ... -> sigma_l -> sigma_1 where letter
// sigma_k carries color delta_k.  Stored in canonical rotation.
class ColoredCycle {
public:
    ColoredCycle(std::vector<int> support, std::vector<int> colors, int modulus);

    int length() const { return static_cast<int>(support_.size()); }
    int modulus() const { return modulus_; }
    const std::vector<int>& support() const { return support_; }
    const std::vector<int>& colors() const { return colors_; }
    int color_sum() const;

    std::string to_string() const;

    friend auto operator<=>(const ColoredCycle&, const ColoredCycle&) = default;

private:
    std::vector<int> support_;
    std::vector<int> colors_;
    int modulus_;
};

// e_i -> omega^{color(i)} e_{perm(i)}, letters 1..n.
class ColoredPermutation {
public:
    ColoredPermutation(std::vector<int> one_line, std::vector<int> colors, int modulus);

    static ColoredPermutation identity(int n, int modulus);
    static ColoredPermutation from_cycles(int n, int modulus, std::span<const ColoredCycle> cycles);
    static ColoredPermutation parse(std::string_view text, int modulus);

    int size() const { return static_cast<int>(image_.size()); }
    int modulus() const { return modulus_; }
    int image(int letter) const { return image_[letter - 1]; }
    int color(int letter) const { return color_[letter - 1]; }
    const std::vector<int>& one_line() const { return image_; }
    const std::vector<int>& colors() const { return color_; }

    ColoredPermutation inverse() const;
    bool in_group(const GroupParams& params) const;
    std::string to_string() const;

    friend auto operator<=>(const ColoredPermutation&, const ColoredPermutation&) = default;

private:
    std::vector<int> image_;
    std::vector<int> color_;
    int modulus_;
};

// a after b.
ColoredPermutation compose(const ColoredPermutation& a, const ColoredPermutation& b);

std::vector<ColoredCycle> cycle_decomposition(const ColoredPermutation& g);

std::vector<int> degrees(const GroupParams& params);
std::vector<int> A_of_d(const GroupParams& params);
int a_of_d(const GroupParams& params);
int ell_of_d(int m, int d);

// Weighted block (letter, weight) pairs in cycle order, first weight 0.
using WeightedBlock = std::vector<std::pair<int, int>>;

std::optional<WeightedBlock> cycle_eigenspace(const ColoredCycle& cycle, const GroupParams& params);

// V(g, zeta); for d = 1 this is the fixed space of g.
WeightedPartition eigenspace(const ColoredPermutation& g, const GroupParams& params);

// Eigenspace of g for the eigenvalue omega^exponent (omega a primitive M-th root).
WeightedPartition eigenspace_for_exponent(const ColoredPermutation& g, int exponent);
WeightedPartition fixed_space(const ColoredPermutation& g);

// g.V(pi) as a subspace.
WeightedPartition act(const ColoredPermutation& g, const WeightedPartition& pi);

void for_each_group_element(const GroupParams& params, std::uint64_t budget,
                            const std::function<void(const ColoredPermutation&)>& visit);
std::vector<ColoredPermutation> enumerate_group(const GroupParams& params, std::uint64_t budget);

// Reflecting hyperplanes of G(m,p,n) as atoms of the Dowling lattice of the given modulus.
std::vector<WeightedPartition> reflection_hyperplanes(const GroupParams& params, int modulus);

}  // namespace eigenposet
