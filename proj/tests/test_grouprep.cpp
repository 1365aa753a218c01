#include "doctest.h"

#include <array>
#include <complex>
#include <numbers>
#include <random>
#include <set>

#include "eigenposet/errors.hpp"
#include "eigenposet/grouprep.hpp"

using namespace eigenposet;

namespace {

using Complex = std::complex<double>;
using Matrix = std::vector<std::vector<Complex>>;

Complex root(int exponent, int modulus) { return std::polar(1.0, 2 * std::numbers::pi * exponent / modulus); }

Matrix matrix_of(const ColoredPermutation& g)
{
    const int n = g.size();
    Matrix a(n, std::vector<Complex>(n, 0.0));
    for (int i = 1; i <= n; ++i) a[g.image(i) - 1][i - 1] = root(g.color(i), g.modulus());
    return a;
}

int numeric_rank(Matrix a)
{
    const std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
    int rank = 0;
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
        std::size_t pivot = rank;
        for (std::size_t r = rank; r < rows; ++r)
            if (std::abs(a[r][c]) > std::abs(a[pivot][c])) pivot = r;
        if (std::abs(a[pivot][c]) < 1e-9) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (static_cast<int>(r) == rank) continue;
            const Complex f = a[r][c] / a[rank][c];
            for (std::size_t k = 0; k < cols; ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

// One vector per nonzero block: coordinate a is omega^{-w(a)} on the block.
std::vector<std::vector<Complex>> basis_of(const WeightedPartition& pi)
{
    std::vector<std::vector<Complex>> basis;
    for (const auto& block : pi.blocks()) {
        std::vector<Complex> v(pi.size(), 0.0);
        for (int a : block) v[a - 1] = root(-pi.weight(a), pi.modulus());
        basis.push_back(v);
    }
    return basis;
}

std::vector<Complex> times(const Matrix& a, const std::vector<Complex>& v)
{
    std::vector<Complex> out(v.size(), 0.0);
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c) out[r] += a[r][c] * v[c];
    return out;
}

bool in_subspace(const std::vector<Complex>& u, const WeightedPartition& pi)
{
    Matrix spanning = basis_of(pi);
    const int before = numeric_rank(spanning);
    spanning.push_back(u);
    return numeric_rank(spanning) == before;
}

void check_eigenspace(const ColoredPermutation& g, const GroupParams& params)
{
    const WeightedPartition V = eigenspace(g, params);
    const Matrix a = matrix_of(g);
    const Complex zeta = root(1, params.d);
    Matrix shifted = a;
    for (std::size_t i = 0; i < a.size(); ++i) shifted[i][i] -= zeta;
    CHECK(V.block_count() == params.n - numeric_rank(shifted));
    for (const auto& v : basis_of(V)) {
        const auto image = times(a, v);
        for (std::size_t i = 0; i < v.size(); ++i) CHECK(std::abs(image[i] - zeta * v[i]) < 1e-9);
    }
}

}  // namespace

TEST_CASE("group parameters")
{
    const GroupParams g = GroupParams::make(4, 2, 8, 3);
    CHECK(g.modulus() == 12);
    CHECK(g.zeta() == 4);
    CHECK(g.root_step() == 3);
    CHECK(degrees(g) == std::vector<int>{4, 8, 12, 16, 16, 20, 24, 28});
    CHECK(a_of_d(g) == 2);
    CHECK(ell_of_d(4, 3) == 3);
    CHECK(ell_of_d(4, 6) == 3);
    CHECK_THROWS_AS(GroupParams::make(3, 2, 2, 2), InvalidArgument);
    CHECK_THROWS_AS(GroupParams::make(2, 1, 0, 2), InvalidArgument);
}

TEST_CASE("group orders and membership")
{
    for (const auto& [m, p, n] : std::vector<std::array<int, 3>>{{1, 1, 4}, {2, 1, 3}, {2, 2, 4}, {3, 3, 3}, {4, 2, 2}, {6, 3, 2}}) {
        const GroupParams params = GroupParams::make(m, p, n, 1);
        const auto elements = enumerate_group(params, 1'000'000);
        CHECK(elements.size() == params.order());
        std::set<ColoredPermutation> distinct(elements.begin(), elements.end());
        CHECK(distinct.size() == elements.size());
        for (const auto& g : elements) REQUIRE(g.in_group(params));
    }
}

TEST_CASE("composition and inverses follow the matrix product")
{
    const GroupParams params = GroupParams::make(4, 2, 3, 2);
    const auto elements = enumerate_group(params, 1'000'000);
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
        const auto& a = elements[pick(rng)];
        const auto& b = elements[pick(rng)];
        const Matrix ab = matrix_of(compose(a, b));
        const Matrix ma = matrix_of(a), mb = matrix_of(b);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Complex expected = 0.0;
                for (int k = 0; k < 3; ++k) expected += ma[i][k] * mb[k][j];
                REQUIRE(std::abs(ab[i][j] - expected) < 1e-9);
            }
        CHECK(compose(a, a.inverse()) == ColoredPermutation::identity(3, a.modulus()));
        CHECK(compose(a, compose(b, a)) == compose(compose(a, b), a));
    }
}

TEST_CASE("text forms")
{
    const auto g = ColoredPermutation::parse("[2,3,1] ; [0,3,6]", 12);
    CHECK(g.image(1) == 2);
    CHECK(g.color(3) == 6);
    CHECK(ColoredPermutation::parse(g.to_string(), 12) == g);
    const auto cycles = cycle_decomposition(g);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].support() == std::vector<int>{1, 2, 3});
    CHECK(cycles[0].color_sum() == 9);
    CHECK(ColoredPermutation::from_cycles(3, 12, cycles) == g);
}

TEST_CASE("eigenspaces agree with a numeric computation")
{
    for (const auto& [m, p, n, d] : std::vector<std::array<int, 4>>{
             {1, 1, 4, 2}, {1, 1, 4, 3}, {2, 1, 3, 4}, {4, 2, 3, 3}, {4, 2, 3, 4}, {3, 3, 3, 2}, {4, 4, 2, 8}, {2, 2, 3, 1}}) {
        const GroupParams params = GroupParams::make(m, p, n, d);
        CAPTURE(to_string(params));
        for_each_group_element(params, 1'000'000, [&](const ColoredPermutation& g) { check_eigenspace(g, params); });
    }
}

TEST_CASE("the action on subspaces is the matrix action")
{
    const GroupParams params = GroupParams::make(4, 2, 3, 4);
    const auto elements = enumerate_group(params, 1'000'000);
    const WeightedPartition pi = WeightedPartition::parse("0 | 1^0 2^1 | 3^0", 3, 4);
    for (const auto& g : elements) {
        const WeightedPartition image = act(g, pi);
        CHECK(image.block_count() == pi.block_count());
        for (const auto& v : basis_of(pi)) REQUIRE(in_subspace(times(matrix_of(g), v), image));
    }
}

TEST_CASE("reflecting hyperplanes")
{
    CHECK(reflection_hyperplanes(GroupParams::make(1, 1, 4, 1), 1).size() == 6);
    CHECK(reflection_hyperplanes(GroupParams::make(4, 2, 3, 1), 4).size() == 4 * 3 + 3);
    CHECK(reflection_hyperplanes(GroupParams::make(3, 3, 3, 1), 3).size() == 9);
    // Each hyperplane is the fixed space of an element of W.
    const GroupParams params = GroupParams::make(4, 2, 3, 1);
    std::set<WeightedPartition> fixed;
    for_each_group_element(params, 1'000'000, [&](const ColoredPermutation& g) {
        const auto f = fixed_space(g);
        if (f.block_count() == 2) fixed.insert(f);
    });
    for (const auto& h : reflection_hyperplanes(params, 4)) CHECK(fixed.count(h) == 1);
    CHECK(fixed.size() == 15);
}
