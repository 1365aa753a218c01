#include "doctest.h"

#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "eigenposet/errors.hpp"
#include "eigenposet/exact_rank.hpp"

using namespace eigenposet;

namespace {

using boost::multiprecision::cpp_rational;

std::size_t rational_rank(std::vector<std::vector<cpp_rational>> a)
{
    std::size_t rank = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
        if (pivot == a.size()) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const cpp_rational f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("exact rank of small matrices")
{
    CHECK(exact_rank({}) == 0);
    CHECK(exact_rank({{{0, 1}, {1, 1}}, {{0, 2}, {1, 2}}}) == 1);
    CHECK(exact_rank({{{0, 1}}, {{1, 1}}, {{0, 1}, {1, 1}}}) == 2);
    CHECK(exact_rank({{}, {{3, -4}}}) == 1);
}

TEST_CASE("exact rank agrees with rational elimination on random matrices")
{
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> entry(-3, 3), dim(1, 9);
    for (int trial = 0; trial < 300; ++trial) {
        const int rows = dim(rng), cols = dim(rng);
        std::vector<std::vector<cpp_rational>> dense(rows, std::vector<cpp_rational>(cols));
        std::vector<SparseRow> sparse(rows);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                const int v = trial % 3 == 0 ? entry(rng) * (entry(rng) == 0) : entry(rng);
                dense[r][c] = v;
                if (v) sparse[r].emplace_back(c, v);
            }
        CHECK(exact_rank(sparse) == rational_rank(dense));
    }
}

TEST_CASE("exact rank survives entries that overflow 64 bits")
{
    const std::int64_t big = std::int64_t{1} << 40;
    std::vector<SparseRow> rows{{{0, big}, {1, big - 1}}, {{0, big - 1}, {1, big}}, {{0, 1}, {1, -1}}};
    CHECK(exact_rank(rows) == 2);
}
