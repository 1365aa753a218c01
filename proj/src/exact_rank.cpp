#include "eigenposet/exact_rank.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eigenposet {
namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow : std::exception {};

struct CheckedOps {
    using Int = std::int64_t;
    static Int mul(Int a, Int b)
    {
        Int r;
        if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static Int sub(Int a, Int b)
    {
        Int r;
        if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
    static Int gcd(Int a, Int b)
    {
        if (a == INT64_MIN || b == INT64_MIN) throw Overflow{};
        return std::gcd(a, b);
    }
    static Int from(std::int64_t v) { return v; }
};

struct BigOps {
    using Int = BigInt;
    static Int mul(const Int& a, const Int& b) { return a * b; }
    static Int sub(const Int& a, const Int& b) { return a - b; }
    static Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
    static Int from(std::int64_t v) { return Int(v); }
};

template <class Ops>
std::size_t eliminate(const std::vector<SparseRow>& input)
{
    using Int = typename Ops::Int;
    using Row = std::vector<std::pair<int, Int>>;

    auto make_primitive = [](Row& row) {
        Int g = 0;
        for (auto& [c, v] : row) {
            g = Ops::gcd(g, v);
            if (g == 1) break;
        }
        if (row.front().second < 0) g = -g;
        if (g != 1)
            for (auto& [c, v] : row) v /= g;
    };

    int columns = 0;
    for (const auto& row : input)
        for (const auto& [c, v] : row) columns = std::max(columns, c + 1);
    std::vector<Row> pivot(static_cast<std::size_t>(columns));

    std::size_t rank = 0;
    Row scratch;
    for (const auto& source : input) {
        Row row;
        row.reserve(source.size());
        for (const auto& [c, v] : source)
            if (v != 0) row.emplace_back(c, Ops::from(v));
        while (!row.empty()) {
            const int lead = row.front().first;
            Row& p = pivot[lead];
            if (p.empty()) {
                make_primitive(row);
                p = std::move(row);
                ++rank;
                break;
            }
            const Int g = Ops::gcd(row.front().second, p.front().second);
            const Int row_scale = p.front().second / g;
            const Int pivot_scale = row.front().second / g;
            scratch.clear();
            std::size_t i = 1, j = 1;
            while (i < row.size() || j < p.size()) {
                if (j >= p.size() || (i < row.size() && row[i].first < p[j].first)) {
                    scratch.emplace_back(row[i].first, Ops::mul(row[i].second, row_scale));
                    ++i;
                } else if (i >= row.size() || p[j].first < row[i].first) {
                    scratch.emplace_back(p[j].first, Ops::sub(0, Ops::mul(p[j].second, pivot_scale)));
                    ++j;
                } else {
                    Int v = Ops::sub(Ops::mul(row[i].second, row_scale), Ops::mul(p[j].second, pivot_scale));
                    if (v != 0) scratch.emplace_back(row[i].first, std::move(v));
                    ++i;
                    ++j;
                }
            }
            std::swap(row, scratch);
            if (!row.empty()) make_primitive(row);
        }
    }
    return rank;
}

}  // namespace

std::size_t exact_rank(const std::vector<SparseRow>& rows)
{
    for (const auto& row : rows)
        for (std::size_t i = 1; i < row.size(); ++i)
            if (row[i - 1].first >= row[i].first) throw std::invalid_argument("sparse row columns must increase");
    try {
        return eliminate<CheckedOps>(rows);
    } catch (const Overflow&) {
        return eliminate<BigOps>(rows);
    }
}

}  // namespace eigenposet
