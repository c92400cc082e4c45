#include "kmf/table.hpp"

#include "kmf/chromatic.hpp"
#include "kmf/combinatorics.hpp"
#include "kmf/minor.hpp"

namespace kmf {

K3TableRow k3_table_row(int n)
{
    const auto q = K3Params::compute(n);
    K3TableRow row;
    row.n = n;
    row.l = q.l;
    row.f = k3_order(n);
    const Rational all(BigInt(binomial(static_cast<std::uint64_t>(n), 3)));
    const Rational head(BigInt(binomial(static_cast<std::uint64_t>(2 * q.l), 3)));
    row.g = (all - head) / q.l - (n - 2 * q.l);
    row.g_floor = floor(row.g);
    row.chi = chi(Params::make(n, 3));
    row.built_below = n == 14 || n == 18 || n == 22 || n == 26;
    return row;
}

const std::array<K3Reference, 24>& k3_reference_table()
{
    static const std::array<K3Reference, 24> table{{
        {12, 3, std::nullopt, 60, 55},
        {13, 3, std::nullopt, 81, 72},
        {14, 4, std::nullopt, std::nullopt, 91},
        {15, 4, std::nullopt, 92, 91},
        {16, 4, std::nullopt, 118, 112},
        {17, 4, std::nullopt, 147, 136},
        {18, 5, std::nullopt, std::nullopt, 136},
        {19, 5, 168, std::nullopt, 162},
        {20, 5, std::nullopt, 194, 190},
        {21, 5, std::nullopt, 231, 190},
        {22, 6, std::nullopt, std::nullopt, 220},
        {23, 6, 255, std::nullopt, 253},
        {24, 6, std::nullopt, 288, 253},
        {25, 6, std::nullopt, 333, 288},
        {26, 7, std::nullopt, std::nullopt, 325},
        {27, 7, std::nullopt, 352, 325},
        {28, 7, std::nullopt, 402, 364},
        {29, 7, std::nullopt, 455, 406},
        {30, 8, std::nullopt, 423, 406},
        {31, 8, std::nullopt, 476, 450},
        {32, 8, std::nullopt, 534, 496},
        {33, 8, std::nullopt, 595, 496},
        {34, 9, std::nullopt, 558, 544},
        {35, 9, std::nullopt, 619, 595},
    }};
    return table;
}

const K3Reference* k3_reference(int n)
{
    for (const auto& row : k3_reference_table()) {
        if (row.n == n) {
            return &row;
        }
    }
    return nullptr;
}

} // namespace kmf
