#pragma once

#include "kmf/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>

namespace kmf {

/// One row of the k = 3, s >= 4 order table.
struct K3TableRow {
    int n = 0;
    int l = 0;           ///< block size of the K3Params of n
    std::uint64_t f = 0; ///< sum_{i=1}^{n-2l} floor(C(n-i,2) / l)
    Rational g;          ///< (C(n,3) - C(2l,3)) / l - (n - 2l), a lower bound on f
    BigInt g_floor;
    std::uint64_t chi = 0;
    /// f(n) < chi(n) is expected here; the builder works inside [n-1]
    /// (or, for n = 14, extends the n = 13 build).
    bool built_below = false;
};

K3TableRow k3_table_row(int n);

/// Published reference values for 12 <= n <= 35 (blank entries are nullopt).
struct K3Reference {
    int n;
    int l;
    std::optional<std::uint64_t> f;
    std::optional<std::uint64_t> g_floor;
    std::uint64_t chi;
};

const std::array<K3Reference, 24>& k3_reference_table();

/// Reference row for n, or nullptr outside [12, 35].
const K3Reference* k3_reference(int n);

} // namespace kmf
