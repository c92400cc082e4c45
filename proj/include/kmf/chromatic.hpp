#pragma once

#include "kmf/combinatorics.hpp"

#include <cstdint>
#include <vector>

namespace kmf {

/// Claimed proper coloring of K̄(n,k): every class is a family of pairwise
/// disjoint k-sets.
struct ColoringCertificate {
    int n = 0;
    int k = 0;
    std::vector<Block> classes;
    /// The certificate claims its class count equals the chromatic number.
    bool optimal = false;
};

/// ceil(C(n,k) / floor(n/k)).
std::uint64_t chi(const Params& p);

/// Proper coloring with exactly chi(p) classes: an almost regular partition
/// into classes of size floor(n/k) (plus a remainder). Such classes have all
/// degrees in {0, 1}, so their members are pairwise disjoint.
ColoringCertificate build_coloring(const Params& p, std::uint64_t cap = hyperedge_cap());

/// Largest brute-force instance alpha_oracle accepts.
inline constexpr std::uint64_t kAlphaOracleCap = 500;

/// Maximum number of pairwise disjoint k-subsets of [n], by exhaustive
/// branch and bound over the k-sets. Throws ResourceError when C(n,k)
/// exceeds kAlphaOracleCap.
int alpha_oracle(const Params& p);

} // namespace kmf
