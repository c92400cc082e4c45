#pragma once

#include "kmf/combinatorics.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace kmf {

/// Target of a partition of the complete k-uniform hypergraph on the label
/// interval [first, last] into classes of the given sizes.
struct PartitionPlan {
    int first = 1;
    int last = 0;
    int k = 0;
    std::vector<std::uint64_t> sizes;

    int ground_size() const { return last - first + 1; }

    /// floor(C(g,k) / block_size) classes of `block_size`, followed by one
    /// remainder class when block_size does not divide C(g,k).
    static PartitionPlan uniform(int first, int last, int k, std::uint64_t block_size);
};

/// Partition of all k-subsets of the plan's ground into almost regular classes.
/// Class j has exactly plan.sizes[j] members, listed in colex order.
struct AlmostRegularPartition {
    PartitionPlan plan;
    std::vector<Block> classes;
};

/// Degrees of every ground label of [first, last] in `members`.
std::vector<std::uint64_t> label_degrees(std::span<const KSet> members, int first, int last);

/// max degree - min degree over the ground labels.
std::uint64_t degree_spread(std::span<const KSet> members, int first, int last);

/// Splits the complete k-uniform hypergraph on the plan's ground into classes
/// of the prescribed sizes, each almost regular (degree spread <= 1).
///
/// Labels are added one at a time. Before the label m is added, class j is a
/// multiset of "partial" edges S (subsets of the labels seen so far) with
/// multiplicities; adding m moves a share (k - |S|) / (remaining labels) of
/// every S into S + {m}. That share is rounded to an integer by a flow
/// problem that keeps every per-S total exact and every per-class degree of
/// m at the floor or ceiling of the class's remaining average degree.
///
/// Deterministic for a fixed plan. Throws PlanError on a bad plan,
/// ResourceError when C(g, k) exceeds `cap`, ConstructionError on an
/// internal failure (a bug).
AlmostRegularPartition almost_regular_partition(const PartitionPlan& plan,
                                                std::uint64_t cap = hyperedge_cap());

/// A partition of A_i(n,k) or C(n,k) built from an almost regular partition of
/// the (k-1)-subsets of the remaining labels, with the fixed label added back.
struct CoveredPartition {
    /// Engine output on the stripped family.
    AlmostRegularPartition base;
    /// Label re-added to every member (i for A_i, n for C).
    int fixed_label = 0;
    /// Classes of `base` with `fixed_label` added, in the same order.
    std::vector<Block> blocks;
    /// Number of leading full-size blocks (d_i or r).
    std::uint64_t guaranteed_blocks = 0;
    /// Each of the leading blocks covers at least this many labels of [n].
    int coverage_floor = 0;

    bool has_remainder() const { return blocks.size() > guaranteed_blocks; }
    std::span<const Block> guaranteed() const { return {blocks.data(), guaranteed_blocks}; }
};

/// Partition of A_i(n,k) into d_i = floor(C(n-i,k-1)/l) blocks of size l plus
/// a remainder; the first d_i blocks each cover at least
/// min(n-i+1, l(k-1)+1) labels (checked, ConstructionError otherwise).
CoveredPartition partition_A(int i, const Params& p, std::uint64_t l);

/// Partition of C(n,k) into r = floor(C(n-1,k-1)/l) blocks of size l plus a
/// remainder; the first r blocks each cover at least min(n, l(k-1)+1) labels.
CoveredPartition partition_C(const Params& p, std::uint64_t l);

} // namespace kmf
