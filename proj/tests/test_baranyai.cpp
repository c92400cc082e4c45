#include "doctest.h"

#include "kmf/baranyai.hpp"
#include "kmf/error.hpp"
#include "kmf/verify.hpp"
#include "support/oracles.hpp"

#include <algorithm>
#include <random>

using namespace kmf;

namespace {

std::vector<std::uint64_t> random_sizes(std::uint64_t total, std::mt19937& rng)
{
    std::vector<std::uint64_t> sizes;
    while (total > 0) {
        const std::uint64_t a = 1 + rng() % std::min<std::uint64_t>(total, 1 + rng() % 12);
        sizes.push_back(a);
        total -= a;
    }
    return sizes;
}

void require_valid(const AlmostRegularPartition& a)
{
    const auto r = verify_partition(a);
    INFO(r.summary());
    REQUIRE(r.pass());
    for (const auto& cls : a.classes) {
        REQUIRE(std::is_sorted(cls.begin(), cls.end()));
    }
}

} // namespace

TEST_CASE("single hyperedge")
{
    const auto a = almost_regular_partition({1, 3, 3, {1}});
    REQUIRE(a.classes.size() == 1);
    CHECK(a.classes[0] == Block{LabelSet{1, 2, 3}});
}

TEST_CASE("one-factorization of K4")
{
    const auto a = almost_regular_partition({1, 4, 2, {2, 2, 2}});
    require_valid(a);
    for (const auto& cls : a.classes) {
        REQUIRE(cls.size() == 2);
        CHECK_FALSE(intersects(cls[0], cls[1]));
    }
}

TEST_CASE("triples of [9] in 28 parallel classes")
{
    const auto a = almost_regular_partition(PartitionPlan::uniform(1, 9, 3, 3));
    require_valid(a);
    REQUIRE(a.classes.size() == 28);
    for (const auto& cls : a.classes) {
        CHECK(degree_spread(cls, 1, 9) == 0);
        CHECK(covered_labels(cls).size() == 9);
    }
}

TEST_CASE("uniform plans")
{
    const auto p = PartitionPlan::uniform(1, 13, 2, 4);
    CHECK(p.sizes.size() == 20);
    CHECK(p.sizes.back() == 2);
    CHECK(PartitionPlan::uniform(1, 9, 3, 3).sizes == std::vector<std::uint64_t>(28, 3));
    CHECK_THROWS_AS(PartitionPlan::uniform(1, 5, 2, 0), PlanError);
    CHECK_THROWS_AS(PartitionPlan::uniform(1, 5, 2, 11), PlanError);
}

TEST_CASE("bad plans")
{
    CHECK_THROWS_AS(almost_regular_partition({1, 5, 2, {3, 3}}), PlanError);
    CHECK_THROWS_AS(almost_regular_partition({1, 5, 2, {0, 10}}), PlanError);
    CHECK_THROWS_AS(almost_regular_partition({1, 5, 2, {}}), PlanError);
    CHECK_THROWS_AS(almost_regular_partition({1, 30, 5, {142506}}), ResourceError);
    CHECK_THROWS_AS(almost_regular_partition({1, 9, 3, {84}}, 50), ResourceError);
}

TEST_CASE("nonuniform sizes keep every class almost regular")
{
    std::mt19937 rng(2024);
    for (int g = 3; g <= 11; ++g) {
        for (int k = 1; k <= g; ++k) {
            const auto total = binomial(static_cast<std::uint64_t>(g), static_cast<std::uint64_t>(k));
            for (int trial = 0; trial < 8; ++trial) {
                PartitionPlan plan{1, g, k, random_sizes(total, rng)};
                require_valid(almost_regular_partition(plan));
            }
        }
    }
}

TEST_CASE("shifted grounds")
{
    require_valid(almost_regular_partition(PartitionPlan::uniform(5, 12, 3, 5)));
    require_valid(almost_regular_partition(PartitionPlan::uniform(40, 64, 2, 7)));
}

TEST_CASE("deterministic")
{
    const PartitionPlan plan{1, 10, 4, {7, 50, 3, 60, 90}};
    const auto a = almost_regular_partition(plan);
    const auto b = almost_regular_partition(plan);
    CHECK(a.classes == b.classes);
}

TEST_CASE("exhaustive oracle")
{
    SUBCASE("agrees that small full families always split")
    {
        std::mt19937 rng(11);
        for (int g = 3; g <= 7; ++g) {
            for (int k = 1; k <= g; ++k) {
                const auto family = oracle::scan_family(1, g, k);
                if (family.size() > 30) {
                    continue;
                }
                for (int trial = 0; trial < 5; ++trial) {
                    const auto sizes = random_sizes(family.size(), rng);
                    const auto r = oracle::ExhaustivePartitioner(family, 1, g, sizes).run();
                    REQUIRE(r.verdict == oracle::Verdict::feasible);
                    require_valid(AlmostRegularPartition{{1, g, k, sizes}, r.classes});
                    require_valid(almost_regular_partition({1, g, k, sizes}));
                }
            }
        }
    }
    SUBCASE("finds infeasible families")
    {
        // A star cannot be almost regular over [1,4].
        const std::vector<KSet> star{LabelSet{1, 2}, LabelSet{1, 3}, LabelSet{1, 4}};
        const auto r = oracle::ExhaustivePartitioner(star, 1, 4, {3}).run();
        CHECK(r.verdict == oracle::Verdict::infeasible);
        const auto split = oracle::ExhaustivePartitioner(star, 1, 4, {1, 2}).run();
        CHECK(split.verdict == oracle::Verdict::infeasible);
    }
}

TEST_CASE("partition_A examples")
{
    const auto one = partition_A(5, Params::make(7, 3), 1);
    REQUIRE(one.blocks.size() == 1);
    CHECK(one.blocks[0] == Block{LabelSet{5, 6, 7}});
    CHECK(one.coverage_floor == 3);

    const auto a2 = partition_A(2, Params::make(9, 3), 3);
    CHECK(a2.guaranteed_blocks == 7);
    CHECK_FALSE(a2.has_remainder());
    CHECK(a2.coverage_floor == 7);
    for (const auto& b : a2.guaranteed()) {
        CHECK(b.size() == 3);
        CHECK(covered_labels(b).size() >= 7);
    }

    const auto a1 = partition_A(1, Params::make(13, 3), 4);
    CHECK(a1.guaranteed_blocks == 16);
    REQUIRE(a1.has_remainder());
    CHECK(a1.blocks.back().size() == 2);
    CHECK(a1.coverage_floor == 9);
    for (const auto& b : a1.guaranteed()) {
        CHECK(covered_labels(b).size() >= 9);
    }

    CHECK_THROWS_AS(partition_A(1, Params::make(7, 3), 0), ParameterError);
    CHECK_THROWS_AS(partition_A(1, Params::make(7, 3), 16), ParameterError);
}

TEST_CASE("partition_C examples")
{
    const auto c14 = partition_C(Params::make(14, 3), 4);
    CHECK(c14.guaranteed_blocks == 19);
    REQUIRE(c14.blocks.size() == 20);
    CHECK(c14.blocks.back().size() == 2);
    for (const auto& b : c14.guaranteed()) {
        CHECK(covered_labels(b).size() >= 9);
        CHECK(b.size() == 4);
    }

    const auto c11 = partition_C(Params::make(11, 3), 3);
    CHECK(c11.guaranteed_blocks == 15);
    CHECK(c11.coverage_floor == 7);

    for (int k = 3; k <= 6; ++k) {
        const auto c = partition_C(Params::make(3 * k - 1, k), 3);
        CHECK(c.coverage_floor == 3 * k - 2);
        for (const auto& b : c.guaranteed()) {
            CHECK(covered_labels(b).size() >= static_cast<int>(3 * k - 2));
        }
    }
    CHECK_THROWS_AS(partition_C(Params::make(7, 3), 1), ParameterError);
}

TEST_CASE("covered partitions strip and restore the fixed label")
{
    for (int k = 3; k <= 5; ++k) {
        for (int n = 2 * k + 1; n <= 2 * k + 5; ++n) {
            const auto p = Params::make(n, k);
            for (int i = 1; i <= n - k + 1; ++i) {
                const auto width = binomial(static_cast<std::uint64_t>(n - i), static_cast<std::uint64_t>(k - 1));
                for (std::uint64_t l = 1; l <= std::min<std::uint64_t>(width, 6); ++l) {
                    const auto a = partition_A(i, p, l);
                    REQUIRE(a.base.plan.first == i + 1);
                    REQUIRE(a.base.plan.last == n);
                    REQUIRE(a.base.plan.k == k - 1);
                    REQUIRE(a.fixed_label == i);
                    REQUIRE(a.guaranteed_blocks == width / l);
                    REQUIRE(a.coverage_floor == std::min<int>(n - i + 1, static_cast<int>(l) * (k - 1) + 1));
                    std::vector<KSet> all;
                    for (std::size_t j = 0; j < a.blocks.size(); ++j) {
                        REQUIRE(a.blocks[j].size() == a.base.classes[j].size());
                        for (std::size_t m = 0; m < a.blocks[j].size(); ++m) {
                            REQUIRE(a.blocks[j][m] == a.base.classes[j][m].with(i));
                        }
                        all.insert(all.end(), a.blocks[j].begin(), a.blocks[j].end());
                    }
                    std::sort(all.begin(), all.end());
                    REQUIRE(all == family_A(i, p));
                    for (const auto& b : a.guaranteed()) {
                        REQUIRE(covered_labels(b).size() >= a.coverage_floor);
                    }
                }
            }
        }
    }
}
