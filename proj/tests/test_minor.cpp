#include "doctest.h"

#include "kmf/chromatic.hpp"
#include "kmf/error.hpp"
#include "kmf/minor.hpp"
#include "kmf/table.hpp"
#include "kmf/verify.hpp"
#include "support/oracles.hpp"

#include <algorithm>

using namespace kmf;

namespace {

MinorCertificate checked_build(int n, int k)
{
    const auto c = build_minor(Params::make(n, k));
    const auto r = verify_minor(c);
    INFO("(" << n << "," << k << ") " << r.summary());
    REQUIRE(r.pass());
    REQUIRE(c.claimed_order == c.order());
    return c;
}

// Sum of floor(C(n-i, k-1) / l) over a range of i, straight from Pascal's triangle.
std::uint64_t floor_sum(int n, int k, int from, int to, int l)
{
    std::uint64_t total = 0;
    for (int i = from; i <= to; ++i) {
        total += oracle::pascal(n - i, k - 1) / static_cast<std::uint64_t>(l);
    }
    return total;
}

bool has_crossing_edge(const Block& a, const Block& b)
{
    for (KSet x : a) {
        for (KSet y : b) {
            if (intersects(x, y)) {
                return true;
            }
        }
    }
    return false;
}

} // namespace

TEST_CASE("routing")
{
    CHECK(route_case(Params::make(7, 3)) == CaseTag::S2_CASE1);
    CHECK(route_case(Params::make(8, 3)) == CaseTag::S2_CASE2);
    CHECK(route_case(Params::make(9, 3)) == CaseTag::S3_CASE1);
    CHECK(route_case(Params::make(10, 3)) == CaseTag::S3_CASE2);
    CHECK(route_case(Params::make(11, 3)) == CaseTag::S3_CASE3);
    CHECK(route_case(Params::make(14, 3)) == CaseTag::SPECIAL_14_3);
    CHECK(route_case(Params::make(18, 3)) == CaseTag::S4_K3_SHIFT);
    CHECK(route_case(Params::make(19, 3)) == CaseTag::S4_K3);
    CHECK(route_case(Params::make(20, 4)) == CaseTag::S4_KGE4);
    CHECK(route_case(Params::make(15, 4)) == CaseTag::S3_CASE3);
}

TEST_CASE("case names round trip")
{
    for (auto tag : {CaseTag::S2_CASE1, CaseTag::S2_CASE2, CaseTag::S3_CASE1, CaseTag::S3_CASE2,
                     CaseTag::S3_CASE3, CaseTag::S4_KGE4, CaseTag::S4_K3, CaseTag::S4_K3_SHIFT,
                     CaseTag::SPECIAL_14_3}) {
        CHECK(case_tag_from_string(to_string(tag)) == tag);
    }
    CHECK_THROWS_AS(case_tag_from_string("S5"), StructuralError);
}

TEST_CASE("orders of the small regimes")
{
    CHECK(checked_build(7, 3).order() == 23);
    CHECK(checked_build(8, 3).order() == 30);
    CHECK(checked_build(9, 3).order() == 40);
    CHECK(checked_build(11, 3).order() == 60);
    CHECK(checked_build(9, 4).order() == 88);
    CHECK(checked_build(15, 4).order() == 505);
    CHECK(checked_build(11, 4).order() >= 165);
}

TEST_CASE("orders equal the floor sums")
{
    // s = 2, t <= k-2: all of A_1 plus pairs from A_2..A_k.
    CHECK(checked_build(7, 3).order() == oracle::pascal(6, 2) + floor_sum(7, 3, 2, 3, 2));
    CHECK(checked_build(9, 4).order() == oracle::pascal(8, 3) + floor_sum(9, 4, 2, 4, 2));
    // s = 3, t = k-1: the build at n-1 plus C-blocks of size 4.
    CHECK(checked_build(15, 4).order()
          == oracle::pascal(12, 3) + floor_sum(13, 4, 2, 4, 3) + oracle::pascal(13, 3) / 4
                 + oracle::pascal(14, 3) / 4);
}

TEST_CASE("(14,3)")
{
    const auto c = checked_build(14, 3);
    CHECK(c.order() == 107);
    CHECK(chi(Params::make(14, 3)) == 91);
    REQUIRE(c.trace.size() >= 2);
    CHECK(c.trace.back().tag == CaseTag::SPECIAL_14_3);
    CHECK(c.trace.back().at("blocks") == 19);
    CHECK(c.trace.front().at("blocks") == 88);
    CHECK(k3_order(13) == 88);
    for (std::size_t b = 88; b < c.blocks.size(); ++b) {
        CHECK(c.blocks[b].size() == 4);
        CHECK(covered_labels(c.blocks[b]).size() == 9);
    }
    CHECK(build_14_3().blocks == c.blocks);
}

TEST_CASE("k = 3 table instances")
{
    CHECK(K3Params::compute(19).l == 5);
    CHECK(k3_order(19) == 168);
    CHECK(k3_order(23) == 255);
    CHECK(checked_build(19, 3).order() == 168);

    const auto shifted = checked_build(18, 3);
    CHECK(shifted.trace.back().tag == CaseTag::S4_K3_SHIFT);
    CHECK(shifted.order() == k3_order(17));
    CHECK(shifted.order() >= 147);
    CHECK(K3Params::compute(17).l == 4);
    for (const auto& b : shifted.blocks) {
        CHECK_FALSE(covered_labels(b).contains(18));
    }
}

TEST_CASE("K3 parameters")
{
    for (int n = 12; n <= 64; ++n) {
        const auto q = K3Params::compute(n);
        CHECK(q.s_prime * 4 + q.t_prime == n);
        CHECK(q.l == (q.t_prime <= 1 ? q.s_prime : q.s_prime + 1));
        CHECK(q.n_prime == n - 2 * q.l);
        CHECK(K3Params::window_holds(n, q.l));
    }
    CHECK_FALSE(K3Params::window_holds(20, 3));
}

TEST_CASE("S4 parameters")
{
    const auto q17 = S4Params::compute(Params::make(17, 4));
    CHECK(q17.l_prime == 5);
    CHECK(q17.l == 3);
    CHECK(q17.n_prime == 8);
    CHECK(S4Params::compute(Params::make(19, 4)).l == 3);
    CHECK(S4Params::compute(Params::make(19, 4)).l_prime == 6);
    CHECK(S4Params::compute(Params::make(20, 4)).l == 4);
}

TEST_CASE("S4 inequalities on the grid")
{
    for (int k = 4; k <= 6; ++k) {
        for (int n = 4 * k; n <= 64; ++n) {
            const auto p = Params::make(n, k);
            INFO("(" << n << "," << k << ")");
            CHECK(check_s4_inequalities(p, S4Params::compute(p)).all());
        }
    }
}

TEST_CASE("closed-form lower bounds")
{
    CHECK(closed_form_lower_bound(Params::make(7, 3)) == Rational(22));
    CHECK(closed_form_lower_bound(Params::make(11, 3)) <= Rational(60));
    CHECK_THROWS_AS(closed_form_lower_bound(Params::make(12, 3)), ParameterError);
    for (int k = 3; k <= 6; ++k) {
        for (int n = 2 * k + 1; n < 4 * k; ++n) {
            const auto p = Params::make(n, k);
            if (binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)) > 20000) {
                continue;
            }
            INFO("(" << n << "," << k << ")");
            CHECK(Rational(BigInt(build_minor(p).order())) >= Rational(ceil(closed_form_lower_bound(p))));
        }
    }
}

TEST_CASE("s >= 4 bound analytics")
{
    const auto r20 = bound_check_s4(Params::make(20, 4));
    CHECK(r20.pass());
    CHECK(r20.threshold == Rational(176, 1000));
    const auto r25 = bound_check_s4(Params::make(25, 5));
    CHECK(r25.pass());
    CHECK(r25.threshold == Rational(151, 1000));
    const auto r24 = bound_check_s4(Params::make(24, 4));
    CHECK(r24.covers_l);
    CHECK(r24.q.l <= 5);
    CHECK_THROWS_AS(bound_check_s4(Params::make(12, 3)), ParameterError);
    CHECK_THROWS_AS(bound_check_s4(Params::make(15, 4)), ParameterError);
}

TEST_CASE("resource cap")
{
    CHECK_THROWS_AS(build_minor(Params::make(30, 5)), ResourceError);
    CHECK_THROWS_AS(build_minor(Params::make(11, 3), 100), ResourceError);
}

TEST_CASE("builders reject foreign regimes")
{
    CHECK_THROWS_AS(build_s2_case1(Params::make(11, 3)), ParameterError);
    CHECK_THROWS_AS(build_s3(Params::make(7, 3)), ParameterError);
    CHECK_THROWS_AS(build_s4_k3(Params::make(14, 3)), ParameterError);
    CHECK_THROWS_AS(build_s4_kge4(Params::make(19, 3)), ParameterError);
}

TEST_CASE("replaying a trace rebuilds the certificate")
{
    for (auto [n, k] : {std::pair{7, 3}, {8, 3}, {10, 3}, {11, 3}, {14, 3}, {18, 3}, {19, 3}, {15, 4},
                        {17, 4}, {13, 5}}) {
        const auto c = build_minor(Params::make(n, k));
        const auto r = replay_trace(n, k, c.trace);
        CHECK(r.blocks == c.blocks);
        CHECK(r.claimed_order == c.claimed_order);
    }
    auto bad = build_minor(Params::make(11, 3)).trace;
    bad.back().params["blocks"] += 1;
    CHECK_THROWS_AS(replay_trace(11, 3, bad), StructuralError);
}

TEST_CASE("blocks share a common label and wide pairs are adjacent")
{
    for (auto [n, k] : {std::pair{7, 3}, {8, 3}, {9, 3}, {10, 3}, {11, 3}, {13, 3}, {14, 3}, {9, 4},
                        {11, 4}, {12, 4}, {16, 4}, {11, 5}}) {
        const auto c = build_minor(Params::make(n, k));
        std::vector<int> cover;
        for (const auto& b : c.blocks) {
            Mask common = ~Mask{0};
            for (KSet x : b) {
                common &= x.bits();
            }
            CHECK((b.size() == 1 || common != 0));
            cover.push_back(covered_labels(b).size());
        }
        for (std::size_t i = 0; i < c.blocks.size(); ++i) {
            for (std::size_t j = i + 1; j < c.blocks.size(); ++j) {
                if (cover[i] + cover[j] > n) {
                    REQUIRE(has_crossing_edge(c.blocks[i], c.blocks[j]));
                }
            }
        }
    }
}
