#include "doctest.h"

#include "kmf/combinatorics.hpp"
#include "kmf/error.hpp"
#include "support/oracles.hpp"

#include <algorithm>

using namespace kmf;

TEST_CASE("binomial values")
{
    CHECK(binomial(11, 3) == 165);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(14, 3) == 364);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(64, 32) == 1832624140942590534ULL);
}

TEST_CASE("binomial agrees with Pascal's triangle")
{
    for (int a = 0; a <= 64; ++a) {
        for (int b = 0; b <= a; ++b) {
            if (oracle::pascal(a, b) == ~std::uint64_t{0}) {
                continue;
            }
            REQUIRE(binomial(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)) == oracle::pascal(a, b));
        }
    }
}

TEST_CASE("binomial overflow is reported")
{
    CHECK_THROWS_AS(binomial(200, 100), OutOfScopeError);
}

TEST_CASE("params")
{
    const auto p = Params::make(11, 3);
    CHECK(p.s == 3);
    CHECK(p.t == 2);
    CHECK(p.n == p.s * p.k + p.t);
    CHECK_THROWS_AS(Params::make(6, 3), OutOfScopeError);
    CHECK_THROWS_AS(Params::make(9, 2), OutOfScopeError);
    CHECK_THROWS_AS(Params::make(65, 3), OutOfScopeError);
    CHECK_NOTHROW(Params::make(64, 3));
}

TEST_CASE("label sets")
{
    const LabelSet a{1, 4, 7};
    CHECK(a.size() == 3);
    CHECK(a.to_string() == "[1,4,7]");
    CHECK(a.min_label() == 1);
    CHECK(a.max_label() == 7);
    CHECK(a.contains(4));
    CHECK_FALSE(a.contains(5));
    CHECK(a.with(5).to_string() == "[1,4,5,7]");
    CHECK(a.without(4).to_string() == "[1,7]");
    CHECK(LabelSet{64}.max_label() == 64);
    CHECK_THROWS_AS((LabelSet{0}), ParameterError);
    CHECK_THROWS_AS((LabelSet{65}), ParameterError);
    CHECK_THROWS_AS((LabelSet{2, 2}), ParameterError);
}

TEST_CASE("enumerate_family examples")
{
    const auto one = enumerate_family(1, 3, 3);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == LabelSet{1, 2, 3});

    const auto four = enumerate_family(1, 4, 3);
    REQUIRE(four.size() == 4);
    CHECK(four.front() == LabelSet{1, 2, 3});
    CHECK(four.back() == LabelSet{2, 3, 4});

    CHECK(enumerate_family(2, 7, 2).size() == 15);
    CHECK_THROWS_AS(enumerate_family(1, 2, 3), ParameterError);
    CHECK_THROWS_AS(enumerate_family(1, 5, 0), ParameterError);
}

TEST_CASE("enumerate_family matches a scan over all masks")
{
    for (int first = 1; first <= 3; ++first) {
        for (int last = first; last <= first + 13; ++last) {
            for (int k = 1; k <= last - first + 1; ++k) {
                const auto got = enumerate_family(first, last, k);
                const auto want = oracle::scan_family(first, last, k);
                REQUIRE(got == want);
                REQUIRE(std::is_sorted(got.begin(), got.end()));
            }
        }
    }
}

TEST_CASE("enumerate_family at the top of the label range")
{
    const auto top = enumerate_family(60, 64, 2);
    CHECK(top.size() == 10);
    CHECK(top.back() == LabelSet{63, 64});
    CHECK(enumerate_family(1, 64, 64).size() == 1);
}

TEST_CASE("family_A and family_C")
{
    const auto p7 = Params::make(7, 3);
    const auto a5 = family_A(5, p7);
    REQUIRE(a5.size() == 1);
    CHECK(a5[0] == LabelSet{5, 6, 7});

    const auto a1 = family_A(1, p7);
    CHECK(a1.size() == 15);
    CHECK(std::all_of(a1.begin(), a1.end(), [](KSet x) { return x.min_label() == 1; }));

    const auto a2 = family_A(2, Params::make(9, 3));
    CHECK(a2.size() == 21);
    CHECK(std::none_of(a2.begin(), a2.end(), [](KSet x) { return x.contains(1); }));

    const auto c7 = family_C(p7);
    CHECK(c7.size() == 15);
    CHECK(std::all_of(c7.begin(), c7.end(), [](KSet x) { return x.contains(7); }));
    CHECK(family_C(Params::make(14, 3)).size() == 78);

    for (int k = 3; k <= 6; ++k) {
        const auto p = Params::make(2 * k + 1, k);
        const auto c = family_C(p);
        const auto both = std::count_if(c.begin(), c.end(), [](KSet x) { return x.contains(1); });
        CHECK(static_cast<std::uint64_t>(both) == oracle::pascal(p.n - 2, k - 2));
    }
}

TEST_CASE("A families partition the k-sets of [n]")
{
    for (int k = 3; k <= 5; ++k) {
        for (int n = 2 * k + 1; n <= 2 * k + 6; ++n) {
            const auto p = Params::make(n, k);
            std::vector<KSet> all;
            for (int i = 1; i <= n - k + 1; ++i) {
                const auto a = family_A(i, p);
                REQUIRE(a.size() == oracle::pascal(n - i, k - 1));
                all.insert(all.end(), a.begin(), a.end());
            }
            std::sort(all.begin(), all.end());
            CHECK(all == oracle::scan_family(1, n, k));
        }
    }
}

TEST_CASE("intersects and covered_labels")
{
    CHECK(intersects(LabelSet{1, 2, 3}, LabelSet{3, 4, 5}));
    CHECK_FALSE(intersects(LabelSet{1, 2, 3}, LabelSet{4, 5, 6}));
    CHECK(intersects(LabelSet{1, 2, 3}, LabelSet{1, 2, 3}));

    const Block single{LabelSet{1, 2, 3}};
    CHECK(covered_labels(single) == LabelSet{1, 2, 3});
    const Block pair{LabelSet{1, 2, 3}, LabelSet{1, 4, 5}};
    CHECK(covered_labels(pair) == LabelSet{1, 2, 3, 4, 5});
}

TEST_CASE("hockey stick identity")
{
    CHECK(hockey_stick(3, 1) == std::pair<std::uint64_t, std::uint64_t>{6, 6});
    CHECK(hockey_stick(5, 2) == std::pair<std::uint64_t, std::uint64_t>{20, 20});
    for (std::uint64_t a = 0; a <= 40; ++a) {
        for (std::uint64_t b = 0; b <= a; ++b) {
            const auto [sum, closed] = hockey_stick(a, b);
            std::uint64_t direct = 0;
            for (std::uint64_t i = 0; i <= a; ++i) {
                direct += oracle::pascal(static_cast<int>(i), static_cast<int>(b));
            }
            REQUIRE(sum == closed);
            REQUIRE(sum == direct);
        }
    }
    CHECK_THROWS_AS(hockey_stick(2, 3), ParameterError);
}

TEST_CASE("interval masks")
{
    CHECK(interval_mask(1, 3) == 0b111);
    CHECK(interval_mask(3, 4) == 0b1100);
    CHECK(interval_mask(5, 4) == 0);
    CHECK(interval_mask(1, 64) == ~Mask{0});
}
