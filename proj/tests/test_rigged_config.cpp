#include "kkr/errors.hpp"
#include "kkr/rigged_config.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>

using namespace kkr;

namespace {

RiggedConfiguration ex25() { return {3, {1, 1, 2, 1}, {{{2, 0}, {1, 0}}, {{1, 0}}}}; }

RiggedConfiguration sl4() {
    return {4, std::vector<int>(13, 1), {{{4, 0}, {3, 1}, {1, 4}}, {{2, 0}, {1, 0}}, {{1, 0}}}};
}

long binom(long n, long k) {
    if (k < 0 || k > n)
        return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// Direct count for sl_2: every composition of the quantum space, every
// partition nu of layer 1 with nonnegative vacancies, and the number of
// multisets of riggings per width, C(p + m, m).
long count_sl2(int max_boxes, int max_row_len) {
    long total = 0;
    std::vector<int> comp;
    auto partitions = [&](auto&& self, std::vector<int>& nu, int bound, int left,
                          const std::vector<int>& q) -> void {
        std::map<int, int> mult;
        for (int w : nu)
            ++mult[w];
        long ways = 1;
        for (auto [w, m] : mult) {
            int q0 = 0, q1 = 0;
            for (int x : q)
                q0 += std::min(x, w);
            for (int x : nu)
                q1 += std::min(x, w);
            const int p = q0 - 2 * q1;
            if (p < 0) {
                ways = 0;
                break;
            }
            ways *= binom(p + m, m);
        }
        total += ways;
        for (int w = std::min(bound, left); w >= 1; --w) {
            nu.push_back(w);
            self(self, nu, w, left - w, q);
            nu.pop_back();
        }
    };
    auto compositions = [&](auto&& self, int left) -> void {
        if (!comp.empty()) {
            const int size = std::accumulate(comp.begin(), comp.end(), 0);
            std::vector<int> nu;
            partitions(partitions, nu, size, size, comp);
        }
        for (int part = 1; part <= std::min(left, max_row_len); ++part) {
            comp.push_back(part);
            self(self, left - part);
            comp.pop_back();
        }
    };
    compositions(compositions, max_boxes);
    return total;
}

} // namespace

TEST(QValue, Examples) {
    EXPECT_EQ(q_value(ex25(), 1, 1), 2);
    EXPECT_EQ(q_value(ex25(), 2, 0), 0);
    EXPECT_EQ(q_value(sl4(), 1, 1), 3);
    EXPECT_EQ(q_value(ex25(), 0, 2), 5);
}

TEST(Vacancy, SmallExample) {
    EXPECT_EQ(vacancy(ex25(), 1, 2), 0);
    EXPECT_EQ(vacancy(ex25(), 1, 1), 1);
    EXPECT_EQ(vacancy(ex25(), 2, 1), 0);
}

TEST(Vacancy, LargerExample) {
    EXPECT_EQ(vacancy(sl4(), 1, 1), 9);
    EXPECT_EQ(vacancy(sl4(), 1, 3), 2);
    EXPECT_EQ(vacancy(sl4(), 1, 4), 0);
}

TEST(Vacancy, EmptyNeighbours) {
    RiggedConfiguration rc{4, {}, {{}, {}, {}}};
    for (int j = 0; j <= 5; ++j)
        EXPECT_EQ(vacancy(rc, 2, j), 0);
}

TEST(Validate, AcceptsExamples) {
    EXPECT_TRUE(is_valid(ex25()));
    EXPECT_TRUE(is_valid(sl4()));
}

TEST(Validate, RiggingAboveVacancy) {
    RiggedConfiguration rc = ex25();
    rc.layers[0][1].rigging = 2;
    ValidationReport r = validate(rc);
    EXPECT_FALSE(r.ok);
    EXPECT_NE(r.message.find("rigging 2"), std::string::npos);
    EXPECT_THROW(require_valid(rc), ValidationError);
}

TEST(Validate, LayerCountAndLengths) {
    RiggedConfiguration rc = ex25();
    rc.layers.pop_back();
    EXPECT_FALSE(is_valid(rc));
    rc = ex25();
    rc.quantum[0] = 0;
    EXPECT_FALSE(is_valid(rc));
}

TEST(Singular, SmallExample) {
    EXPECT_TRUE(is_singular(ex25(), 1, 0));
    EXPECT_FALSE(is_singular(ex25(), 1, 1));
    EXPECT_TRUE(is_singular(ex25(), 2, 0));
}

TEST(Normalize, SortsEqualLengths) {
    RiggedConfiguration rc{3, {1, 1, 1, 1}, {{{1, 1}, {1, 0}}, {}}};
    EXPECT_FALSE(is_valid(rc));
    EXPECT_TRUE(normalize(rc));
    EXPECT_EQ(rc.layers[0], (std::vector<Row>{{1, 0}, {1, 1}}));
    EXPECT_FALSE(normalize(rc));
}

TEST(Restrict, Examples) {
    RiggedConfiguration r = restrict_to(ex25(), 1);
    EXPECT_EQ(r.n, 2);
    EXPECT_EQ(r.quantum, (std::vector<int>{2, 1}));
    EXPECT_EQ(r.layers, (std::vector<std::vector<Row>>{{{1, 0}}}));
    EXPECT_EQ(restrict_to(ex25(), 0), ex25());
    RiggedConfiguration r4 = restrict_to(sl4(), 2);
    EXPECT_EQ(r4.quantum, (std::vector<int>{2, 1}));
    EXPECT_EQ(r4.layers, (std::vector<std::vector<Row>>{{{1, 0}}}));
}

TEST(Enumerate, TinyCase) {
    auto all = enumerate_rcs({2, 1, 1});
    ASSERT_EQ(all.size(), 1u);
    EXPECT_EQ(all[0].quantum, (std::vector<int>{1}));
    EXPECT_TRUE(all[0].layers[0].empty());
}

TEST(Enumerate, ContainsExample) {
    auto all = enumerate_rcs({3, 5, 2});
    EXPECT_NE(std::find(all.begin(), all.end(), ex25()), all.end());
    for (const auto& rc : all)
        EXPECT_TRUE(is_valid(rc));
}

TEST(Enumerate, MatchesDirectCountSl2) {
    for (int boxes = 1; boxes <= 6; ++boxes)
        for (int len = 1; len <= 3; ++len)
            EXPECT_EQ(static_cast<long>(for_each_rc({2, boxes, len}, [](auto&) { return true; })),
                      count_sl2(boxes, len))
                << boxes << " " << len;
}

// sl_2 configurations on (1^N) are counted by the ballot numbers C(N, N/2).
TEST(Enumerate, SingleBoxesSl2) {
    for (int N = 1; N <= 10; ++N) {
        std::size_t got = for_each_rc_with_quantum(2, std::vector<int>(N, 1),
                                                   [](auto&) { return true; });
        EXPECT_EQ(static_cast<long>(got), binom(N, N / 2)) << N;
    }
}

TEST(Enumerate, CapRaises) {
    EnumerationLimits lim{3, 6, 3, 10};
    EXPECT_THROW(for_each_rc(lim, [](auto&) { return true; }), ResourceError);
}
