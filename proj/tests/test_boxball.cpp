#include "kkr/boxball.hpp"
#include "kkr/errors.hpp"

#include <gtest/gtest.h>

using namespace kkr;

namespace {

const char* kRows[] = {
    "1111111122221111332111141111111111111111111111111111111",
    "1111111111112222111332114111111111111111111111111111111",
    "1111111111111111222211332411111111111111111111111111111",
    "1111111111111111111122221343211111111111111111111111111",
    "1111111111111111111111112232143221111111111111111111111",
    "1111111111111111111111111121322114322111111111111111111",
    "1111111111111111111111111112111322111432211111111111111",
    "1111111111111111111111111111211111322111143221111111111",
};

} // namespace

TEST(BoxBall, FromPath) {
    BoxBallState s = from_path(parse_word("1*1*1*1*2*2*3*2*1*4*3*2*2", 4));
    EXPECT_EQ(render(s, 0, 13), "1111223214322");
    EXPECT_EQ(to_string(from_path(TensorWord{4, {}})), "");
}

TEST(BoxBall, RoundTrip) {
    BoxBallState s = parse_state("2213", 3);
    EXPECT_EQ(to_string(s), "2213");
    EXPECT_EQ(to_string(parse_state(to_string(s), 3)), "2213");
    BoxBallState big = parse_state("1,12,3", 12);
    EXPECT_EQ(to_string(big), "12,3");
}

TEST(BoxBall, ParseErrors) {
    EXPECT_THROW(parse_state("15", 4), ParseError);
    EXPECT_THROW(parse_state("1x", 4), ParseError);
}

TEST(BoxBall, Background) {
    BoxBallState s = parse_state("1111", 3);
    EXPECT_EQ(s.balls(), 0);
    EXPECT_EQ(evolve(s).balls(), 0);
    EXPECT_TRUE(solitons(s).solitons.empty());
}

TEST(BoxBall, PrintedTrajectory) {
    BoxBallState s = parse_state(kRows[0], 4);
    for (int t = 1; t < 8; ++t) {
        s = evolve(s);
        EXPECT_EQ(render(s, 0, 55), kRows[t]) << "t=" << t + 1;
    }
}

TEST(BoxBall, SingleStepFromPath) {
    EXPECT_EQ(render(evolve(parse_state(kRows[4], 4)), 0, 55), kRows[5]);
}

TEST(BoxBall, Solitons) {
    SolitonReport first = solitons(parse_state(kRows[0], 4));
    EXPECT_TRUE(first.separated);
    ASSERT_EQ(first.solitons.size(), 3u);
    EXPECT_EQ(to_string(first.solitons[0]), "2222");
    EXPECT_EQ(to_string(first.solitons[1]), "233");
    EXPECT_EQ(to_string(first.solitons[2]), "4");

    SolitonReport last = solitons(parse_state(kRows[7], 4));
    EXPECT_TRUE(last.separated);
    ASSERT_EQ(last.solitons.size(), 3u);
    EXPECT_EQ(to_string(last.solitons[0]), "2");
    EXPECT_EQ(to_string(last.solitons[1]), "223");
    EXPECT_EQ(to_string(last.solitons[2]), "2234");

    EXPECT_FALSE(solitons(parse_state(kRows[4], 4)).separated);
}

TEST(BoxBall, ContentIsConserved) {
    for (const char* row : kRows)
        EXPECT_EQ(soliton_content(parse_state(row, 4)), (std::vector<int>{4, 3, 1})) << row;
}

TEST(BoxBall, FiniteCapacity) {
    // A carrier of capacity 1 moves every ball one cell at a time.
    BoxBallState s = parse_state("1211", 2);
    EXPECT_EQ(render(evolve(s, 1), 0, 4), "1121");
    BoxBallState w = parse_state("1221", 2);
    EXPECT_EQ(evolve(w, 1).balls(), 2);
}
