#include "kkr/errors.hpp"
#include "kkr/io.hpp"

#include <gtest/gtest.h>

using namespace kkr;

TEST(Json, RoundTrip) {
    RiggedConfiguration rc{3, {1, 1, 2, 1}, {{{2, 0}, {1, 0}}, {{1, 0}}}};
    EXPECT_EQ(rc_from_json(to_json(rc)), rc);
    EXPECT_EQ(parse_rc(to_json(rc).dump()), rc);
    EXPECT_EQ(read_rc(std::string(KKR_TEST_DATA) + "/ex25.json"), rc);
}

TEST(Json, MalformedReportsOffset) {
    try {
        parse_rc("{\"n\": 3,, }");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos);
    }
}

TEST(Json, SchemaErrorsNamePath) {
    try {
        parse_rc(R"({"n":3,"quantum":[1],"layers":[{"rows":[[1,0],[1]]},{"rows":[]}]})");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("layers[0].rows[1]"), std::string::npos);
    }
    EXPECT_THROW(parse_rc(R"({"n":3,"quantum":[1]})"), ParseError);
    EXPECT_THROW(parse_rc(R"({"n":"3","quantum":[1],"layers":[]})"), ParseError);
    EXPECT_THROW(read_rc("/nonexistent/rc.json"), ParseError);
}

TEST(Json, Trace) {
    RiggedConfiguration rc{3, {1, 1, 2, 1}, {{{2, 0}, {1, 0}}, {{1, 0}}}};
    json j = to_json(kkr_forward(rc).trace);
    ASSERT_EQ(j["removals"].size(), 4u);
    EXPECT_EQ(j["removals"][0]["tableau"], "2");
}
