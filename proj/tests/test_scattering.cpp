#include "kkr/errors.hpp"
#include "kkr/scattering.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace kkr;

namespace {

RiggedConfiguration ex25() { return {3, {1, 1, 2, 1}, {{{2, 0}, {1, 0}}, {{1, 0}}}}; }

RiggedConfiguration sl4() {
    return {4, std::vector<int>(13, 1), {{{4, 0}, {3, 1}, {1, 4}}, {{2, 0}, {1, 0}}, {{1, 0}}}};
}

ScatteringData S(const char* text, int n, int level = -1) {
    return parse_scattering(text, n, level);
}

std::set<std::string> names(const std::vector<ScatteringData>& v) {
    std::set<std::string> out;
    for (const auto& s : v)
        out.insert(to_string(s));
    return out;
}

} // namespace

TEST(ScatteringData, ParseAndPrint) {
    ScatteringData s = S("222[4]*2233[5]*4[5]", 4);
    EXPECT_EQ(s.level, 1);
    EXPECT_EQ(s.modes(), (std::vector<long>{4, 5, 5}));
    EXPECT_EQ(to_string(s), "222[4]*2233[5]*4[5]");
    EXPECT_THROW(S("22[2", 3), ParseError);
    EXPECT_THROW(S("22[x]", 3), ParseError);
    EXPECT_THROW(S("12[1]", 3, 1), ParseError);
}

TEST(Modes, TopLevel) {
    std::vector<int> r{0};
    EXPECT_EQ(to_string(modes_from_riggings(parse_word("3", 3), r, 2)), "3[1]");
}

TEST(Modes, LevelOne) {
    std::vector<int> r{0, 0};
    EXPECT_EQ(to_string(modes_from_riggings(parse_word("22*3", 3), r, 1)), "22[2]*3[1]");
}

TEST(Modes, PureFactor) {
    for (int k = 1; k <= 3; ++k) {
        std::vector<int> r{4};
        ScatteringData s = modes_from_riggings(TensorWord{3, {Tableau::pure(3, 2, k)}}, r, 1);
        EXPECT_EQ(s.factors[0].mode, 4 + k);
    }
}

TEST(Modes, LengthMismatch) {
    std::vector<int> r{0};
    EXPECT_THROW(modes_from_riggings(parse_word("22*3", 3), r, 1), ContractError);
}

TEST(Orbit, TwoFactors) {
    EXPECT_EQ(names(orbit(S("22[2]*3[1]", 3))), (std::set<std::string>{"22[2]*3[1]", "2[1]*23[2]"}));
    EXPECT_EQ(orbit(S("23[5]", 3)).size(), 1u);
}

TEST(Orbit, ContainsKkrProducts) {
    std::set<std::string> classical;
    for (const auto& s : orbit(S("222[4]*2233[5]*4[5]", 4)))
        classical.insert(to_string(s.classical()));
    for (const char* w : {"222*2233*4", "222*3*2234", "2222*233*4", "2222*3*234"})
        EXPECT_TRUE(classical.count(w)) << w;
}

TEST(Orbit, Cap) { EXPECT_THROW(orbit(S("222[4]*2233[5]*4[5]", 4), 3), ResourceError); }

TEST(NormalOrder, TwoFactors) {
    EXPECT_EQ(to_string(normal_order(S("22[2]*3[1]", 3))), "2[1]*23[2]");
    EXPECT_EQ(to_string(normal_order(S("2[1]*23[2]", 3))), "2[1]*23[2]");
    EXPECT_EQ(to_string(normal_order(S("23[5]", 3))), "23[5]");
}

TEST(NormalOrder, KkrProductsShareOneRepresentative) {
    const char* all[] = {"222[4]*2233[5]*4[5]", "222[4]*3[5]*2234[5]", "2222[4]*233[5]*4[5]",
                         "2222[4]*3[5]*234[5]"};
    auto set = names(normal_ordered_set(S(all[0], 4)));
    ScatteringData rep = normal_order(S(all[0], 4));
    for (const char* s : all) {
        EXPECT_TRUE(is_normal_ordered(S(s, 4))) << s;
        EXPECT_TRUE(set.count(s)) << s;
        EXPECT_EQ(normal_order(S(s, 4)), rep);
    }
}

TEST(NormalOrder, GapCriterion) {
    EXPECT_TRUE(is_normal_ordered(S("2[1]*23[2]", 3)));
    EXPECT_TRUE(is_normal_ordered(S("222[4]*2233[5]*4[5]", 4)));
    EXPECT_FALSE(is_normal_ordered(S("22[2]*3[1]", 3)));
}

TEST(BuildC, Examples) {
    EXPECT_EQ(to_string(build_c(S("2[1]*23[2]", 3))), "1*2*1*23");
    EXPECT_EQ(to_string(build_c(S("3[1]", 3))), "2*3");
    EXPECT_EQ(to_string(build_c(S("2[0]*23[0]", 3))), "2*23");
}

TEST(Phi, Examples) {
    std::vector<int> s21{2, 1}, s12{1, 2}, s1121{1, 1, 2, 1};
    EXPECT_EQ(to_string(phi(S("3[1]", 3), s21)), "22*3");
    EXPECT_EQ(to_string(phi(S("3[1]", 3), s12)), "2*23");
    EXPECT_EQ(to_string(phi(S("2[1]*23[2]", 3), s1121)), "1*2*13*2");
}

TEST(Phi, ResiduesArePure) {
    std::vector<int> shape{1, 1, 2, 1};
    PhiResult r = phi_detailed(S("2[1]*23[2]", 3), shape);
    int total = 0;
    for (const auto& t : r.residues) {
        EXPECT_TRUE(t.is_pure(1));
        total += t.size();
    }
    EXPECT_EQ(total, 1 + 2 + 2);
}

TEST(Phi, RejectsUnorderedData) {
    std::vector<int> shape{1, 1, 2, 1};
    EXPECT_THROW(phi(S("22[2]*3[1]", 3), shape), ContractError);
}

TEST(Compose, Examples) {
    EXPECT_EQ(to_string(compose_theorem(ex25())), "1*2*13*2");
    EXPECT_EQ(compose_theorem(sl4()), kkr_forward(sl4()).path);
    RiggedConfiguration empty{3, {2, 1}, {{}, {}}};
    EXPECT_EQ(to_string(compose_theorem(empty)), "11*1");
}

TEST(Compose, AllChoicesAgree) {
    for (const auto& rc : {ex25(), sl4()}) {
        auto outs = compose_theorem_all(rc);
        ASSERT_EQ(outs.size(), 1u);
        EXPECT_EQ(outs[0], kkr_forward(rc).path);
    }
}

TEST(Isomorphism, AllTieChoices) {
    for (const auto& s : kkr_scattering_all(sl4(), 1)) {
        Prop43Report r = prop43_isomorphism_check(sl4(), 1, s.data);
        EXPECT_TRUE(r.ok) << r.message;
    }
    RiggedConfiguration rc{3, {1, 1}, {{{1, 0}}, {}}};
    EXPECT_TRUE(prop43_isomorphism_check(rc, 2).ok);
}
