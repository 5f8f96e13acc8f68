// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any
// criterion fails. Every comparison is exact.

#include "kkr/boxball.hpp"
#include "kkr/io.hpp"
#include "kkr/scattering.hpp"
#include "kkr/verify.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace kkr;

namespace {

using Clock = std::chrono::steady_clock;

RiggedConfiguration data(const char* name) {
    return read_rc(std::string(KKR_TEST_DATA) + "/" + name);
}

ScatteringData S(const char* text, int n) { return parse_scattering(text, n); }

struct Checker {
    std::ostringstream why;
    bool ok = true;

    template <class A, class B>
    void eq(const A& got, const B& want, const std::string& what) {
        if (got == want)
            return;
        ok = false;
        why << " [" << what << ": got " << got << ", want " << want << "]";
    }
    void that(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            why << " [" << what << "]";
        }
    }
};

double millis(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::string joined(const std::vector<long>& v) {
    std::string out;
    for (long x : v)
        out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
}

void c1(Checker& c, std::ostream& note) {
    const auto start = Clock::now();
    TensorWord p = kkr_forward(data("ex25.json")).path;
    const double ms = millis(start);
    c.eq(to_string(p), "1*2*13*2", "path");
    c.that(ms < 10.0, "runtime " + std::to_string(ms) + " ms");
    note << " runtime=" << ms << "ms";
}

void c2(Checker& c, std::ostream&) {
    RResult r = r_matrix(parse_tableau("1344", 4), parse_tableau("234", 4));
    c.eq(to_string(r.left), "134", "y'");
    c.eq(to_string(r.right), "2344", "x'");
    c.eq(r.energy, 1, "H");
}

void c3(Checker& c, std::ostream&) {
    RiggedConfiguration rc = data("ex25.json");
    std::vector<int> r2{rc.layers[1][0].rigging};
    ScatteringData top = normal_order(modes_from_riggings(parse_word("3", 3), r2, 2));
    c.eq(to_string(top), "3[1]", "C(2)");
    std::vector<int> shape1 = rc.shape(1);
    TensorWord p2 = phi(top, shape1);
    c.eq(to_string(p2), "22*3", "phi level 2");
    std::vector<int> r1{rc.layers[0][0].rigging, rc.layers[0][1].rigging};
    ScatteringData s1 = modes_from_riggings(p2, r1, 1);
    c.eq(joined(s1.modes()), "2,1", "modes level 1");
    c.eq(to_string(s1), "22[2]*3[1]", "data level 1");
    ScatteringData no = normal_order(s1);
    c.eq(to_string(no), "2[1]*23[2]", "normal order");
    std::vector<int> shape0 = rc.shape(0);
    c.eq(to_string(phi(no, shape0)), "1*2*13*2", "phi level 1");
    auto [l, r] = affine_r(AffineFactor{parse_tableau("2", 3), 1},
                           AffineFactor{parse_tableau("23", 3), 2});
    c.eq(to_string(l) + "*" + to_string(r), "22[2]*3[1]", "affine R");
}

void c4(Checker& c, std::ostream&) {
    RiggedConfiguration rc = data("sl4.json");
    ModeResult m = mode_formula(rc, 1);
    c.eq(m.mode, 5L, "first mode");
    c.eq(m.rows.size(), std::size_t{3}, "rows attaining first mode");
    std::set<std::string> got;
    for (const auto& run : kkr_scattering_all(rc, 1)) {
        got.insert(to_string(run.data));
        std::vector<long> modes;
        for (const auto& st : run.steps)
            modes.push_back(st.mode);
        c.eq(joined(modes), "5,5,4", "removal modes of " + to_string(run.data));
        Prop43Report p = prop43_isomorphism_check(rc, 1, run.data);
        c.that(p.ok, "isomorphism for " + to_string(run.data) + ": " + p.message);
    }
    const std::set<std::string> want{"222[4]*2233[5]*4[5]", "222[4]*3[5]*2234[5]",
                                     "2222[4]*233[5]*4[5]", "2222[4]*3[5]*234[5]"};
    c.that(got == want, "set of KKR normal ordered products");
    c.eq(to_string(kkr_forward(rc).path), "1*1*1*1*2*2*3*2*1*4*3*2*2", "path");
}

void c5(Checker& c, std::ostream&) {
    c.eq(unwinding_number(parse_tableau("244", 5), parse_tableau("2335", 5)), 2, "unwinding 244*2335");
    auto s5 = kkr_scattering(data("sl5.json"), 1);
    c.that(s5.has_value(), "scattering sl5");
    if (s5) {
        c.eq(to_string(build_c(s5->data)), "1*2*1*1*1*222*333*1*244*1*2335", "product sl5");
        c.eq(delta_q(s5->steps[0].removal, 2, 3), 2, "delta Q width 3");
    }
    c.eq(unwinding_number(parse_tableau("22223345", 6), parse_tableau("22333346", 6)), 6,
         "unwinding 22223345*22333346");
    auto s6 = kkr_scattering(data("sl6.json"), 1);
    c.that(s6.has_value(), "scattering sl6");
    if (s6) {
        c.eq(to_string(build_c(s6->data)),
             "1*1*1*1*2222*1*1*1*2223*1*1*1*222334*1*233344*1*1*1*1*22223345*1*1*22333346",
             "product sl6");
        c.eq(delta_q(s6->steps[0].removal, 2, 8), 6, "delta Q width 8");
    }
}

void c6(Checker& c, std::ostream&) {
    const char* rows[] = {
        "1111111122221111332111141111111111111111111111111111111",
        "1111111111112222111332114111111111111111111111111111111",
        "1111111111111111222211332411111111111111111111111111111",
        "1111111111111111111122221343211111111111111111111111111",
        "1111111111111111111111112232143221111111111111111111111",
        "1111111111111111111111111121322114322111111111111111111",
        "1111111111111111111111111112111322111432211111111111111",
        "1111111111111111111111111111211111322111143221111111111",
    };
    c.eq(render(from_path(kkr_forward(data("sl4.json")).path), 0, 13), "1111223214322",
         "path as state");
    BoxBallState s = parse_state(rows[0], 4);
    SolitonReport first = solitons(s);
    std::string runs;
    for (const auto& t : first.solitons)
        runs += (runs.empty() ? "" : " ") + to_string(t);
    c.that(first.separated, "t=1 separated");
    c.eq(runs, "2222 233 4", "t=1 solitons");
    std::string s3;
    for (const auto& f : S("2222[4]*233[5]*4[5]", 4).factors)
        s3 += (s3.empty() ? "" : " ") + to_string(f.tableau);
    c.eq(runs, s3, "classical parts of s_3");
    std::vector<int> mu1 = data("sl4.json").shape(1);
    for (int t = 1; t <= 8; ++t) {
        if (t > 1) {
            s = evolve(s);
            c.eq(render(s, 0, 55), rows[t - 1], "row t=" + std::to_string(t));
        }
        c.that(soliton_content(s) == mu1, "soliton lengths at t=" + std::to_string(t));
    }
}

void c7(Checker& c, std::ostream& note) {
    SuiteOptions o;
    const auto start = Clock::now();
    for (const char* name : {"theorem37", "kss", "theorem61", "rmatrix"}) {
        SuiteReport r = run_suite(name, o);
        note << " " << name << "=" << r.failure_count << "/" << r.checks;
        c.eq(r.failure_count, std::size_t{0}, std::string(name) + " failures");
        if (!r.failures.empty())
            note << " (" << r.failures.front().detail << ")";
    }
    c.that(o.samples >= 1000, "random triples");
    const double s = millis(start) / 1000.0;
    note << " time=" << s << "s";
    c.that(s < 300.0, "wall time");
}

void c8(Checker& c, std::ostream& note) {
    SuiteReport r = run_suite("normal_order", SuiteOptions{});
    note << " checks=" << r.checks << " failures=" << r.failure_count;
    c.eq(r.failure_count, std::size_t{0}, "normal_order failures");
    if (!r.failures.empty())
        note << " first: " << r.failures.front().detail << " on " << r.failures.front().instance;
}

void c9(Checker& c, std::ostream& note) {
    SuiteReport r = run_suite("lemma52", SuiteOptions{});
    note << " guarded=" << r.checks << " failures=" << r.failure_count;
    c.that(r.checks >= 100, "at least 100 guarded cases");
    c.eq(r.failure_count, std::size_t{0}, "lemma52 failures");
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void(Checker&, std::ostream&)>>> all{
        {"small KKR example", c1},         {"R matrix example", c2},
        {"level-by-level pipeline", c3},   {"Case-2 scattering data", c4},
        {"unwinding and Delta Q", c5},     {"box-ball trajectory", c6},
        {"property suites", c7},           {"normal-ordering equivalence", c8},
        {"rigging linearity", c9},
    };
    int failed = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
        Checker c;
        std::ostringstream note;
        try {
            all[i].second(c, note);
        } catch (const std::exception& e) {
            c.ok = false;
            c.why << " [exception: " << e.what() << "]";
        }
        failed += !c.ok;
        std::cout << "criterion " << i + 1 << ": " << (c.ok ? "PASS" : "FAIL") << " "
                  << all[i].first << note.str() << c.why.str() << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
