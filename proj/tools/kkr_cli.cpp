// Command-line front end. Exit status: 0 success, 1 validation failure or
// mismatch, 2 usage or input syntax error.

#include "kkr/boxball.hpp"
#include "kkr/errors.hpp"
#include "kkr/io.hpp"
#include "kkr/scattering.hpp"
#include "kkr/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>

namespace {

using namespace kkr;

RiggedConfiguration load(const std::string& path) {
    RiggedConfiguration rc = read_rc(path);
    if (normalize(rc))
        std::cerr << "note: reordered equal-length rows so riggings weakly increase\n";
    return rc;
}

void print_trace(const KkrTrace& trace) {
    for (const auto& r : trace.removals) {
        std::cout << "row " << r.quantum_row << ": " << to_string(r.tableau) << "\n";
        for (const auto& s : r.steps) {
            std::cout << "  " << s.letter << " <-";
            for (const auto& b : s.boxes)
                std::cout << " (" << b.layer << "," << b.row << "," << b.col << ")";
            std::cout << "\n";
        }
    }
}

std::string word_of(const std::vector<Tableau>& ts) {
    std::string out;
    for (const auto& t : ts) {
        if (!out.empty())
            out.push_back(' ');
        out += to_string(t);
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rigged configurations, the KKR bijection and scattering data"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "Machine-readable output");

    std::string rc_path;
    std::string x_text, y_text, data_text, state_text;
    int n = 0;
    int level = 1;
    int steps = 1;
    int capacity = 0;
    bool trace = false, all = false, check = false;
    std::string suite = "all";
    SuiteOptions opts;

    auto* validate = app.add_subcommand("validate", "Check a rigged configuration");
    validate->add_option("rc", rc_path, "Configuration JSON file, - for stdin")->required();

    auto* kkr = app.add_subcommand("kkr", "Forward KKR bijection");
    kkr->add_option("rc", rc_path)->required();
    kkr->add_flag("--trace", trace, "Show removed boxes");

    auto* rmatrix = app.add_subcommand("rmatrix", "Combinatorial R matrix x (x) y");
    rmatrix->add_option("x", x_text)->required();
    rmatrix->add_option("y", y_text)->required();
    rmatrix->add_option("--n", n, "Alphabet size")->required()->check(CLI::Range(1, 35));

    auto* energy_cmd = app.add_subcommand("energy", "Energy H(x (x) y)");
    energy_cmd->add_option("x", x_text)->required();
    energy_cmd->add_option("y", y_text)->required();
    energy_cmd->add_option("--n", n, "Alphabet size")->required()->check(CLI::Range(1, 35));

    auto* scatter = app.add_subcommand("scatter", "KKR normal ordered product at a level");
    scatter->add_option("rc", rc_path)->required();
    scatter->add_option("--level", level, "Level a, 1 <= a <= n-1")->required();
    scatter->add_flag("--all", all, "Every tie choice");

    auto* norder = app.add_subcommand("normal-order", "Normal ordered form of scattering data");
    norder->add_option("data", data_text, "e.g. 22[2]*3[1]")->required();
    norder->add_option("--n", n, "Alphabet size")->required()->check(CLI::Range(1, 35));
    norder->add_option("--level", level, "Level; default is the smallest letter minus one");
    norder->add_flag("--all", all, "List the whole set S_1");

    auto* compose = app.add_subcommand("compose", "Rebuild the KKR image level by level");
    compose->add_option("rc", rc_path)->required();
    compose->add_flag("--check", check, "Compare with the forward bijection");

    auto* evolve_cmd = app.add_subcommand("bbs-evolve", "Box-ball time evolution");
    evolve_cmd->add_option("state", state_text)->required();
    evolve_cmd->add_option("--steps", steps, "Number of time steps")->check(CLI::NonNegativeNumber);
    evolve_cmd->add_option("--n", n, "Alphabet size")->required()->check(CLI::PositiveNumber);
    evolve_cmd->add_option("--capacity", capacity, "Carrier capacity; default is the ball count");

    auto* sol_cmd = app.add_subcommand("bbs-solitons", "Solitons of a box-ball state");
    sol_cmd->add_option("state", state_text)->required();
    sol_cmd->add_option("--n", n, "Alphabet size; default is the largest letter");

    auto* verify = app.add_subcommand("verify", "Run the exhaustive cross-checks");
    verify->add_option("--suite", suite, "Suite name or all");
    verify->add_option("--max-boxes", opts.max_boxes, "Quantum-space boxes")->check(CLI::PositiveNumber);
    verify->add_option("--n", opts.n_max, "Largest n")->check(CLI::PositiveNumber);
    verify->add_option("--max-row-len", opts.max_row_len)->check(CLI::PositiveNumber);
    verify->add_option("--samples", opts.samples, "Random R-matrix triples");
    verify->add_option("--seed", opts.seed);
    verify->add_option("--threads", opts.threads);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*validate) {
            RiggedConfiguration rc = read_rc(rc_path);
            ValidationReport r = kkr::validate(rc);
            if (as_json)
                std::cout << json{{"valid", r.ok}, {"message", r.message}}.dump() << "\n";
            else
                std::cout << (r.ok ? "valid" : "invalid: " + r.message) << "\n";
            return r.ok ? 0 : 1;
        }
        if (*kkr) {
            KkrResult r = kkr_forward(load(rc_path));
            if (as_json) {
                json j{{"path", to_string(r.path)}};
                if (trace)
                    j["trace"] = to_json(r.trace);
                std::cout << j.dump() << "\n";
            } else {
                std::cout << to_string(r.path) << "\n";
                if (trace)
                    print_trace(r.trace);
            }
            return 0;
        }
        if (*rmatrix || *energy_cmd) {
            RResult r = r_matrix(parse_tableau(x_text, n), parse_tableau(y_text, n));
            if (*energy_cmd) {
                std::cout << (as_json ? json{{"H", r.energy}}.dump() : std::to_string(r.energy))
                          << "\n";
            } else if (as_json) {
                std::cout << json{{"left", to_string(r.left)},
                                  {"right", to_string(r.right)},
                                  {"H", r.energy}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << to_string(r.left) << " " << to_string(r.right) << " H=" << r.energy
                          << "\n";
            }
            return 0;
        }
        if (*scatter) {
            RiggedConfiguration rc = load(rc_path);
            std::vector<KkrScattering> runs;
            if (all) {
                runs = kkr_scattering_all(rc, level);
            } else if (auto one = kkr_scattering(rc, level)) {
                runs.push_back(std::move(*one));
            }
            json out = json::array();
            for (const auto& r : runs) {
                if (as_json)
                    out.push_back(to_json(r));
                else
                    std::cout << to_string(r.data) << "\n";
            }
            if (as_json)
                std::cout << out.dump() << "\n";
            return 0;
        }
        if (*norder) {
            ScatteringData s = parse_scattering(data_text, n, norder->count("--level") ? level : -1);
            auto set = normal_ordered_set(s);
            if (!all)
                set.resize(1);
            json out = json::array();
            for (const auto& e : set) {
                if (as_json)
                    out.push_back(to_string(e));
                else
                    std::cout << to_string(e) << "\n";
            }
            if (as_json)
                std::cout << out.dump() << "\n";
            return 0;
        }
        if (*compose) {
            RiggedConfiguration rc = load(rc_path);
            TensorWord c = compose_theorem(rc);
            if (!check) {
                std::cout << (as_json ? json{{"path", to_string(c)}}.dump() : to_string(c)) << "\n";
                return 0;
            }
            TensorWord p = kkr_forward(rc).path;
            const bool same = c == p;
            if (as_json)
                std::cout << json{{"match", same}, {"compose", to_string(c)}, {"kkr", to_string(p)}}
                                 .dump()
                          << "\n";
            else if (same)
                std::cout << "MATCH " << to_string(c) << "\n";
            else
                std::cout << "MISMATCH compose=" << to_string(c) << " kkr=" << to_string(p)
                          << "\n";
            return same ? 0 : 1;
        }
        if (*evolve_cmd) {
            std::vector<BoxBallState> traj{parse_state(state_text, n)};
            traj.front().t = 1;
            for (int t = 0; t < steps; ++t)
                traj.push_back(evolve(traj.back(), capacity));
            long lo = 0, hi = static_cast<long>(traj.front().cells.size());
            for (const auto& s : traj) {
                if (s.cells.empty())
                    continue;
                lo = std::min(lo, s.offset);
                hi = std::max(hi, s.offset + static_cast<long>(s.cells.size()));
            }
            json out = json::array();
            for (const auto& s : traj) {
                if (as_json)
                    out.push_back({{"t", s.t}, {"offset", s.offset}, {"cells", to_string(s)}});
                else
                    std::cout << "t=" << s.t << ": " << render(s, lo, hi - lo) << "\n";
            }
            if (as_json)
                std::cout << out.dump() << "\n";
            return 0;
        }
        if (*sol_cmd) {
            int alphabet = n;
            if (alphabet <= 0) {
                alphabet = 1;
                for (char ch : state_text)
                    if (ch >= '1' && ch <= '9')
                        alphabet = std::max(alphabet, ch - '0');
            }
            BoxBallState s = parse_state(state_text, alphabet);
            SolitonReport r = solitons(s);
            if (as_json) {
                json runs = json::array();
                for (const auto& t : r.solitons)
                    runs.push_back(to_string(t));
                std::cout << json{{"separated", r.separated},
                                  {"solitons", runs},
                                  {"lengths", soliton_content(s)}}
                                 .dump()
                          << "\n";
            } else if (r.separated) {
                std::cout << word_of(r.solitons) << "\n";
            } else {
                std::cout << "not separated; lengths";
                for (int l : soliton_content(s))
                    std::cout << " " << l;
                std::cout << "\n";
            }
            return r.separated ? 0 : 1;
        }
        if (*verify) {
            std::vector<std::string> names =
                suite == "all" ? suite_names() : std::vector<std::string>{suite};
            bool ok = true;
            json out = json::array();
            for (const auto& name : names) {
                SuiteReport r = run_suite(name, opts);
                ok = ok && r.ok();
                if (as_json) {
                    out.push_back(to_json(r));
                    continue;
                }
                std::cout << r.name << ": instances=" << r.instances << " checks=" << r.checks
                          << " failures=" << r.failure_count << " time=" << r.seconds << "s\n";
                if (!r.failures.empty()) {
                    const auto& f = r.failures.front();
                    std::cout << "  first: " << f.detail << "\n  instance: " << f.instance << "\n";
                    if (!f.reproduce.empty())
                        std::cout << "  reproduce: " << f.reproduce << "\n";
                }
            }
            if (as_json)
                std::cout << out.dump(2) << "\n";
            return ok ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const AlphabetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
