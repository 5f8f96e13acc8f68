#include "kkr/verify.hpp"

#include "kkr/errors.hpp"
#include "kkr/scattering.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <thread>

namespace kkr {

json to_json(const SuiteReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back(
            {{"instance", f.instance}, {"detail", f.detail}, {"reproduce", f.reproduce}});
    return {{"suite", r.name},
            {"instances", r.instances},
            {"checks", r.checks},
            {"failure_count", r.failure_count},
            {"failures", failures},
            {"seconds", r.seconds}};
}

namespace {

struct Local {
    std::size_t checks = 0;
    std::vector<Failure> failures;
};

std::string quoted(const std::string& s) { return "'" + s + "'"; }

std::string piped(const RiggedConfiguration& rc, const std::string& args) {
    return "echo " + quoted(to_json(rc).dump()) + " | kkr_cli " + args;
}

class Checker {
  public:
    Checker(Local& local, std::string instance, std::string reproduce)
        : local_(local), instance_(std::move(instance)), reproduce_(std::move(reproduce)) {}

    void expect(bool ok, const std::function<std::string()>& detail) {
        ++local_.checks;
        if (!ok)
            fail(detail());
    }
    void fail(std::string detail) {
        local_.failures.push_back(Failure{instance_, std::move(detail), reproduce_});
    }
    void set_reproduce(std::string r) { reproduce_ = std::move(r); }

  private:
    Local& local_;
    std::string instance_;
    std::string reproduce_;
};

unsigned worker_count(const SuiteOptions& o) {
    unsigned t = o.threads ? o.threads : std::thread::hardware_concurrency();
    return std::max(1u, t);
}

// Runs `body` over every item on a thread pool and merges the per-item
// results in item order.
template <class T>
SuiteReport run_items(const std::string& name, const std::vector<T>& items,
                      const std::function<void(const T&, Local&)>& body, const SuiteOptions& o,
                      const std::function<std::string(const T&)>& describe) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<Local> results(items.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
            try {
                body(items[i], results[i]);
            } catch (const std::exception& e) {
                results[i].failures.push_back(
                    Failure{describe(items[i]), std::string("exception: ") + e.what(), ""});
            }
        }
    };
    const unsigned threads = std::min<std::size_t>(worker_count(o), std::max<std::size_t>(items.size(), 1));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(work);
    work();
    for (auto& th : pool)
        th.join();

    SuiteReport report;
    report.name = name;
    report.instances = items.size();
    for (auto& r : results) {
        report.checks += r.checks;
        report.failure_count += r.failures.size();
        for (auto& f : r.failures)
            if (report.failures.size() < o.max_failures)
                report.failures.push_back(std::move(f));
    }
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<RiggedConfiguration> all_instances(const SuiteOptions& o) {
    std::vector<RiggedConfiguration> out;
    for (int n = 1; n <= o.n_max; ++n) {
        EnumerationLimits lim{n, o.max_boxes, o.max_row_len};
        for_each_rc(lim, [&](const RiggedConfiguration& rc) {
            out.push_back(rc);
            return true;
        });
    }
    return out;
}

SuiteReport run_rcs(const std::string& name, const SuiteOptions& o,
                    const std::function<void(const RiggedConfiguration&, Local&)>& body) {
    return run_items<RiggedConfiguration>(name, all_instances(o), body, o,
                                          [](const RiggedConfiguration& rc) {
                                              return to_json(rc).dump();
                                          });
}

// Follows a fixed sequence of layer rows; aborts once the sequence is not
// among the candidates. Past the end it falls back to the default.
ChoicePolicy follow(std::vector<int> order) {
    return [order = std::move(order)](const std::vector<Candidate>& c, std::size_t step) {
        if (step >= order.size())
            return longest_first(c, step);
        return order[step];
    };
}

std::vector<int> removal_order(const KkrScattering& s) {
    std::vector<int> out;
    for (const auto& st : s.steps)
        out.push_back(st.chosen);
    return out;
}

bool is_candidate(const std::vector<Candidate>& c, int row) {
    return std::any_of(c.begin(), c.end(), [&](const Candidate& x) { return x.row == row; });
}

} // namespace

SuiteReport suite_theorem37(const SuiteOptions& o) {
    return run_rcs("theorem37", o, [](const RiggedConfiguration& rc, Local& local) {
        Checker check(local, to_json(rc).dump(), piped(rc, "compose - --check"));
        const TensorWord p = kkr_forward(rc).path;
        check.expect(is_highest(p), [&] { return "KKR image " + to_string(p) + " is not highest"; });
        const TensorWord q = kkr_forward(rc, Rule1Tie::last_stored).path;
        check.expect(q == p, [&] {
            return "Rule-1 tie choice changes the image: " + to_string(p) + " vs " + to_string(q);
        });
        const TensorWord c = compose_theorem(rc);
        check.expect(c == p,
                     [&] { return "composition gives " + to_string(c) + ", KKR " + to_string(p); });
        for (const auto& w : compose_theorem_all(rc))
            check.expect(w == p, [&] {
                return "an S_1 choice gives " + to_string(w) + ", KKR " + to_string(p);
            });
    });
}

SuiteReport suite_kss(const SuiteOptions& o) {
    return run_rcs("kss", o, [](const RiggedConfiguration& rc, Local& local) {
        const TensorWord p = kkr_forward(rc).path;
        for (std::size_t i = 0; i + 1 < rc.quantum.size(); ++i) {
            RiggedConfiguration swapped = rc;
            std::swap(swapped.quantum[i], swapped.quantum[i + 1]);
            Checker check(local, to_json(rc).dump(), piped(swapped, "kkr -"));
            const TensorWord got = kkr_forward(swapped).path;
            const TensorWord want = apply_r(p, i);
            check.expect(got == want, [&] {
                return "swap at " + std::to_string(i) + ": KKR gives " + to_string(got) +
                       ", R matrix gives " + to_string(want);
            });
        }
    });
}

SuiteReport suite_theorem61(const SuiteOptions& o) {
    return run_rcs("theorem61", o, [](const RiggedConfiguration& rc, Local& local) {
        for (int a = 1; a < rc.n; ++a) {
            if (rc.layers[a - 1].empty())
                continue;
            Checker check(local, to_json(rc).dump(),
                          piped(rc, "scatter - --level " + std::to_string(a) + " --all"));
            const long d1 = mode_formula(rc, a).mode;
            for (const auto& run : kkr_scattering_all(rc, a)) {
                const auto& st = run.steps;
                check.expect(st.front().mode == d1, [&] {
                    return "first mode " + std::to_string(st.front().mode) +
                           " differs from mode formula " + std::to_string(d1);
                });
                for (std::size_t k = 0; k + 1 < st.size(); ++k) {
                    const Tableau& A = st[k].tableau;
                    const Tableau& B = st[k + 1].tableau;
                    const int dq = delta_q(st[k].removal, a + 1, B.size());
                    const int u = unwinding_number(B, A);
                    check.expect(dq == u, [&] {
                        return to_string(run.data) + ": Delta Q = " + std::to_string(dq) +
                               " but unwinding(" + to_string(B) + ", " + to_string(A) +
                               ") = " + std::to_string(u);
                    });
                    if (is_candidate(st[k].candidates, st[k + 1].chosen)) {
                        const long gap = st[k].mode - st[k + 1].mode;
                        const int h = energy(B, A);
                        check.expect(gap == h, [&] {
                            return to_string(run.data) + ": colliding pair has mode gap " +
                                   std::to_string(gap) + " but H = " + std::to_string(h);
                        });
                    }
                }
            }

            // Force a collision of the first two removed rows by raising the
            // rigging of the second.
            auto base = kkr_scattering(rc, a);
            if (!base || base->steps.size() < 2)
                continue;
            const auto& A = base->steps[0];
            const auto& B = base->steps[1];
            const long delta = A.mode - B.mode;
            if (delta <= 0 || is_candidate(A.candidates, B.chosen))
                continue;
            RiggedConfiguration raised = rc;
            raised.layers[a - 1][static_cast<std::size_t>(B.chosen)].rigging +=
                static_cast<int>(delta);
            if (!is_valid(raised))
                continue;
            auto forced = kkr_scattering(raised, a, follow(removal_order(*base)));
            if (!forced)
                continue;
            Checker fcheck(local, to_json(raised).dump(),
                           piped(raised, "scatter - --level " + std::to_string(a)));
            const auto& A2 = forced->steps[0];
            const auto& B2 = forced->steps[1];
            fcheck.expect(is_candidate(A2.candidates, B2.chosen),
                          [] { return std::string("raised rigging did not produce a collision"); });
            const long gap = A2.mode - B2.mode;
            const int h = energy(B2.tableau, A2.tableau);
            fcheck.expect(gap == h, [&] {
                return "forced collision has mode gap " + std::to_string(gap) + " but H = " +
                       std::to_string(h);
            });
        }
    });
}

SuiteReport suite_normal_order(const SuiteOptions& o) {
    return run_rcs("normal_order", o, [](const RiggedConfiguration& rc, Local& local) {
        for (int a = 1; a < rc.n; ++a) {
            Checker check(local, to_json(rc).dump(),
                          piped(rc, "scatter - --level " + std::to_string(a) + " --all"));
            const RiggedConfiguration sub = restrict_to(rc, a);
            const TensorWord path = kkr_forward(sub, Rule1Tie::first_stored, a).path;
            std::vector<int> riggings;
            for (const auto& r : rc.layers[a - 1])
                riggings.push_back(r.rigging);
            const ScatteringData s = modes_from_riggings(path, riggings, a);
            const auto orb = orbit(s);
            const auto s1 = normal_ordered_set(std::span<const ScatteringData>(orb));
            for (const auto& e : orb) {
                const bool member = std::find(s1.begin(), s1.end(), e) != s1.end();
                const bool gap = is_normal_ordered(e);
                check.expect(member == gap, [&] {
                    return to_string(e) + (member ? " is in S_1 but fails the gap criterion"
                                                  : " passes the gap criterion but is not in S_1");
                });
            }
            for (const auto& run : kkr_scattering_all(rc, a)) {
                const bool in_s1 = std::find(s1.begin(), s1.end(), run.data) != s1.end();
                check.expect(in_s1, [&] {
                    return "KKR normal ordered product " + to_string(run.data) +
                           " is not in S_1 of " + to_string(s);
                });
                const Prop43Report p43 = prop43_isomorphism_check(rc, a, run.data);
                check.expect(p43.ok, [&] { return "isomorphism check: " + p43.message; });
            }
        }
    });
}

SuiteReport suite_lemma52(const SuiteOptions& o) {
    return run_rcs("lemma52", o, [](const RiggedConfiguration& rc, Local& local) {
        for (int a = 1; a < rc.n; ++a) {
            const auto& layer = rc.layers[a - 1];
            if (layer.empty())
                continue;
            auto base = kkr_scattering(rc, a);
            if (!base)
                continue;
            const auto order = removal_order(*base);
            for (std::size_t k = 0; k < layer.size(); ++k) {
                RiggedConfiguration raised = rc;
                ++raised.layers[a - 1][k].rigging;
                if (!is_valid(raised))
                    continue;
                auto next = kkr_scattering(raised, a, follow(order));
                if (!next)
                    continue; // removal order changed
                Checker check(local, to_json(raised).dump(),
                              piped(raised, "scatter - --level " + std::to_string(a)));
                bool ok = next->steps.size() == base->steps.size();
                for (std::size_t i = 0; ok && i < base->steps.size(); ++i) {
                    const auto& was = base->steps[i];
                    const auto& now = next->steps[i];
                    const long want = was.mode + (was.chosen == static_cast<int>(k) ? 1 : 0);
                    ok = now.chosen == was.chosen && now.tableau == was.tableau && now.mode == want;
                }
                check.expect(ok, [&] {
                    return "raising row " + std::to_string(k) + " turned " +
                           to_string(base->data) + " into " + to_string(next->data);
                });
            }
        }
    });
}

namespace {

void all_tableaux(int n, int k, std::vector<Tableau>& out) {
    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto& self, int i, int left) -> void {
        if (i == n - 1) {
            counts[i] = left;
            out.emplace_back(counts);
            return;
        }
        for (int c = left; c >= 0; --c) {
            counts[i] = c;
            self(self, i + 1, left - c);
        }
    };
    rec(rec, 0, k);
}

void compositions(int remaining, int max_part, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = 1; p <= std::min(max_part, remaining); ++p) {
        cur.push_back(p);
        compositions(remaining - p, max_part, cur, out);
        cur.pop_back();
    }
}

struct QuantumItem {
    int n = 0;
    std::vector<int> quantum;
};

} // namespace

SuiteReport suite_bijection(const SuiteOptions& o) {
    std::vector<QuantumItem> items;
    for (int n = 1; n <= o.n_max; ++n) {
        for (int t = 1; t <= o.max_boxes; ++t) {
            std::vector<std::vector<int>> comps;
            std::vector<int> cur;
            compositions(t, o.max_row_len, cur, comps);
            for (auto& q : comps)
                items.push_back(QuantumItem{n, std::move(q)});
        }
    }
    auto describe = [](const QuantumItem& it) {
        return json{{"n", it.n}, {"quantum", it.quantum}}.dump();
    };
    const std::string repro = "kkr_cli verify --suite bijection --n " + std::to_string(o.n_max) +
                              " --max-boxes " + std::to_string(o.max_boxes);
    return run_items<QuantumItem>(
        "bijection", items,
        [&](const QuantumItem& it, Local& local) {
            Checker check(local, describe(it), repro);
            std::set<std::string> images;
            std::size_t count = 0;
            for_each_rc_with_quantum(it.n, it.quantum, [&](const RiggedConfiguration& rc) {
                ++count;
                images.insert(to_string(kkr_forward(rc).path));
                return true;
            });
            check.expect(images.size() == count, [&] {
                return std::to_string(count) + " configurations but " +
                       std::to_string(images.size()) + " distinct images";
            });

            std::set<std::string> highest;
            std::vector<std::vector<Tableau>> choices;
            for (int k : it.quantum) {
                choices.emplace_back();
                all_tableaux(it.n, k, choices.back());
            }
            TensorWord w{it.n, std::vector<Tableau>(it.quantum.size())};
            auto rec = [&](auto& self, std::size_t i) -> void {
                if (i == choices.size()) {
                    if (is_highest(w))
                        highest.insert(to_string(w));
                    return;
                }
                for (const auto& t : choices[i]) {
                    w.factors[i] = t;
                    self(self, i + 1);
                }
            };
            rec(rec, 0);
            check.expect(images == highest, [&] {
                return std::to_string(images.size()) + " KKR images vs " +
                       std::to_string(highest.size()) + " highest paths";
            });
        },
        o, describe);
}

namespace {

Tableau random_tableau(std::mt19937_64& rng, int n, int k) {
    std::uniform_int_distribution<int> letter(1, n);
    Tableau t(n);
    for (int i = 0; i < k; ++i)
        t.add(letter(rng));
    return t;
}

void check_pair(const Tableau& x, const Tableau& y, Checker& check) {
    const RResult r = r_matrix(x, y);
    auto pair = [&] { return to_string(x) + " (x) " + to_string(y); };
    check.expect(r.left.size() == y.size() && r.right.size() == x.size(),
                 [&] { return pair() + ": capacities not swapped"; });
    check.expect(r.energy >= 0 && r.energy <= std::min(x.size(), y.size()),
                 [&] { return pair() + ": energy out of range"; });
    TensorWord before{x.n(), {x, y}};
    TensorWord after{x.n(), {r.left, r.right}};
    check.expect(weight(before) == weight(after), [&] { return pair() + ": weight changed"; });
    const RResult back = r_matrix(r.left, r.right);
    check.expect(back.left == x && back.right == y && back.energy == r.energy,
                 [&] { return pair() + ": not an involution"; });
    if (x.size() >= y.size()) {
        std::vector<int> order = y.letters();
        do {
            const RResult alt = detail::pair_dots(x, y, order);
            check.expect(alt == r, [&] { return pair() + ": pairing order matters"; });
        } while (std::next_permutation(order.begin(), order.end()));
    }
}

void check_triple(const Tableau& x, const Tableau& y, const Tableau& z, Checker& check) {
    TensorWord w{x.n(), {x, y, z}};
    const TensorWord one = apply_r(apply_r(apply_r(w, 0), 1), 0);
    const TensorWord two = apply_r(apply_r(apply_r(w, 1), 0), 1);
    check.expect(one == two, [&] {
        return "Yang-Baxter fails on " + to_string(w) + ": " + to_string(one) + " vs " +
               to_string(two);
    });
}

} // namespace

SuiteReport suite_rmatrix(const SuiteOptions& o) {
    const auto start = std::chrono::steady_clock::now();
    Local local;
    Checker check(local, "", "");
    std::size_t instances = 0;

    auto with_repro = [&](const Tableau& x, const Tableau& y) {
        check.set_reproduce("kkr_cli rmatrix " + to_string(x) + " " + to_string(y) + " --n " +
                            std::to_string(x.n()));
    };

    // Exhaustive pairs: n <= 4, capacities <= 4.
    for (int n = 1; n <= std::min(o.n_max, 4); ++n) {
        std::vector<Tableau> all;
        for (int k = 1; k <= 4; ++k)
            all_tableaux(n, k, all);
        for (const auto& x : all)
            for (const auto& y : all) {
                with_repro(x, y);
                check_pair(x, y, check);
                ++instances;
            }
    }
    // Exhaustive triples: n <= 3, capacities <= 2.
    for (int n = 1; n <= std::min(o.n_max, 3); ++n) {
        std::vector<Tableau> all;
        for (int k = 1; k <= 2; ++k)
            all_tableaux(n, k, all);
        for (const auto& x : all)
            for (const auto& y : all)
                for (const auto& z : all) {
                    check.set_reproduce("");
                    check_triple(x, y, z, check);
                    ++instances;
                }
    }
    // Fixed cases.
    {
        const Tableau x = parse_tableau("1344", 4);
        const Tableau y = parse_tableau("234", 4);
        with_repro(x, y);
        const RResult r = r_matrix(x, y);
        check.expect(to_string(r.left) == "134" && to_string(r.right) == "2344" && r.energy == 1,
                     [] { return std::string("1344 (x) 234 does not give 134 (x) 2344, H=1"); });
        for (int k = 1; k <= 4; ++k)
            for (int l = 1; l <= 4; ++l) {
                const Tableau u = Tableau::pure(3, 2, k);
                const Tableau v = Tableau::pure(3, 2, l);
                with_repro(u, v);
                const RResult s = r_matrix(u, v);
                check.expect(s.left == v && s.right == u && s.energy == std::min(k, l),
                             [&] { return "pure " + to_string(u) + " (x) " + to_string(v); });
            }
    }
    // Random triples: n <= 5, capacities <= 4.
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> nd(2, 5);
    std::uniform_int_distribution<int> kd(1, 4);
    for (std::size_t s = 0; s < o.samples; ++s) {
        const int n = nd(rng);
        const Tableau x = random_tableau(rng, n, kd(rng));
        const Tableau y = random_tableau(rng, n, kd(rng));
        const Tableau z = random_tableau(rng, n, kd(rng));
        check.set_reproduce("");
        check_triple(x, y, z, check);
        with_repro(x, y);
        check_pair(x, y, check);
        with_repro(y, z);
        check_pair(y, z, check);
        ++instances;
    }

    SuiteReport report;
    report.name = "rmatrix";
    report.instances = instances;
    report.checks = local.checks;
    report.failure_count = local.failures.size();
    for (auto& f : local.failures)
        if (report.failures.size() < o.max_failures)
            report.failures.push_back(std::move(f));
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<std::string> suite_names() {
    return {"theorem37", "kss", "theorem61", "rmatrix", "normal_order", "lemma52", "bijection"};
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& o) {
    if (name == "theorem37")
        return suite_theorem37(o);
    if (name == "kss")
        return suite_kss(o);
    if (name == "theorem61")
        return suite_theorem61(o);
    if (name == "rmatrix")
        return suite_rmatrix(o);
    if (name == "normal_order")
        return suite_normal_order(o);
    if (name == "lemma52")
        return suite_lemma52(o);
    if (name == "bijection")
        return suite_bijection(o);
    throw ContractError("unknown suite '" + name + "'");
}

} // namespace kkr
