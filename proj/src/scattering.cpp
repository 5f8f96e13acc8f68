#include "kkr/scattering.hpp"

#include "kkr/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace kkr {

ScatteringData modes_from_riggings(const TensorWord& path, std::span<const int> riggings, int a) {
    if (path.size() != riggings.size())
        throw ContractError("modes_from_riggings: " + std::to_string(path.size()) +
                            " factors but " + std::to_string(riggings.size()) + " riggings");
    ScatteringData s;
    s.level = a;
    s.n = path.n;
    if (path.empty())
        return s;
    int kmax = 0;
    for (const auto& f : path.factors)
        kmax = std::max(kmax, f.size());
    const Tableau b0 = Tableau::pure(path.n, a + 1, kmax);

    for (std::size_t i = 0; i < path.size(); ++i) {
        long d = riggings[i];
        Tableau cur = path[i];
        for (std::size_t l = i; l-- > 0;) {
            RResult r = r_matrix(path[l], cur);
            d += r.energy;
            cur = std::move(r.left);
        }
        d += energy(b0, cur);
        s.factors.push_back(AffineFactor{path[i], d});
    }
    return s;
}

namespace {

std::vector<long> key_of(const ScatteringData& s) {
    std::vector<long> key;
    for (const auto& f : s.factors) {
        key.push_back(f.mode);
        key.push_back(f.tableau.size());
        for (int c : f.tableau.counts())
            key.push_back(c);
    }
    return key;
}

} // namespace

std::vector<ScatteringData> orbit(const ScatteringData& s, std::size_t cap) {
    std::vector<ScatteringData> out{s};
    std::set<std::vector<long>> seen{key_of(s)};
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (std::size_t j = 0; j + 1 < out[head].size(); ++j) {
            ScatteringData next = out[head];
            auto [l, r] = affine_r(next.factors[j], next.factors[j + 1]);
            next.factors[j] = std::move(l);
            next.factors[j + 1] = std::move(r);
            if (!seen.insert(key_of(next)).second)
                continue;
            if (out.size() >= cap)
                throw ResourceError("orbit exceeded cap of " + std::to_string(cap));
            out.push_back(std::move(next));
        }
    }
    return out;
}

std::vector<ScatteringData> normal_ordered_set(std::span<const ScatteringData> orbit_elements) {
    std::vector<ScatteringData> cur(orbit_elements.begin(), orbit_elements.end());
    if (cur.empty())
        return cur;
    const std::size_t len = cur.front().size();
    for (std::size_t i = len; i-- > 0;) {
        long best = cur.front().factors[i].mode;
        for (const auto& e : cur)
            best = std::max(best, e.factors[i].mode);
        std::erase_if(cur, [&](const ScatteringData& e) { return e.factors[i].mode != best; });
    }
    const auto modes = cur.front().modes();
    for (const auto& e : cur)
        if (e.modes() != modes)
            throw InvariantError("normal ordered forms disagree on modes");
    std::sort(cur.begin(), cur.end(), [](const ScatteringData& x, const ScatteringData& y) {
        return to_string(x.classical()) < to_string(y.classical());
    });
    return cur;
}

std::vector<ScatteringData> normal_ordered_set(const ScatteringData& s, std::size_t cap) {
    auto all = orbit(s, cap);
    return normal_ordered_set(std::span<const ScatteringData>(all));
}

ScatteringData normal_order(const ScatteringData& s, std::size_t cap) {
    return normal_ordered_set(s, cap).front();
}

bool is_normal_ordered(const ScatteringData& s) {
    for (std::size_t j = 0; j + 1 < s.size(); ++j) {
        const auto& x = s.factors[j];
        const auto& y = s.factors[j + 1];
        if (y.mode - x.mode < energy(x.tableau, y.tableau))
            return false;
    }
    return true;
}

TensorWord build_c(const ScatteringData& s) {
    TensorWord c{s.n, {}};
    long prev = 0;
    for (const auto& f : s.factors) {
        if (f.mode < prev)
            throw ContractError("build_c: modes must be nonnegative and weakly increasing, got " +
                                to_string(s));
        for (long i = prev; i < f.mode; ++i)
            c.factors.push_back(Tableau::pure(s.n, s.level, 1));
        c.factors.push_back(f.tableau);
        prev = f.mode;
    }
    return c;
}

PhiResult phi_detailed(const ScatteringData& s, std::span<const int> shape) {
    const int a = s.level;
    if (a < 1 || a > s.n)
        throw ContractError("phi: level " + std::to_string(a) + " outside 1.." +
                            std::to_string(s.n));
    TensorWord c = build_c(s);
    PhiResult out;
    out.path.n = s.n;
    for (int l : shape)
        out.path.factors.push_back(Tableau::pure(s.n, a, l));
    out.residues.resize(c.size());

    long residue_letters = 0;
    for (std::size_t k = c.size(); k-- > 0;) {
        Tableau g = c[k];
        for (auto& column : out.path.factors) {
            RResult r = r_matrix(g, column);
            column = std::move(r.left);
            g = std::move(r.right);
        }
        if (!g.is_pure(a))
            throw ContractError("phi: pass of " + to_string(c[k]) + " left " + to_string(g) +
                                "; input is not normal ordered");
        residue_letters += g.size();
        out.residues[k] = std::move(g);
    }

    long expected = s.empty() ? 0 : s.factors.back().mode;
    for (const auto& f : s.factors)
        expected += f.tableau.size();
    if (residue_letters != expected)
        throw InvariantError("phi: residue count mismatch");
    return out;
}

TensorWord phi(const ScatteringData& s, std::span<const int> shape) {
    return phi_detailed(s, shape).path;
}

namespace {

std::vector<int> riggings_of(const RiggedConfiguration& rc, int a) {
    std::vector<int> out;
    for (const auto& r : rc.layers[a - 1])
        out.push_back(r.rigging);
    return out;
}

TensorWord top_path(const RiggedConfiguration& rc) {
    TensorWord path{rc.n, {}};
    for (int w : rc.shape(rc.n - 1))
        path.factors.push_back(Tableau::pure(rc.n, rc.n, w));
    return path;
}

} // namespace

TensorWord compose_theorem(const RiggedConfiguration& rc) {
    require_valid(rc);
    TensorWord path = top_path(rc);
    for (int a = rc.n - 1; a >= 1; --a) {
        auto r = riggings_of(rc, a);
        ScatteringData s = normal_order(modes_from_riggings(path, r, a));
        path = phi(s, rc.shape(a - 1));
    }
    return path;
}

std::vector<TensorWord> compose_theorem_all(const RiggedConfiguration& rc, std::size_t cap) {
    require_valid(rc);
    std::vector<TensorWord> live{top_path(rc)};
    for (int a = rc.n - 1; a >= 1; --a) {
        auto r = riggings_of(rc, a);
        std::vector<TensorWord> next;
        for (const auto& path : live) {
            for (const auto& s : normal_ordered_set(modes_from_riggings(path, r, a))) {
                TensorWord p = phi(s, rc.shape(a - 1));
                if (std::find(next.begin(), next.end(), p) == next.end())
                    next.push_back(std::move(p));
                if (next.size() > cap)
                    throw ResourceError("compose_theorem_all exceeded cap of " +
                                        std::to_string(cap));
            }
        }
        live = std::move(next);
    }
    return live;
}

Prop43Report prop43_isomorphism_check(const RiggedConfiguration& rc, int a,
                                      const ScatteringData& product) {
    RiggedConfiguration below = restrict_to(rc, a - 1);
    const TensorWord p = kkr_forward(below, Rule1Tie::first_stored, a - 1).path;
    PhiResult image;
    try {
        image = phi_detailed(product, rc.shape(a - 1));
    } catch (const Error& e) {
        return {false, e.what()};
    }
    if (image.path != p)
        return {false, "transported columns " + to_string(image.path) + " differ from KKR image " +
                           to_string(p)};

    // The residues are pure a, so only their capacities matter: one per row of
    // layer a and d_1 single boxes.
    std::vector<int> got;
    for (const auto& t : image.residues)
        got.push_back(t.size());
    std::vector<int> want = rc.shape(a);
    const long d1 = product.empty() ? 0 : product.factors.back().mode;
    want.insert(want.end(), static_cast<std::size_t>(d1), 1);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want)
        return {false, "residue capacities do not match the pure-a factors"};
    return {true, {}};
}

Prop43Report prop43_isomorphism_check(const RiggedConfiguration& rc, int a,
                                      const ChoicePolicy& policy) {
    auto product = kkr_scattering(rc, a, policy);
    if (!product)
        return {false, "choice policy aborted"};
    return prop43_isomorphism_check(rc, a, product->data);
}

} // namespace kkr
