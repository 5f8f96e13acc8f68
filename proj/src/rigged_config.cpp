#include "kkr/rigged_config.hpp"

#include "kkr/errors.hpp"

#include <algorithm>
#include <numeric>

namespace kkr {

std::vector<int> RiggedConfiguration::shape(int a) const {
    if (a == 0)
        return quantum;
    std::vector<int> out;
    if (a >= 1 && a <= static_cast<int>(layers.size())) {
        out.reserve(layers[a - 1].size());
        for (const auto& r : layers[a - 1])
            out.push_back(r.length);
    }
    return out;
}

int q_value(const RiggedConfiguration& rc, int a, int j) {
    if (a < 0)
        throw ContractError("q_value: negative layer index");
    if (a == 0) {
        int q = 0;
        for (int len : rc.quantum)
            q += std::min(j, len);
        return q;
    }
    if (a > static_cast<int>(rc.layers.size()))
        return 0;
    int q = 0;
    for (const auto& r : rc.layers[a - 1])
        q += std::min(j, r.length);
    return q;
}

int vacancy(const RiggedConfiguration& rc, int a, int j) {
    if (a < 1 || a > rc.n - 1)
        throw ContractError("vacancy: layer " + std::to_string(a) + " outside 1.." +
                            std::to_string(rc.n - 1));
    return q_value(rc, a - 1, j) - 2 * q_value(rc, a, j) + q_value(rc, a + 1, j);
}

bool is_singular(const RiggedConfiguration& rc, int a, std::size_t row) {
    const Row& r = rc.layers.at(static_cast<std::size_t>(a - 1)).at(row);
    return r.rigging == vacancy(rc, a, r.length);
}

ValidationReport validate(const RiggedConfiguration& rc) {
    auto fail = [](std::string msg) { return ValidationReport{false, std::move(msg)}; };
    if (rc.n < 1)
        return fail("n must be at least 1");
    if (static_cast<int>(rc.layers.size()) != rc.n - 1)
        return fail("expected " + std::to_string(rc.n - 1) + " layers, found " +
                    std::to_string(rc.layers.size()));
    for (std::size_t i = 0; i < rc.quantum.size(); ++i)
        if (rc.quantum[i] <= 0)
            return fail("quantum row " + std::to_string(i) + " has nonpositive length");
    for (int a = 1; a < rc.n; ++a) {
        const auto& layer = rc.layers[a - 1];
        for (std::size_t i = 0; i < layer.size(); ++i) {
            const std::string where =
                "layer " + std::to_string(a) + " row " + std::to_string(i) + ": ";
            const Row& r = layer[i];
            if (r.length <= 0)
                return fail(where + "nonpositive length");
            const int p = vacancy(rc, a, r.length);
            if (p < 0)
                return fail(where + "vacancy number " + std::to_string(p) + " is negative");
            if (r.rigging < 0 || r.rigging > p)
                return fail(where + "rigging " + std::to_string(r.rigging) + " outside [0, " +
                            std::to_string(p) + "]");
            for (std::size_t k = i + 1; k < layer.size(); ++k)
                if (layer[k].length == r.length && layer[k].rigging < r.rigging)
                    return fail(where + "riggings of equal-length rows decrease");
        }
    }
    return {};
}

bool is_valid(const RiggedConfiguration& rc) { return validate(rc).ok; }

void require_valid(const RiggedConfiguration& rc) {
    auto report = validate(rc);
    if (!report.ok)
        throw ValidationError("invalid rigged configuration: " + report.message);
}

bool normalize(RiggedConfiguration& rc) {
    bool changed = false;
    for (auto& layer : rc.layers) {
        bool bad = false;
        for (std::size_t i = 0; i < layer.size() && !bad; ++i)
            for (std::size_t k = i + 1; k < layer.size(); ++k)
                if (layer[k].length == layer[i].length && layer[k].rigging < layer[i].rigging) {
                    bad = true;
                    break;
                }
        if (!bad)
            continue;
        std::stable_sort(layer.begin(), layer.end(), [](const Row& x, const Row& y) {
            if (x.length != y.length)
                return x.length > y.length;
            return x.rigging < y.rigging;
        });
        changed = true;
    }
    return changed;
}

RiggedConfiguration restrict_to(const RiggedConfiguration& rc, int a) {
    if (a < 0 || a > rc.n - 1)
        throw ContractError("restrict_to: level " + std::to_string(a) + " outside 0.." +
                            std::to_string(rc.n - 1));
    if (a == 0)
        return rc;
    RiggedConfiguration out;
    out.n = rc.n - a;
    out.quantum = rc.shape(a);
    out.layers.assign(rc.layers.begin() + a, rc.layers.end());
    return out;
}

namespace {

// Partitions (weakly decreasing) with parts <= max_part and total <= max_total.
void partitions(int max_part, int max_total, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
    out.push_back(cur);
    for (int p = std::min(max_part, max_total); p >= 1; --p) {
        cur.push_back(p);
        partitions(p, max_total - p, cur, out);
        cur.pop_back();
    }
}

int q_of(const std::vector<int>& shape, int j) {
    int q = 0;
    for (int len : shape)
        q += std::min(j, len);
    return q;
}

int total(const std::vector<int>& shape) { return std::accumulate(shape.begin(), shape.end(), 0); }

class RcWalker {
  public:
    RcWalker(int n, std::vector<int> quantum,
             const std::function<bool(const RiggedConfiguration&)>& visit, std::size_t cap,
             std::size_t& count)
        : n_(n), visit_(visit), cap_(cap), count_(count) {
        shapes_.push_back(std::move(quantum));
    }

    // Returns false once the visitor asked to stop.
    bool run() { return choose_shape(1); }

  private:
    int vac(int a, int j) const {
        auto q = [&](int b) { return b < static_cast<int>(shapes_.size()) ? q_of(shapes_[b], j) : 0; };
        return q(a - 1) - 2 * q(a) + q(a + 1);
    }

    bool layer_ok(int a) const {
        for (int len : shapes_[a])
            if (vac(a, len) < 0)
                return false;
        return true;
    }

    bool choose_shape(int a) {
        if (a == n_) {
            if (n_ > 1 && !layer_ok(n_ - 1))
                return true;
            rc_.n = n_;
            rc_.quantum = shapes_[0];
            rc_.layers.assign(static_cast<std::size_t>(n_ - 1), {});
            for (int b = 1; b < n_; ++b)
                for (int len : shapes_[b])
                    rc_.layers[b - 1].push_back(Row{len, 0});
            return choose_rigging(0, 0);
        }
        const int bound = total(shapes_[a - 1]);
        std::vector<std::vector<int>> options;
        std::vector<int> cur;
        partitions(bound, bound, cur, options);
        for (auto& shape : options) {
            shapes_.push_back(std::move(shape));
            // Layer a - 1 is now fully determined; prune on a negative vacancy.
            bool ok = a - 1 < 1 || layer_ok(a - 1);
            bool go_on = !ok || choose_shape(a + 1);
            shapes_.pop_back();
            if (!go_on)
                return false;
        }
        return true;
    }

    bool choose_rigging(std::size_t layer, std::size_t row) {
        if (layer == rc_.layers.size()) {
            if (++count_ > cap_)
                throw ResourceError("rigged configuration enumeration exceeded cap of " +
                                    std::to_string(cap_));
            return visit_(rc_);
        }
        auto& rows = rc_.layers[layer];
        if (row == rows.size())
            return choose_rigging(layer + 1, 0);
        const int len = rows[row].length;
        const int p = vac(static_cast<int>(layer) + 1, len);
        int lo = 0;
        if (row > 0 && rows[row - 1].length == len)
            lo = rows[row - 1].rigging;
        for (int r = lo; r <= p; ++r) {
            rows[row].rigging = r;
            if (!choose_rigging(layer, row + 1))
                return false;
        }
        rows[row].rigging = 0;
        return true;
    }

    int n_;
    const std::function<bool(const RiggedConfiguration&)>& visit_;
    std::size_t cap_;
    std::size_t& count_;
    std::vector<std::vector<int>> shapes_;
    RiggedConfiguration rc_;
};

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

} // namespace

std::size_t for_each_rc_with_quantum(int n, const std::vector<int>& quantum,
                                     const std::function<bool(const RiggedConfiguration&)>& visit,
                                     std::size_t cap) {
    if (n < 1)
        throw ContractError("for_each_rc: n must be positive");
    std::size_t count = 0;
    RcWalker(n, quantum, visit, cap, count).run();
    return count;
}

std::size_t for_each_rc(const EnumerationLimits& limits,
                        const std::function<bool(const RiggedConfiguration&)>& visit) {
    if (limits.n < 1)
        throw ContractError("for_each_rc: n must be positive");
    std::size_t count = 0;
    for (int t = 1; t <= limits.max_quantum_boxes; ++t) {
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        compositions(t, limits.max_row_len, cur, comps);
        for (const auto& q : comps)
            if (!RcWalker(limits.n, q, visit, limits.cap, count).run())
                return count;
    }
    return count;
}

std::vector<RiggedConfiguration> enumerate_rcs(const EnumerationLimits& limits) {
    std::vector<RiggedConfiguration> out;
    for_each_rc(limits, [&](const RiggedConfiguration& rc) {
        out.push_back(rc);
        return true;
    });
    return out;
}

} // namespace kkr
