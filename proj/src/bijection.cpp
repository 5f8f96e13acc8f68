#include "kkr/bijection.hpp"

#include "kkr/errors.hpp"

#include <algorithm>
#include <map>

namespace kkr {

namespace {

// Mutable working copy of a configuration. Rows keep the storage index they
// had in the input so traces and tie choices can refer to them after erasures.
class Engine {
  public:
    Engine(const RiggedConfiguration& rc, int letter_offset, int layer_offset)
        : n_(rc.n), offset_(letter_offset), layer_offset_(layer_offset), quantum_(rc.quantum),
          layers_(rc.layers) {
        quantum_ids_.resize(quantum_.size());
        for (std::size_t i = 0; i < quantum_.size(); ++i)
            quantum_ids_[i] = static_cast<int>(i);
        ids_.resize(layers_.size());
        for (std::size_t a = 0; a < layers_.size(); ++a)
            for (std::size_t i = 0; i < layers_[a].size(); ++i)
                ids_[a].push_back(static_cast<int>(i));
    }

    std::size_t quantum_size() const { return quantum_.size(); }
    int quantum_width(std::size_t q) const { return quantum_[q]; }
    int quantum_id(std::size_t q) const { return quantum_ids_[q]; }
    const std::vector<Row>& layer(int a) const { return layers_[a - 1]; }
    const std::vector<int>& layer_ids(int a) const { return ids_[a - 1]; }

    void push_quantum(int width, int id) {
        quantum_.push_back(width);
        quantum_ids_.push_back(id);
    }

    void clear_quantum() {
        quantum_.clear();
        quantum_ids_.clear();
    }

    RiggedConfiguration snapshot() const {
        RiggedConfiguration rc;
        rc.n = n_;
        rc.quantum = quantum_;
        rc.layers = layers_;
        return rc;
    }

    int q(int a, int j) const {
        int total = 0;
        if (a == 0) {
            for (int w : quantum_)
                total += std::min(j, w);
        } else if (a <= static_cast<int>(layers_.size())) {
            for (const Row& r : layers_[a - 1])
                total += std::min(j, r.length);
        }
        return total;
    }

    int vac(int a, int j) const { return q(a - 1, j) - 2 * q(a, j) + q(a + 1, j); }

    // Removes quantum row `qi` box by box. `hint` names a row id of layer 1
    // that wins Rule-1 ties there.
    RowRemoval remove_quantum_row(std::size_t qi, Rule1Tie tie, int hint = -1) {
        RowRemoval out;
        out.quantum_row = quantum_ids_[qi];
        out.tableau = Tableau(n_ + offset_);
        int prev_letter = 0;
        while (quantum_[qi] > 0) {
            LetterStep step;
            const int col0 = quantum_[qi];
            step.boxes.push_back(RemovedBox{layer_offset_, quantum_ids_[qi], col0});
            std::vector<std::pair<int, std::size_t>> chosen; // (layer, storage position)
            int col = col0;
            for (int a = 1; a < n_; ++a) {
                const auto& rows = layers_[a - 1];
                std::vector<std::size_t> shortest;
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    const Row& r = rows[i];
                    if (r.length < col || r.rigging != vac(a, r.length))
                        continue;
                    if (!shortest.empty() && r.length > rows[shortest.front()].length)
                        continue;
                    if (!shortest.empty() && r.length < rows[shortest.front()].length)
                        shortest.clear();
                    shortest.push_back(i);
                }
                if (shortest.empty())
                    break;
                std::size_t best = tie == Rule1Tie::first_stored ? shortest.front() : shortest.back();
                if (a == 1 && hint >= 0)
                    for (std::size_t i : shortest)
                        if (ids_[0][i] == hint)
                            best = i;
                chosen.emplace_back(a, best);
                col = rows[best].length;
            }
            step.letter = static_cast<int>(chosen.size()) + 1 + offset_;
            for (auto [a, i] : chosen)
                step.boxes.push_back(
                    RemovedBox{a + layer_offset_, ids_[a - 1][i], layers_[a - 1][i].length});

            --quantum_[qi];
            for (auto [a, i] : chosen)
                --layers_[a - 1][i].length;
            for (auto [a, i] : chosen) {
                Row& r = layers_[a - 1][i];
                r.rigging = r.length > 0 ? vac(a, r.length) : 0;
            }
            for (std::size_t a = 0; a < layers_.size(); ++a) {
                for (std::size_t i = layers_[a].size(); i-- > 0;) {
                    if (layers_[a][i].length == 0) {
                        layers_[a].erase(layers_[a].begin() + static_cast<std::ptrdiff_t>(i));
                        ids_[a].erase(ids_[a].begin() + static_cast<std::ptrdiff_t>(i));
                    }
                }
            }

            if (step.letter < prev_letter)
                throw InvariantError("KKR produced a decreasing row");
            prev_letter = step.letter;
            out.tableau.add(step.letter);
            out.steps.push_back(std::move(step));
        }
        quantum_.erase(quantum_.begin() + static_cast<std::ptrdiff_t>(qi));
        quantum_ids_.erase(quantum_ids_.begin() + static_cast<std::ptrdiff_t>(qi));
        return out;
    }

  private:
    int n_;
    int offset_;
    int layer_offset_;
    std::vector<int> quantum_;
    std::vector<int> quantum_ids_;
    std::vector<std::vector<Row>> layers_;
    std::vector<std::vector<int>> ids_;
};

} // namespace

int delta_q(const RowRemoval& removal, int layer, int column) {
    int total = 0;
    for (const auto& step : removal.steps)
        for (const auto& box : step.boxes)
            if (box.layer == layer && box.col <= column)
                ++total;
    return total;
}

int delta_q(const KkrTrace& trace, int layer, int column, std::size_t removal_index) {
    if (removal_index >= trace.removals.size())
        throw ContractError("delta_q: removal index out of range");
    return delta_q(trace.removals[removal_index], layer, column);
}

KkrResult kkr_forward(const RiggedConfiguration& rc, Rule1Tie tie, int letter_offset) {
    require_valid(rc);
    Engine engine(rc, letter_offset, 0);
    KkrResult result;
    result.path.n = rc.n + letter_offset;
    result.path.factors.resize(rc.quantum.size());
    for (std::size_t q = rc.quantum.size(); q-- > 0;) {
        RowRemoval removal = engine.remove_quantum_row(q, tie);
        result.path.factors[q] = removal.tableau;
        result.trace.removals.push_back(std::move(removal));
    }
    for (int a = 1; a < rc.n; ++a)
        if (!engine.layer(a).empty())
            throw InvariantError("KKR left boxes in layer " + std::to_string(a));
    return result;
}

ModeResult mode_formula(const RiggedConfiguration& rc, int a) {
    if (a < 1 || a > rc.n - 1)
        throw ContractError("mode_formula: level outside 1..n-1");
    const auto& rows = rc.layers[a - 1];
    if (rows.empty())
        throw ContractError("mode_formula: layer " + std::to_string(a) + " is empty");
    ModeResult out;
    bool first = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const int w = rows[i].length;
        const long d = q_value(rc, a, w) - q_value(rc, a + 1, w) + rows[i].rigging;
        if (first || d > out.mode) {
            out.mode = d;
            out.rows.clear();
            first = false;
        }
        if (d == out.mode)
            out.rows.push_back(static_cast<int>(i));
    }
    return out;
}

int longest_first(const std::vector<Candidate>& candidates, std::size_t) {
    if (candidates.empty())
        throw ContractError("longest_first: no candidates");
    const Candidate* best = &candidates.front();
    for (const auto& c : candidates)
        if (c.length > best->length || (c.length == best->length && c.row < best->row))
            best = &c;
    return best->row;
}

namespace {

struct ScatterRun {
    int a = 0;
    int n = 0;
    KkrScattering partial;
};

// Chooser returns the row ids to follow from the current candidates; an empty
// result aborts this branch.
using Brancher = std::function<std::vector<int>(const std::vector<Candidate>&, std::size_t)>;

void scatter_step(Engine engine, long units, ScatterRun run, const Brancher& branch,
                  std::vector<KkrScattering>& out) {
    const int a = run.a;
    if (engine.layer(1).empty()) {
        auto& data = run.partial.data;
        std::reverse(data.factors.begin(), data.factors.end());
        std::reverse(run.partial.row_of.begin(), run.partial.row_of.end());
        out.push_back(std::move(run.partial));
        return;
    }

    RiggedConfiguration state = engine.snapshot();
    // The unit rows are implicit in `units`; materialize them for the mode
    // and for the snapshot.
    for (long u = 0; u < units; ++u)
        state.quantum.push_back(1);
    ModeResult m = mode_formula(state, 1);
    if (m.mode > units)
        throw InvariantError("mode exceeds the remaining unit rows");
    if (m.mode < 0)
        throw InvariantError("negative mode");
    state.quantum.resize(state.quantum.size() - static_cast<std::size_t>(units - m.mode));

    std::vector<Candidate> candidates;
    for (int i : m.rows) {
        const Row& r = engine.layer(1)[static_cast<std::size_t>(i)];
        candidates.push_back(Candidate{engine.layer_ids(1)[static_cast<std::size_t>(i)], r.length,
                                       r.rigging});
    }

    for (int chosen : branch(candidates, run.partial.steps.size())) {
        auto it = std::find_if(candidates.begin(), candidates.end(),
                               [&](const Candidate& c) { return c.row == chosen; });
        if (it == candidates.end())
            throw ContractError("choice policy returned a non-candidate row");
        Engine next = engine;
        // Peeling the surplus unit rows only emits the letter a and leaves
        // every layer untouched, so the engine skips them and just drops the count.
        std::size_t q = 0;
        while (q < next.quantum_size() && next.quantum_width(q) != it->length)
            ++q;
        if (q == next.quantum_size())
            throw InvariantError("no quantum copy of width " + std::to_string(it->length));

        std::vector<int> before;
        for (std::size_t i = 0; i < next.layer(1).size(); ++i)
            if (next.layer_ids(1)[i] != chosen)
                before.push_back(next.layer(1)[i].length);

        // Unit rows sit in the quantum space during the removal.
        for (long u = 0; u < m.mode; ++u)
            next.push_quantum(1, -1);
        RowRemoval removal = next.remove_quantum_row(q, Rule1Tie::first_stored, chosen);

        std::vector<int> after;
        for (std::size_t i = 0; i < next.layer(1).size(); ++i) {
            if (next.layer_ids(1)[i] == chosen)
                throw InvariantError("chosen row survived its own removal");
            after.push_back(next.layer(1)[i].length);
        }
        if (before != after)
            throw InvariantError("removal disturbed other rows of layer " + std::to_string(a));

        // Take the unit rows back out; they are tracked by count.
        Engine trimmed = next;
        std::size_t copies = trimmed.quantum_size() - static_cast<std::size_t>(m.mode);
        std::vector<std::pair<int, int>> keep;
        for (std::size_t i = 0; i < copies; ++i)
            keep.emplace_back(trimmed.quantum_width(i), trimmed.quantum_id(i));
        trimmed.clear_quantum();
        for (auto [w, id] : keep)
            trimmed.push_quantum(w, id);

        if (removal.tableau.count(a) != 0)
            throw InvariantError("scattering factor contains the letter " + std::to_string(a));
        Tableau b = removal.tableau;

        ScatterRun branch_run = run;
        ScatteringStep step;
        step.mode = m.mode;
        step.candidates = candidates;
        step.chosen = chosen;
        step.tableau = b;
        step.state = state;
        step.removal = std::move(removal);
        branch_run.partial.data.factors.push_back(AffineFactor{b, m.mode});
        branch_run.partial.row_of.push_back(chosen);
        branch_run.partial.steps.push_back(std::move(step));
        scatter_step(std::move(trimmed), m.mode, std::move(branch_run), branch, out);
    }
}

std::vector<KkrScattering> scatter(const RiggedConfiguration& rc, int a, const Brancher& branch) {
    require_valid(rc);
    if (a < 1 || a > rc.n - 1)
        throw ContractError("kkr_scattering: level " + std::to_string(a) + " outside 1.." +
                            std::to_string(rc.n - 1));
    // Working configuration: sl_{n-a+1} on letters a..n, quantum space made of
    // the rows of layer a (the unit rows are tracked separately).
    RiggedConfiguration work;
    work.n = rc.n - a + 1;
    work.layers.assign(rc.layers.begin() + (a - 1), rc.layers.end());
    Engine engine(work, a - 1, a - 1);
    for (std::size_t i = 0; i < rc.layers[a - 1].size(); ++i)
        engine.push_quantum(rc.layers[a - 1][i].length, static_cast<int>(i));

    ScatterRun run;
    run.a = a;
    run.n = rc.n;
    run.partial.data.level = a;
    run.partial.data.n = rc.n;

    std::vector<KkrScattering> out;
    long units = 0;
    if (!rc.layers[a - 1].empty())
        units = mode_formula(rc, a).mode;
    scatter_step(std::move(engine), units, std::move(run), branch, out);
    return out;
}

} // namespace

std::optional<KkrScattering> kkr_scattering(const RiggedConfiguration& rc, int a,
                                            const ChoicePolicy& policy) {
    bool aborted = false;
    Brancher branch = [&](const std::vector<Candidate>& c, std::size_t step) -> std::vector<int> {
        const int pick = policy(c, step);
        if (std::none_of(c.begin(), c.end(), [&](const Candidate& x) { return x.row == pick; })) {
            aborted = true;
            return {};
        }
        return {pick};
    };
    auto results = scatter(rc, a, branch);
    if (aborted || results.empty())
        return std::nullopt;
    return std::move(results.front());
}

std::vector<KkrScattering> kkr_scattering_all(const RiggedConfiguration& rc, int a) {
    // Candidates of equal width share their rigging, so one row per width covers every outcome.
    Brancher branch = [](const std::vector<Candidate>& c, std::size_t) {
        std::map<int, int> by_width;
        for (const auto& x : c) {
            auto [it, fresh] = by_width.emplace(x.length, x.row);
            if (!fresh)
                it->second = std::min(it->second, x.row);
        }
        std::vector<int> picks;
        for (auto it = by_width.rbegin(); it != by_width.rend(); ++it)
            picks.push_back(it->second);
        return picks;
    };
    auto results = scatter(rc, a, branch);
    std::vector<KkrScattering> unique;
    for (auto& r : results) {
        bool seen = std::any_of(unique.begin(), unique.end(),
                                [&](const KkrScattering& u) { return u.data == r.data; });
        if (!seen)
            unique.push_back(std::move(r));
    }
    return unique;
}

Tableau shift_letters(const Tableau& t, int offset, int n) {
    Tableau out(n);
    for (int l : t.letters())
        out.add(l + offset);
    return out;
}

TensorWord shift_letters(const TensorWord& w, int offset, int n) {
    TensorWord out{n, {}};
    for (const auto& f : w.factors)
        out.factors.push_back(shift_letters(f, offset, n));
    return out;
}

} // namespace kkr
