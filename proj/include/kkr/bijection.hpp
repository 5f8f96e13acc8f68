#pragma once

// The forward KKR bijection from rigged configurations to highest paths, and
// the extraction of KKR normal ordered products from the modified quantum
// space mu^(a-1) u mu^(a) u (1^d).

#include "kkr/crystal.hpp"
#include "kkr/rigged_config.hpp"
#include "kkr/scattering_data.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace kkr {

/// A box taken out of layer `layer` (0 = quantum space). `row` is the row's
/// storage index in the configuration the run started from.
struct RemovedBox {
    int layer = 0;
    int row = 0;
    int col = 0;
};

/// One quantum-space box: the chain of boxes removed with it and the letter produced.
struct LetterStep {
    int letter = 0;
    std::vector<RemovedBox> boxes;
};

/// Removal of one whole quantum-space row.
struct RowRemoval {
    int quantum_row = 0;
    Tableau tableau;
    std::vector<LetterStep> steps;
};

struct KkrTrace {
    std::vector<RowRemoval> removals; ///< in processing order
};

/// Q^(layer)_column just before the removal minus just after it.
int delta_q(const RowRemoval& removal, int layer, int column);
int delta_q(const KkrTrace& trace, int layer, int column, std::size_t removal_index);

enum class Rule1Tie { first_stored, last_stored };

struct KkrResult {
    TensorWord path;
    KkrTrace trace;
};

/// Forward bijection. Quantum rows are processed from the last stored row to
/// the first; factor i of the path comes from quantum row i.
/// Letters are shifted by `letter_offset` and tableaux live in B over
/// {1..rc.n + letter_offset}.
KkrResult kkr_forward(const RiggedConfiguration& rc, Rule1Tie tie = Rule1Tie::first_stored,
                      int letter_offset = 0);

/// Maximal value of Q^(a)_w - Q^(a+1)_w + r over rows (w, r) of layer a,
/// with every attaining row index.
struct ModeResult {
    long mode = 0;
    std::vector<int> rows;
};
ModeResult mode_formula(const RiggedConfiguration& rc, int a);

/// A layer-a row offered to a tie-break policy.
struct Candidate {
    int row = 0; ///< storage index in layer a of the input configuration
    int length = 0;
    int rigging = 0;
};

/// Picks the next layer-a row to remove among simultaneously singular rows.
/// `step` counts removals so far. Returning a value not in `candidates` aborts.
using ChoicePolicy = std::function<int(const std::vector<Candidate>& candidates, std::size_t step)>;

/// Longest row first, then smallest storage index.
int longest_first(const std::vector<Candidate>& candidates, std::size_t step);

struct ScatteringStep {
    long mode = 0;
    std::vector<Candidate> candidates;
    int chosen = 0;
    Tableau tableau; ///< letters in {a+1..n}
    /// Working configuration just before this step: sl_{n-a+1}, quantum
    /// space = remaining copies of layer a plus `mode`-or-more unit rows.
    RiggedConfiguration state;
    RowRemoval removal;
};

struct KkrScattering {
    ScatteringData data;         ///< display order: last removed leftmost
    std::vector<int> row_of;     ///< layer-a row index of each displayed factor
    std::vector<ScatteringStep> steps; ///< removal order
};

/// Case-2 extraction at level a (1 <= a <= n-1). Returns std::nullopt only if
/// the policy aborts. An empty layer a gives empty data.
std::optional<KkrScattering> kkr_scattering(const RiggedConfiguration& rc, int a,
                                            const ChoicePolicy& policy = longest_first);

/// Every distinct KKR normal ordered product over all tie choices.
std::vector<KkrScattering> kkr_scattering_all(const RiggedConfiguration& rc, int a);

/// Shift every letter by `offset` into an alphabet of size `n`.
Tableau shift_letters(const Tableau& t, int offset, int n);
TensorWord shift_letters(const TensorWord& w, int offset, int n);

} // namespace kkr
