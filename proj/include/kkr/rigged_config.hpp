#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace kkr {

/// One row of a configuration layer with its rigging.
struct Row {
    int length = 0;
    int rigging = 0;

    friend bool operator==(const Row&, const Row&) = default;
};

/// An sl_n rigged configuration.
///
/// `quantum` is the quantum space as an ordered composition: its stored order
/// is the processing order of the bijection, rightmost row first.
/// `layers[a - 1]` holds the rows and riggings of configuration a, a = 1..n-1.
struct RiggedConfiguration {
    int n = 0;
    std::vector<int> quantum;
    std::vector<std::vector<Row>> layers;

    /// Row lengths of layer a (a = 0 is the quantum space).
    std::vector<int> shape(int a) const;

    friend bool operator==(const RiggedConfiguration&, const RiggedConfiguration&) = default;
};

/// Number of boxes of layer a in columns <= j. Layers a <= n - 1 only; any
/// a >= n reads as empty.
int q_value(const RiggedConfiguration& rc, int a, int j);

/// p^(a)_j = Q^(a-1)_j - 2 Q^(a)_j + Q^(a+1)_j for 1 <= a <= n - 1.
int vacancy(const RiggedConfiguration& rc, int a, int j);

bool is_singular(const RiggedConfiguration& rc, int a, std::size_t row);

struct ValidationReport {
    bool ok = true;
    std::string message; ///< first violation, empty when ok
};

ValidationReport validate(const RiggedConfiguration& rc);
bool is_valid(const RiggedConfiguration& rc);
/// Throws ValidationError carrying the diagnostic.
void require_valid(const RiggedConfiguration& rc);

/// Restores weakly increasing riggings among equal-length rows by a stable
/// sort on (length desc, rigging asc) of each offending layer. Returns true
/// if anything was reordered.
bool normalize(RiggedConfiguration& rc);

/// The sl_{n-a} configuration obtained by dropping layers below a; layer a
/// becomes the quantum space (its riggings are dropped).
RiggedConfiguration restrict_to(const RiggedConfiguration& rc, int a);

struct EnumerationLimits {
    int n = 2;
    int max_quantum_boxes = 1;
    int max_row_len = 1;
    std::size_t cap = 5'000'000; ///< ResourceError past this many configurations
};

/// Calls `visit` with every valid rigged configuration whose quantum space is
/// a nonempty composition of at most `max_quantum_boxes` boxes with parts at
/// most `max_row_len`. Layers are stored with rows in decreasing length and
/// riggings weakly increasing within equal lengths. Order is deterministic.
/// Returning false from `visit` stops the walk. Returns the number visited.
std::size_t for_each_rc(const EnumerationLimits& limits,
                        const std::function<bool(const RiggedConfiguration&)>& visit);

std::vector<RiggedConfiguration> enumerate_rcs(const EnumerationLimits& limits);

/// Configurations for one fixed quantum composition, in the same order.
std::size_t for_each_rc_with_quantum(int n, const std::vector<int>& quantum,
                                     const std::function<bool(const RiggedConfiguration&)>& visit,
                                     std::size_t cap = 5'000'000);

} // namespace kkr
