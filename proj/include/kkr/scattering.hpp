#pragma once

// Scattering data built from riggings, its R-orbit and normal ordering, the
// c-word and the Phi operator, and the nested composition that rebuilds the
// KKR image level by level.

#include "kkr/bijection.hpp"
#include "kkr/crystal.hpp"
#include "kkr/rigged_config.hpp"
#include "kkr/scattering_data.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace kkr {

/// Attach modes to a level-a path: d_i = r_i + sum over l < i of
/// H(b_l (x) b_i transported next to b_l), with b_0 = (a+1)^{max k}.
/// Factor i of `path` is paired with `riggings[i]`.
ScatteringData modes_from_riggings(const TensorWord& path, std::span<const int> riggings, int a);

/// Closure under adjacent affine R moves, in breadth-first order starting at `s`.
/// Throws ResourceError past `cap` elements.
std::vector<ScatteringData> orbit(const ScatteringData& s, std::size_t cap = 1'000'000);

/// The final filtered set S_1: starting from the whole orbit, keep the
/// elements whose i-th mode from the left is maximal, for i = N down to 1.
/// Sorted by classical serialization. Every member has the same modes.
std::vector<ScatteringData> normal_ordered_set(const ScatteringData& s,
                                               std::size_t cap = 1'000'000);

/// Same filter applied to an orbit that is already at hand.
std::vector<ScatteringData> normal_ordered_set(std::span<const ScatteringData> orbit_elements);

/// Smallest member of S_1 by classical serialization.
ScatteringData normal_order(const ScatteringData& s, std::size_t cap = 1'000'000);

/// m_{j+1} - m_j >= H(f_j (x) f_{j+1}) for every adjacent pair.
bool is_normal_ordered(const ScatteringData& s);

/// a^{m_1} (x) f_1 (x) a^{m_2 - m_1} (x) f_2 (x) ... with single-letter a
/// factors, a = s.level. Modes must be nonnegative and weakly increasing.
TensorWord build_c(const ScatteringData& s);

struct PhiResult {
    TensorWord path;
    /// What leaves the columns after every pass, in the order of the c factors.
    std::vector<Tableau> residues;
};

/// Vertex-pass evaluation of Phi at level s.level: columns a^{l_i} in the
/// order of `shape`; the factors of build_c(s) pass through them from the
/// rightmost. Throws ContractError if a pass leaves anything but the letter a.
PhiResult phi_detailed(const ScatteringData& s, std::span<const int> shape);
TensorWord phi(const ScatteringData& s, std::span<const int> shape);

/// Rebuilds the KKR image level by level from the trivial level n-1 path.
TensorWord compose_theorem(const RiggedConfiguration& rc);

/// Every distinct output over all choices of S_1 representative at every
/// level. Throws ResourceError when more than `cap` branches are live.
std::vector<TensorWord> compose_theorem_all(const RiggedConfiguration& rc,
                                            std::size_t cap = 100'000);

struct Prop43Report {
    bool ok = false;
    std::string message;
};

/// Checks p (x) (a^{mu^(a)_i}) (x) a^{d_1} ~ c (x) (a^{mu^(a-1)_i}) for the
/// KKR normal ordered product chosen by `policy`: transporting c through the
/// columns must reproduce the KKR image of the level a-1 configuration and
/// leave exactly the pure-a factors of the other side.
Prop43Report prop43_isomorphism_check(const RiggedConfiguration& rc, int a,
                                      const ChoicePolicy& policy = longest_first);
Prop43Report prop43_isomorphism_check(const RiggedConfiguration& rc, int a,
                                      const ScatteringData& normal_product);

} // namespace kkr
