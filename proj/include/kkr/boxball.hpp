#pragma once

// Box-ball states over {1..n} on an infinite background of 1s, evolved by
// sweeping a carrier through the cells with the combinatorial R matrix.

#include "kkr/crystal.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace kkr {

struct BoxBallState {
    int n = 2;
    long offset = 0;        ///< absolute position of cells[0]
    std::vector<int> cells; ///< everything outside is the letter 1
    long t = 0;

    /// Letter at an absolute position.
    int at(long pos) const;
    /// Drop background cells from both ends, keeping absolute positions.
    void trim();
    /// Number of cells with a letter >= 2.
    int balls() const;

    friend bool operator==(const BoxBallState&, const BoxBallState&) = default;
};

/// Concatenate a path of single boxes into a state starting at position 0.
BoxBallState from_path(const TensorWord& path);

/// One time step T_l: a carrier 1^l enters from the left, every cell c
/// becomes c' through v (x) c ~ c' (x) v', and 1s are fed on the right until
/// the carrier is empty again. `capacity` <= 0 means the number of balls,
/// which acts as T_infinity for this state. The result is trimmed.
BoxBallState evolve(const BoxBallState& state, int capacity = 0);

/// Sum over one carrier sweep of the unwinding numbers of v (x) c.
long carrier_energy(const BoxBallState& state, int capacity);

/// Soliton lengths in decreasing order, read from the carrier energies:
/// the number of solitons of length >= l is E_l - E_{l-1}. Works on
/// interacting states too.
std::vector<int> soliton_content(const BoxBallState& state);

struct SolitonReport {
    bool separated = true;
    std::vector<Tableau> solitons; ///< left to right, letters sorted
};

/// Maximal runs of letters >= 2. `separated` is false when some gap of 1s is
/// shorter than the run to its left; the runs are still listed.
SolitonReport solitons(const BoxBallState& state);

/// Trimmed cells as digits (n <= 9) or comma-separated integers.
std::string to_string(const BoxBallState& state);

/// Absolute positions [start, start + width) as text, background included.
std::string render(const BoxBallState& state, long start, long width);

/// Parses digits, or comma-separated integers when the text has a comma.
/// Positions start at 0.
BoxBallState parse_state(std::string_view text, int n);

} // namespace kkr
