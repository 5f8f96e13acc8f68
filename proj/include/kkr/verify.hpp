#pragma once

// Exhaustive small-instance cross-checks of the bijection, the R matrix and
// the scattering construction.

#include "kkr/io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kkr {

struct SuiteOptions {
    int n_max = 4;
    int max_boxes = 6;
    int max_row_len = 4;
    std::size_t samples = 1000;  ///< random triples for the R-matrix suite
    std::uint64_t seed = 1;
    unsigned threads = 0;        ///< 0 = hardware concurrency
    std::size_t max_failures = 20;
};

struct Failure {
    std::string instance; ///< compact RC JSON or tableau list
    std::string detail;
    std::string reproduce; ///< one CLI command
};

struct SuiteReport {
    std::string name;
    std::size_t instances = 0;
    std::size_t checks = 0;
    std::size_t failure_count = 0;
    std::vector<Failure> failures; ///< first max_failures, by instance order
    double seconds = 0;

    bool ok() const { return failure_count == 0; }
};

json to_json(const SuiteReport& r);

/// compose_theorem equals kkr_forward, with every S_1 choice where S_1 has
/// more than one element, and the KKR image is independent of Rule-1 ties.
SuiteReport suite_theorem37(const SuiteOptions& o);
/// Swapping adjacent quantum rows acts on the path by one R matrix.
SuiteReport suite_kss(const SuiteOptions& o);
/// Delta Q^(a+1)_{|B|} equals the unwinding number of B (x) A for successive
/// factors of every KKR normal ordered product; collisions satisfy
/// d_A - d_B = H(B (x) A); the first mode matches the mode formula.
SuiteReport suite_theorem61(const SuiteOptions& o);
/// Involution, Yang-Baxter, weight, energy bounds and symmetry, and
/// independence of the pairing order, exhaustively on tiny cases plus random triples.
SuiteReport suite_rmatrix(const SuiteOptions& o);
/// Orbit filtering and the gap criterion agree on every orbit element, and
/// every KKR normal ordered product lies in S_1 with the same modes and
/// satisfies the transport isomorphism.
SuiteReport suite_normal_order(const SuiteOptions& o);
/// Raising one rigging by one, with the removal order kept, raises exactly
/// that row's mode by one.
SuiteReport suite_lemma52(const SuiteOptions& o);
/// For every quantum composition the KKR images are distinct and are
/// exactly the highest paths found by brute force.
SuiteReport suite_bijection(const SuiteOptions& o);

std::vector<std::string> suite_names();
/// Throws ContractError for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteOptions& o);

} // namespace kkr
