#pragma once

#include "kkr/crystal.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace kkr {

/// Scattering data at level a: affine factors over letters {a+1..n}, in
/// display order (left to right).
struct ScatteringData {
    int level = 0;
    int n = 0;
    std::vector<AffineFactor> factors;

    std::size_t size() const { return factors.size(); }
    bool empty() const { return factors.empty(); }
    std::vector<long> modes() const;
    TensorWord classical() const;

    friend bool operator==(const ScatteringData&, const ScatteringData&) = default;
};

/// "b1[d1]*b2[d2]*...", e.g. "222[4]*2233[5]*4[5]".
std::string to_string(const ScatteringData& s);
/// A negative `level` is inferred as the smallest letter present minus one.
ScatteringData parse_scattering(std::string_view text, int n, int level = -1);

} // namespace kkr
