#include "kkr/scattering_data.hpp"

#include "kkr/errors.hpp"

#include <algorithm>
#include <charconv>

namespace kkr {

std::vector<long> ScatteringData::modes() const {
    std::vector<long> out;
    out.reserve(factors.size());
    for (const auto& f : factors)
        out.push_back(f.mode);
    return out;
}

TensorWord ScatteringData::classical() const {
    TensorWord w{n, {}};
    for (const auto& f : factors)
        w.factors.push_back(f.tableau);
    return w;
}

std::string to_string(const ScatteringData& s) {
    std::string out;
    for (std::size_t i = 0; i < s.factors.size(); ++i) {
        if (i)
            out.push_back('*');
        out += to_string(s.factors[i]);
    }
    return out;
}

ScatteringData parse_scattering(std::string_view text, int n, int level) {
    ScatteringData s;
    s.n = n;
    s.level = std::max(level, 0);
    if (text.empty())
        return s;
    int lowest = n + 1;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t star = text.find('*', start);
        std::string_view part = text.substr(start, star - start);
        const std::size_t open = part.find('[');
        if (open == std::string_view::npos || part.empty() || part.back() != ']')
            throw ParseError("expected b[d], got '" + std::string(part) + "'");
        Tableau t = parse_tableau(part.substr(0, open), n);
        std::string_view digits = part.substr(open + 1, part.size() - open - 2);
        long mode = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), mode);
        if (ec != std::errc() || ptr != digits.data() + digits.size())
            throw ParseError("bad mode '" + std::string(digits) + "'");
        for (int l = 1; l <= n; ++l)
            if (t.count(l) > 0 && l < lowest)
                lowest = l;
        s.factors.push_back(AffineFactor{std::move(t), mode});
        if (star == std::string_view::npos)
            break;
        start = star + 1;
    }
    if (level < 0)
        s.level = lowest == n + 1 ? 0 : lowest - 1;
    else if (lowest <= level)
        throw ParseError("letter " + std::to_string(lowest) + " not above level " +
                         std::to_string(level));
    return s;
}

} // namespace kkr
