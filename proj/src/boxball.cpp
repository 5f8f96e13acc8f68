#include "kkr/boxball.hpp"

#include "kkr/errors.hpp"

#include <algorithm>
#include <charconv>

namespace kkr {

int BoxBallState::at(long pos) const {
    const long i = pos - offset;
    if (i < 0 || i >= static_cast<long>(cells.size()))
        return 1;
    return cells[static_cast<std::size_t>(i)];
}

void BoxBallState::trim() {
    auto first = std::find_if(cells.begin(), cells.end(), [](int c) { return c != 1; });
    if (first == cells.end()) {
        cells.clear();
        offset = 0;
        return;
    }
    auto last = std::find_if(cells.rbegin(), cells.rend(), [](int c) { return c != 1; }).base();
    offset += first - cells.begin();
    cells = std::vector<int>(first, last);
}

int BoxBallState::balls() const {
    return static_cast<int>(std::count_if(cells.begin(), cells.end(), [](int c) { return c != 1; }));
}

BoxBallState from_path(const TensorWord& path) {
    BoxBallState s;
    s.n = path.n;
    for (const auto& f : path.factors) {
        if (f.size() != 1)
            throw ContractError("from_path: factor " + to_string(f) + " is not a single box");
        s.cells.push_back(f.letters().front());
    }
    return s;
}

namespace {

// Sweeps the carrier once; returns the new cells (same offset, possibly
// longer) and the summed unwinding numbers.
std::pair<std::vector<int>, long> sweep(const BoxBallState& state, int capacity) {
    const int n = state.n;
    Tableau v = Tableau::pure(n, 1, capacity);
    std::vector<int> out;
    out.reserve(state.cells.size() + static_cast<std::size_t>(capacity));
    long unwinding = 0;
    auto step = [&](int c) {
        RResult r = r_matrix(v, Tableau::pure(n, c, 1));
        unwinding += 1 - r.energy;
        out.push_back(r.left.letters().front());
        v = std::move(r.right);
    };
    for (int c : state.cells)
        step(c);
    const std::size_t limit = 16 * std::max<std::size_t>(state.cells.size(), 1);
    std::size_t fed = 0;
    while (!v.is_pure(1)) {
        if (fed++ >= limit)
            throw ResourceError("carrier did not empty within " + std::to_string(limit) +
                                " padding cells");
        step(1);
    }
    return {std::move(out), unwinding};
}

int resolve_capacity(const BoxBallState& state, int capacity) {
    if (capacity > 0)
        return capacity;
    return std::max(state.balls(), 1);
}

} // namespace

BoxBallState evolve(const BoxBallState& state, int capacity) {
    BoxBallState next = state;
    next.cells = sweep(state, resolve_capacity(state, capacity)).first;
    ++next.t;
    next.trim();
    return next;
}

long carrier_energy(const BoxBallState& state, int capacity) {
    if (capacity < 1)
        throw ContractError("carrier_energy: capacity must be positive");
    return sweep(state, capacity).second;
}

std::vector<int> soliton_content(const BoxBallState& state) {
    const int b = state.balls();
    std::vector<long> at_least; // at_least[l-1] = number of solitons of length >= l
    long prev = 0;
    for (int l = 1; l <= b; ++l) {
        const long e = carrier_energy(state, l);
        if (e == prev)
            break;
        at_least.push_back(e - prev);
        prev = e;
    }
    std::vector<int> lengths;
    if (at_least.empty())
        return lengths;
    for (long i = 1; i <= at_least.front(); ++i)
        lengths.push_back(static_cast<int>(
            std::count_if(at_least.begin(), at_least.end(), [&](long c) { return c >= i; })));
    return lengths;
}

SolitonReport solitons(const BoxBallState& state) {
    SolitonReport report;
    BoxBallState s = state;
    s.trim();
    std::size_t i = 0;
    long previous_run = 0;
    while (i < s.cells.size()) {
        std::size_t gap = 0;
        while (i < s.cells.size() && s.cells[i] == 1) {
            ++gap;
            ++i;
        }
        if (i == s.cells.size())
            break;
        if (!report.solitons.empty() && static_cast<long>(gap) < previous_run)
            report.separated = false;
        Tableau run(s.n);
        while (i < s.cells.size() && s.cells[i] != 1)
            run.add(s.cells[i++]);
        previous_run = run.size();
        report.solitons.push_back(std::move(run));
    }
    return report;
}

namespace {

std::string join_cells(const BoxBallState& state, long start, long width) {
    std::string out;
    for (long p = start; p < start + width; ++p) {
        const int c = state.at(p);
        if (state.n <= 9) {
            out.push_back(static_cast<char>('0' + c));
        } else {
            if (p != start)
                out.push_back(',');
            out += std::to_string(c);
        }
    }
    return out;
}

} // namespace

std::string to_string(const BoxBallState& state) {
    BoxBallState s = state;
    s.trim();
    return join_cells(s, s.offset, static_cast<long>(s.cells.size()));
}

std::string render(const BoxBallState& state, long start, long width) {
    return join_cells(state, start, width);
}

BoxBallState parse_state(std::string_view text, int n) {
    if (n < 1)
        throw ParseError("alphabet size must be positive");
    BoxBallState s;
    s.n = n;
    auto check = [&](int c) {
        if (c < 1 || c > n)
            throw ParseError("cell value " + std::to_string(c) + " outside 1.." +
                             std::to_string(n));
        s.cells.push_back(c);
    };
    if (text.find(',') == std::string_view::npos) {
        for (char ch : text) {
            if (ch < '1' || ch > '9')
                throw ParseError(std::string("invalid cell character '") + ch + "'");
            check(ch - '0');
        }
        return s;
    }
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view part = text.substr(start, comma - start);
        int c = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), c);
        if (ec != std::errc() || ptr != part.data() + part.size())
            throw ParseError("invalid cell '" + std::string(part) + "'");
        check(c);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return s;
}

} // namespace kkr
