#include "kkr/crystal.hpp"

#include "kkr/errors.hpp"

#include <algorithm>
#include <numeric>

namespace kkr {

Tableau::Tableau(int n) : counts_(static_cast<std::size_t>(n), 0) {
    if (n < 1)
        throw AlphabetError("alphabet size must be positive");
}

Tableau::Tableau(std::vector<int> counts) : counts_(std::move(counts)) {
    if (counts_.empty())
        throw AlphabetError("alphabet size must be positive");
    for (int c : counts_) {
        if (c < 0)
            throw ValidationError("negative letter count in tableau");
        size_ += c;
    }
}

Tableau Tableau::pure(int n, int letter, int k) {
    Tableau t(n);
    t.add(letter, k);
    return t;
}

Tableau Tableau::from_letters(int n, std::span<const int> letters) {
    Tableau t(n);
    for (int l : letters)
        t.add(l);
    return t;
}

std::vector<int> Tableau::letters() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (int i = 0; i < n(); ++i)
        out.insert(out.end(), static_cast<std::size_t>(counts_[i]), i + 1);
    return out;
}

void Tableau::add(int letter, int times) {
    if (letter < 1 || letter > n())
        throw AlphabetError("letter " + std::to_string(letter) + " outside {1.." +
                            std::to_string(n()) + "}");
    counts_[letter - 1] += times;
    size_ += times;
}

void Tableau::remove(int letter, int times) {
    if (letter < 1 || letter > n() || counts_[letter - 1] < times)
        throw InvariantError("removing absent letter from tableau");
    counts_[letter - 1] -= times;
    size_ -= times;
}

namespace detail {

RResult pair_dots(const Tableau& x, const Tableau& y, std::span<const int> right_order) {
    const int n = x.n();
    std::vector<int> left(x.counts().begin(), x.counts().end());
    Tableau paired(n);
    int winding = 0;
    for (int j : right_order) {
        // Partner: lowest row strictly above j, else wrap to the lowest row overall.
        int partner = 0;
        for (int i = j - 1; i >= 1; --i) {
            if (left[i - 1] > 0) {
                partner = i;
                break;
            }
        }
        if (partner == 0) {
            for (int i = n; i >= 1; --i) {
                if (left[i - 1] > 0) {
                    partner = i;
                    break;
                }
            }
            ++winding;
        }
        if (partner == 0)
            throw InvariantError("pairing rule ran out of left dots");
        --left[partner - 1];
        paired.add(partner);
    }
    Tableau moved = y;
    for (int i = 1; i <= n; ++i)
        moved.add(i, left[i - 1]);
    return {std::move(paired), std::move(moved), winding};
}

RResult pair_dots(const Tableau& x, const Tableau& y) {
    std::vector<int> order = y.letters();
    std::reverse(order.begin(), order.end());
    return pair_dots(x, y, order);
}

Tableau dual(const Tableau& t) {
    std::vector<int> c(t.counts().rbegin(), t.counts().rend());
    return Tableau(std::move(c));
}

namespace {

// Exhaustive preimage search for |x| < |y|: every y' in B_l drawn from the
// combined multiset, checked against the k >= l rule.
bool search_preimage(const Tableau& x, const Tableau& y, RResult& out) {
    const int n = x.n();
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        pool[i] = x.counts()[i] + y.counts()[i];
    std::vector<int> pick(static_cast<std::size_t>(n), 0);
    const int target = y.size();
    bool found = false;
    auto rec = [&](auto& self, int i, int remaining) -> void {
        if (found)
            return;
        if (i == n) {
            if (remaining != 0)
                return;
            Tableau left(pick);
            std::vector<int> rest(static_cast<std::size_t>(n));
            for (int t = 0; t < n; ++t)
                rest[t] = pool[t] - pick[t];
            Tableau right(rest);
            RResult back = pair_dots(left, right);
            if (back.left == x && back.right == y) {
                out = {std::move(left), std::move(right), back.energy};
                found = true;
            }
            return;
        }
        for (int c = std::min(pool[i], remaining); c >= 0; --c) {
            pick[i] = c;
            self(self, i + 1, remaining - c);
        }
        pick[i] = 0;
    };
    rec(rec, 0, target);
    return found;
}

} // namespace
} // namespace detail

RResult r_matrix(const Tableau& x, const Tableau& y) {
    if (x.n() != y.n())
        throw AlphabetError("r_matrix: alphabet sizes " + std::to_string(x.n()) + " and " +
                            std::to_string(y.n()) + " differ");
    if (x.size() >= y.size())
        return detail::pair_dots(x, y);

    // |x| < |y|: build the candidate through letter reversal, which swaps the
    // two tensor factors, then confirm it is the preimage under the k >= l rule.
    RResult mirrored = detail::pair_dots(detail::dual(y), detail::dual(x));
    Tableau left = detail::dual(mirrored.right);
    Tableau right = detail::dual(mirrored.left);
    RResult back = detail::pair_dots(left, right);
    if (back.left == x && back.right == y)
        return {std::move(left), std::move(right), back.energy};

    RResult searched;
    if (detail::search_preimage(x, y, searched))
        return searched;
    throw InvariantError("r_matrix: no preimage for " + to_string(x) + " (x) " + to_string(y));
}

int energy(const Tableau& x, const Tableau& y) { return r_matrix(x, y).energy; }

int unwinding_number(const Tableau& x, const Tableau& y) {
    return std::min(x.size(), y.size()) - energy(x, y);
}

std::pair<AffineFactor, AffineFactor> affine_r(const AffineFactor& a, const AffineFactor& b) {
    RResult r = r_matrix(a.tableau, b.tableau);
    return {AffineFactor{std::move(r.left), b.mode - r.energy},
            AffineFactor{std::move(r.right), a.mode + r.energy}};
}

std::vector<int> weight(const TensorWord& w) {
    std::vector<int> total(static_cast<std::size_t>(std::max(w.n, 0)), 0);
    for (const auto& f : w.factors) {
        if (f.n() != w.n)
            throw AlphabetError("weight: factor alphabet differs from word alphabet");
        for (int i = 0; i < w.n; ++i)
            total[i] += f.counts()[i];
    }
    return total;
}

bool is_highest(const TensorWord& w) {
    std::vector<int> seen(static_cast<std::size_t>(w.n) + 2, 0);
    for (const auto& f : w.factors) {
        for (int letter = f.n(); letter >= 1; --letter) {
            for (int c = 0; c < f.count(letter); ++c) {
                ++seen[letter];
                if (letter > 1 && seen[letter] > seen[letter - 1])
                    return false;
            }
        }
    }
    return true;
}

TensorWord apply_r(const TensorWord& w, std::size_t pos) {
    if (pos + 1 >= w.size())
        throw ContractError("apply_r: position out of range");
    TensorWord out = w;
    RResult r = r_matrix(w.factors[pos], w.factors[pos + 1]);
    out.factors[pos] = std::move(r.left);
    out.factors[pos + 1] = std::move(r.right);
    return out;
}

char letter_char(int letter) {
    if (letter >= 1 && letter <= 9)
        return static_cast<char>('0' + letter);
    if (letter >= 10 && letter <= 35)
        return static_cast<char>('a' + (letter - 10));
    throw AlphabetError("letter " + std::to_string(letter) + " has no single-character form");
}

int char_letter(char c) {
    if (c >= '1' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'z')
        return c - 'a' + 10;
    throw ParseError(std::string("invalid letter character '") + c + "'");
}

std::string to_string(const Tableau& t) {
    std::string s;
    for (int l : t.letters())
        s.push_back(letter_char(l));
    return s;
}

std::string to_string(const TensorWord& w) {
    std::string s;
    for (std::size_t i = 0; i < w.factors.size(); ++i) {
        if (i)
            s.push_back('*');
        s += to_string(w.factors[i]);
    }
    return s;
}

std::string to_string(const AffineFactor& f) {
    return to_string(f.tableau) + "[" + std::to_string(f.mode) + "]";
}

Tableau parse_tableau(std::string_view text, int n) {
    if (n < 1)
        throw ParseError("alphabet size must be positive");
    if (text.empty())
        throw ParseError("empty tableau");
    Tableau t(n);
    int prev = 0;
    for (char c : text) {
        int l = char_letter(c);
        if (l > n)
            throw ParseError("letter '" + std::string(1, c) + "' exceeds alphabet size " +
                             std::to_string(n));
        if (l < prev)
            throw ParseError("tableau '" + std::string(text) + "' is not weakly increasing");
        prev = l;
        t.add(l);
    }
    return t;
}

TensorWord parse_word(std::string_view text, int n) {
    TensorWord w{n, {}};
    if (text.empty())
        return w;
    std::size_t start = 0;
    while (true) {
        std::size_t star = text.find('*', start);
        w.factors.push_back(parse_tableau(text.substr(start, star - start), n));
        if (star == std::string_view::npos)
            break;
        start = star + 1;
    }
    return w;
}

} // namespace kkr
