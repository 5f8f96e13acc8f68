#pragma once

// Row tableaux of the symmetric-power crystals B_k of sl_n, the combinatorial
// R matrix with its energy function, and the affinized R matrix.

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kkr {

/// One element of B_k: a multiset of k letters from {1..n}, stored as counts.
/// The row word is the letters in weakly increasing order. k == 0 is allowed
/// only as an internal placeholder.
class Tableau {
  public:
    Tableau() = default;
    /// Empty tableau over {1..n}.
    explicit Tableau(int n);
    /// counts[i] is the number of letters i+1; counts.size() is the alphabet size.
    explicit Tableau(std::vector<int> counts);

    /// Tableau u^k for a single letter u.
    static Tableau pure(int n, int letter, int k);
    static Tableau from_letters(int n, std::span<const int> letters);

    int n() const { return static_cast<int>(counts_.size()); }
    int size() const { return size_; }
    bool empty() const { return size_ == 0; }
    int count(int letter) const { return counts_[letter - 1]; }
    std::span<const int> counts() const { return counts_; }

    /// Row word, weakly increasing.
    std::vector<int> letters() const;
    bool is_pure(int letter) const { return size_ == count(letter); }

    void add(int letter, int times = 1);
    void remove(int letter, int times = 1);

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau& a, const Tableau& b) {
        return a.counts_ <=> b.counts_;
    }

  private:
    std::vector<int> counts_;
    int size_ = 0;
};

/// Ordered tensor product of tableaux over a common alphabet, in display order.
struct TensorWord {
    int n = 0;
    std::vector<Tableau> factors;

    std::size_t size() const { return factors.size(); }
    bool empty() const { return factors.empty(); }
    const Tableau& operator[](std::size_t i) const { return factors[i]; }

    friend bool operator==(const TensorWord&, const TensorWord&) = default;
};

/// A tableau with an integer mode, b[d].
struct AffineFactor {
    Tableau tableau;
    long mode = 0;

    friend bool operator==(const AffineFactor&, const AffineFactor&) = default;
};

/// Result of x (x) y ~ y' (x) x'.
struct RResult {
    Tableau left;  ///< y', same capacity as y
    Tableau right; ///< x', same capacity as x
    int energy = 0;

    friend bool operator==(const RResult&, const RResult&) = default;
};

/// Combinatorial R matrix B_k (x) B_l -> B_l (x) B_k with its energy H (the
/// number of winding pairs). For k >= l the dot-pairing rule is run directly;
/// for k < l the result is the unique preimage under the k >= l rule.
RResult r_matrix(const Tableau& x, const Tableau& y);

int energy(const Tableau& x, const Tableau& y);

/// min(|x|, |y|) - energy(x, y).
int unwinding_number(const Tableau& x, const Tableau& y);

/// b[d] (x) b'[d'] ~ b~'[d' - H] (x) b~[d + H].
std::pair<AffineFactor, AffineFactor> affine_r(const AffineFactor& a, const AffineFactor& b);

/// Total letter counts over all factors.
std::vector<int> weight(const TensorWord& w);

/// Lattice-word test on the reading word: factors left to right, each row
/// read from its largest letter down.
bool is_highest(const TensorWord& w);

/// Apply the R matrix at factors (pos, pos + 1).
TensorWord apply_r(const TensorWord& w, std::size_t pos);

namespace detail {

/// Pairing rule for |x| >= |y|, processing the dots of y in the given letter
/// order (each letter repeated by its multiplicity). The result does not
/// depend on the order; the default order is largest letter first.
RResult pair_dots(const Tableau& x, const Tableau& y, std::span<const int> right_order);

/// Pairing rule for |x| >= |y| with the default order.
RResult pair_dots(const Tableau& x, const Tableau& y);

/// Letter reversal i -> n + 1 - i.
Tableau dual(const Tableau& t);

} // namespace detail

// Text forms. Letters 1..9 are digits, 10..35 are 'a'..'z'.

char letter_char(int letter);
int char_letter(char c);

std::string to_string(const Tableau& t);
/// Factors joined by '*', e.g. "1*2*13*2".
std::string to_string(const TensorWord& w);
/// "b[d]", e.g. "23[2]".
std::string to_string(const AffineFactor& f);

/// Parse a weakly increasing letter string over {1..n}.
Tableau parse_tableau(std::string_view text, int n);
TensorWord parse_word(std::string_view text, int n);

} // namespace kkr
