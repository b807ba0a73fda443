#pragma once

// The free monoid on letters 1..d and their transposes.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sigmainv/scalar.hpp"

namespace sigmainv {

struct Letter {
    std::uint32_t index = 1;  // 1-based
    bool transposed = false;

    constexpr Letter transpose() const { return {index, !transposed}; }
    /// Total order x1 < x1' < x2 < x2' < ...
    constexpr std::uint64_t key() const { return 2 * std::uint64_t{index} + (transposed ? 1 : 0); }

    friend constexpr bool operator==(Letter a, Letter b) = default;
    friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) { return a.key() <=> b.key(); }
};

/// Multidegree vector; entry k-1 counts letter k and its transpose. Missing
/// trailing entries are zero.
using MDeg = std::vector<unsigned>;

/// Nonempty immutable sequence of letters. Ordered degree-lexicographically.
class Word {
public:
    explicit Word(std::vector<Letter> letters);
    Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

    std::size_t size() const { return letters_.size(); }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    /// Reverse the word and toggle every transpose flag.
    Word transpose() const;
    /// Cyclic shift: letter k moves to position 0.
    Word rotate(std::size_t k) const;
    Word power(unsigned e) const;
    std::uint32_t max_index() const;

    friend Word operator*(const Word& a, const Word& b);
    friend bool operator==(const Word& a, const Word& b) = default;
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
    std::vector<Letter> letters_;
};

/// Canonical representative of a ~-class of primitive words: the minimum over
/// all rotations of the word and of its transpose.
class CanonicalCycle {
public:
    const Word& word() const { return word_; }
    static constexpr bool primitive = true;

    friend bool operator==(const CanonicalCycle&, const CanonicalCycle&) = default;
    friend std::strong_ordering operator<=>(const CanonicalCycle& a, const CanonicalCycle& b) {
        return a.word_ <=> b.word_;
    }

private:
    friend struct CanonicalForm canonicalize(const Word& w);
    explicit CanonicalCycle(Word w) : word_(std::move(w)) {}
    Word word_;
};

/// w ~ root^power.
struct CanonicalForm {
    CanonicalCycle cycle;
    unsigned power = 1;
};

CanonicalForm canonicalize(const Word& w);

/// Length of the smallest period dividing |w|.
std::size_t primitive_period(const Word& w);
bool is_primitive(const Word& w);

/// Throws std::out_of_range if a letter index exceeds d.
MDeg mdeg(const Word& w, unsigned d);
/// Multidegree with as many entries as the largest letter index.
MDeg mdeg(const Word& w);

/// Collapse the extended alphabet: letter i + j*d becomes i.
Word glue(const Word& w, unsigned d);

/// Finite F-linear combination of words with no zero coefficients.
class LinComb {
public:
    using Terms = std::map<Word, Rational>;

    LinComb() = default;
    explicit LinComb(const Word& w, Rational c = 1);

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add(const Word& w, const Rational& c);
    LinComb& operator+=(const LinComb& o);
    LinComb& operator*=(const Rational& c);

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator*(LinComb a, const Rational& c) { return a *= c; }
    /// Concatenation product, extended bilinearly.
    friend LinComb operator*(const LinComb& a, const LinComb& b);
    friend bool operator==(const LinComb&, const LinComb&) = default;

private:
    Terms terms_;
};

LinComb involute(const LinComb& c);

/// Names of letter indices for printing and parsing. Index k has name
/// names()[k-1]; indices past the list print as "g<k>".
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    /// Empty name list: every letter is g<k>.
    static Alphabet generic() { return Alphabet{}; }
    /// x, y, z (no subscripts).
    static Alphabet xyz();
    /// x1..xu, y1..yv, z1..zw; a family of size one drops the subscript.
    static Alphabet xyz(unsigned u, unsigned v, unsigned w);

    std::string name(std::uint32_t index) const;
    /// Looks up a letter name (without transpose mark). Unknown names of the
    /// form g<k> resolve to k; other unknown names are appended when `extend`.
    std::uint32_t index(std::string_view name, bool extend = false);
    std::uint32_t index(std::string_view name) const;
    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::uint32_t> lookup_;
};

std::string to_string(Letter l, const Alphabet& a);
/// "[x1 y1' z1]"
std::string to_string(const Word& w, const Alphabet& a);
/// Space-separated letters without brackets.
std::string letters_to_string(const Word& w, const Alphabet& a);
/// "2*[x1] - 3*[x2']"
std::string to_string(const LinComb& c, const Alphabet& a);

/// Accepts "[x1 y1' z1]" or the bare letter list. Throws std::invalid_argument.
Word parse_word(std::string_view text, Alphabet& a, bool extend = true);
/// Accepts "<rat>*[...] +/- <rat>*[...]"; a coefficient may be omitted.
LinComb parse_lincomb(std::string_view text, Alphabet& a, bool extend = true);

}  // namespace sigmainv
