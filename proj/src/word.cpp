#include "sigmainv/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace sigmainv {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) throw std::invalid_argument("Word: the empty word is not an element of M");
    for (const auto& l : letters_) {
        if (l.index == 0) throw std::invalid_argument("Word: letter indices are 1-based");
    }
}

Word Word::transpose() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->transpose());
    return Word(std::move(out));
}

Word Word::rotate(std::size_t k) const {
    std::vector<Letter> out(letters_);
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k % out.size()), out.end());
    return Word(std::move(out));
}

Word Word::power(unsigned e) const {
    if (e == 0) throw std::invalid_argument("Word::power: exponent must be positive");
    std::vector<Letter> out;
    out.reserve(letters_.size() * e);
    for (unsigned i = 0; i < e; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
    return Word(std::move(out));
}

std::uint32_t Word::max_index() const {
    std::uint32_t m = 0;
    for (const auto& l : letters_) m = std::max(m, l.index);
    return m;
}

Word operator*(const Word& a, const Word& b) {
    std::vector<Letter> out(a.letters_);
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(out));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                  b.letters_.begin(), b.letters_.end());
}

std::size_t primitive_period(const Word& w) {
    // prefix function; the word is a proper power iff n % (n - border) == 0
    const auto n = w.size();
    std::vector<std::size_t> pi(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        auto k = pi[i - 1];
        while (k > 0 && w[i] != w[k]) k = pi[k - 1];
        if (w[i] == w[k]) ++k;
        pi[i] = k;
    }
    const auto period = n - pi[n - 1];
    return n % period == 0 ? period : n;
}

bool is_primitive(const Word& w) { return primitive_period(w) == w.size(); }

CanonicalForm canonicalize(const Word& w) {
    const auto period = primitive_period(w);
    const Word root(std::vector<Letter>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(period)));
    const Word rt = root.transpose();
    Word best = root;
    for (std::size_t k = 0; k < period; ++k) {
        Word a = root.rotate(k);
        if (a < best) best = std::move(a);
        Word b = rt.rotate(k);
        if (b < best) best = std::move(b);
    }
    return CanonicalForm{CanonicalCycle(std::move(best)), static_cast<unsigned>(w.size() / period)};
}

MDeg mdeg(const Word& w, unsigned d) {
    MDeg out(d, 0);
    for (const auto& l : w) {
        if (l.index > d) {
            throw std::out_of_range("mdeg: letter index " + std::to_string(l.index) +
                                   " exceeds alphabet size " + std::to_string(d));
        }
        ++out[l.index - 1];
    }
    return out;
}

MDeg mdeg(const Word& w) { return mdeg(w, w.max_index()); }

Word glue(const Word& w, unsigned d) {
    if (d == 0) throw std::invalid_argument("glue: d must be positive");
    std::vector<Letter> out;
    out.reserve(w.size());
    for (const auto& l : w) out.push_back({(l.index - 1) % d + 1, l.transposed});
    return Word(std::move(out));
}

// ---------------------------------------------------------------- LinComb

LinComb::LinComb(const Word& w, Rational c) { add(w, c); }

void LinComb::add(const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LinComb& LinComb::operator+=(const LinComb& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

LinComb& LinComb::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_) coeff *= c;
    return *this;
}

LinComb operator*(const LinComb& a, const LinComb& b) {
    LinComb out;
    for (const auto& [u, cu] : a.terms_) {
        for (const auto& [v, cv] : b.terms_) out.add(u * v, cu * cv);
    }
    return out;
}

LinComb involute(const LinComb& c) {
    LinComb out;
    for (const auto& [w, coeff] : c.terms()) out.add(w.transpose(), coeff);
    return out;
}

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!lookup_.emplace(names_[i], static_cast<std::uint32_t>(i + 1)).second) {
            throw std::invalid_argument("Alphabet: duplicate letter name " + names_[i]);
        }
    }
}

Alphabet Alphabet::xyz() { return Alphabet({"x", "y", "z"}); }

Alphabet Alphabet::xyz(unsigned u, unsigned v, unsigned w) {
    std::vector<std::string> names;
    auto family = [&](const char* base, unsigned count) {
        for (unsigned i = 1; i <= count; ++i) {
            names.push_back(count == 1 ? std::string(base) : std::string(base) + std::to_string(i));
        }
    };
    family("x", u);
    family("y", v);
    family("z", w);
    return Alphabet(std::move(names));
}

std::string Alphabet::name(std::uint32_t index) const {
    if (index >= 1 && index <= names_.size()) return names_[index - 1];
    return "g" + std::to_string(index);
}

namespace {

bool generic_index(std::string_view name, std::uint32_t& out) {
    if (name.size() < 2 || name[0] != 'g') return false;
    std::uint64_t v = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
        v = v * 10 + static_cast<std::uint64_t>(name[i] - '0');
        if (v > 1'000'000) return false;
    }
    if (v == 0) return false;
    out = static_cast<std::uint32_t>(v);
    return true;
}

bool valid_letter_name(std::string_view name) {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace

std::uint32_t Alphabet::index(std::string_view name) const {
    if (auto it = lookup_.find(std::string(name)); it != lookup_.end()) return it->second;
    std::uint32_t k = 0;
    if (generic_index(name, k) && k > names_.size()) return k;
    throw std::invalid_argument("unknown letter '" + std::string(name) + "'");
}

std::uint32_t Alphabet::index(std::string_view name, bool extend) {
    if (auto it = lookup_.find(std::string(name)); it != lookup_.end()) return it->second;
    std::uint32_t k = 0;
    if (generic_index(name, k) && k > names_.size()) return k;
    if (!extend) throw std::invalid_argument("unknown letter '" + std::string(name) + "'");
    if (!valid_letter_name(name)) throw std::invalid_argument("malformed letter '" + std::string(name) + "'");
    names_.emplace_back(name);
    const auto idx = static_cast<std::uint32_t>(names_.size());
    lookup_.emplace(std::string(name), idx);
    return idx;
}

// ---------------------------------------------------------------- text I/O

std::string to_string(Letter l, const Alphabet& a) { return a.name(l.index) + (l.transposed ? "'" : ""); }

std::string letters_to_string(const Word& w, const Alphabet& a) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += ' ';
        out += to_string(w[i], a);
    }
    return out;
}

std::string to_string(const Word& w, const Alphabet& a) { return "[" + letters_to_string(w, a) + "]"; }

std::string to_string(const LinComb& c, const Alphabet& a) {
    if (c.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, coeff] : c.terms()) {
        const bool negative = coeff < 0;
        const Rational mag = negative ? Rational(-coeff) : coeff;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (mag != 1) out += to_string(mag) + "*";
        out += to_string(w, a);
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Word parse_word(std::string_view text, Alphabet& a, bool extend) {
    auto s = trim(text);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw std::invalid_argument("unterminated word '" + std::string(text) + "'");
        s = trim(s.substr(1, s.size() - 2));
    }
    std::vector<Letter> letters;
    std::size_t i = 0;
    while (i < s.size()) {
        if (std::isspace(static_cast<unsigned char>(s[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != '\'') ++j;
        const auto name = s.substr(i, j - i);
        bool transposed = false;
        while (j < s.size() && s[j] == '\'') {
            transposed = !transposed;
            ++j;
        }
        if (name.empty()) throw std::invalid_argument("malformed word '" + std::string(text) + "'");
        letters.push_back({a.index(name, extend), transposed});
        i = j;
    }
    if (letters.empty()) throw std::invalid_argument("empty word '" + std::string(text) + "'");
    return Word(std::move(letters));
}

LinComb parse_lincomb(std::string_view text, Alphabet& a, bool extend) {
    LinComb out;
    auto s = trim(text);
    if (s.empty()) throw std::invalid_argument("empty linear combination");
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i >= s.size()) break;
        Rational sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' in '" + std::string(text) + "'");
        }
        first = false;
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        const auto open = s.find('[', i);
        if (open == std::string_view::npos) {
            throw std::invalid_argument("expected '[' in '" + std::string(text) + "'");
        }
        const auto close = s.find(']', open);
        if (close == std::string_view::npos) {
            throw std::invalid_argument("unterminated word in '" + std::string(text) + "'");
        }
        auto coeff_text = trim(s.substr(i, open - i));
        Rational coeff = 1;
        if (!coeff_text.empty()) {
            if (coeff_text.back() != '*') {
                throw std::invalid_argument("expected '*' after coefficient in '" + std::string(text) + "'");
            }
            coeff = parse_rational(std::string(trim(coeff_text.substr(0, coeff_text.size() - 1))));
        }
        out.add(parse_word(s.substr(open, close - open + 1), a, extend), sign * coeff);
        i = close + 1;
    }
    return out;
}

}  // namespace sigmainv
