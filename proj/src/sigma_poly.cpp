#include "sigmainv/sigma_poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "sigmainv/sigma_ring.hpp"

namespace sigmainv {

SigmaGenerator::SigmaGenerator(unsigned t, const CanonicalCycle& c) : t(t), cycle(c.word()) {
    if (t == 0) throw std::invalid_argument("s_0 is the ring unit, not a generator");
}

MDeg SigmaGenerator::mdeg() const { return mdeg_scale(sigmainv::mdeg(cycle), t); }

std::strong_ordering operator<=>(const SigmaGenerator& a, const SigmaGenerator& b) {
    if (auto c = a.t <=> b.t; c != 0) return c;
    return a.cycle <=> b.cycle;
}

unsigned degree(const Monomial& m) {
    unsigned d = 0;
    for (const auto& g : m) d += g.degree();
    return d;
}

MDeg mdeg(const Monomial& m) {
    MDeg out;
    for (const auto& g : m) out = mdeg_add(out, g.mdeg());
    return out;
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
    const auto da = degree(a);
    const auto db = degree(b);
    if (da != db) return da < db;
    if (a.size() != b.size()) return a.size() > b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool mdeg_leq(const MDeg& a, const MDeg& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        const unsigned bi = i < b.size() ? b[i] : 0;
        if (a[i] > bi) return false;
    }
    return true;
}

bool mdeg_equal(const MDeg& a, const MDeg& b) { return mdeg_leq(a, b) && mdeg_leq(b, a); }

MDeg mdeg_add(const MDeg& a, const MDeg& b) {
    MDeg out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

MDeg mdeg_scale(const MDeg& a, unsigned k) {
    MDeg out(a);
    for (auto& v : out) v *= k;
    return out;
}

// ---------------------------------------------------------------- SigmaPoly

SigmaPoly SigmaPoly::constant(const Rational& c) {
    SigmaPoly p;
    p.add_term({}, c);
    return p;
}

SigmaPoly SigmaPoly::generator(const SigmaGenerator& g) {
    SigmaPoly p;
    p.add_term({g}, 1);
    return p;
}

SigmaPoly SigmaPoly::monomial(Monomial m, const Rational& c) {
    std::sort(m.begin(), m.end());
    SigmaPoly p;
    p.add_term(std::move(m), c);
    return p;
}

void SigmaPoly::add_term(Monomial m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SigmaPoly& SigmaPoly::operator+=(const SigmaPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SigmaPoly& SigmaPoly::operator-=(const SigmaPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SigmaPoly& SigmaPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

SigmaPoly SigmaPoly::operator-() const {
    SigmaPoly out = *this;
    out *= -1;
    return out;
}

namespace {

Monomial merge(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

SigmaPoly operator*(const SigmaPoly& a, const SigmaPoly& b) {
    SigmaPoly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) out.add_term(merge(ma, mb), ca * cb);
    }
    return out;
}

SigmaPoly SigmaPoly::multiply_capped(const SigmaPoly& a, const SigmaPoly& b, const MDeg& cap) {
    SigmaPoly out;
    std::vector<MDeg> degs_b;
    degs_b.reserve(b.terms_.size());
    for (const auto& [mb, cb] : b.terms_) degs_b.push_back(sigmainv::mdeg(mb));
    for (const auto& [ma, ca] : a.terms_) {
        const auto da = sigmainv::mdeg(ma);
        std::size_t k = 0;
        for (const auto& [mb, cb] : b.terms_) {
            if (mdeg_leq(mdeg_add(da, degs_b[k++]), cap)) out.add_term(merge(ma, mb), ca * cb);
        }
    }
    return out;
}

SigmaPoly SigmaPoly::pow(unsigned e) const {
    SigmaPoly out = one();
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
}

std::optional<MDeg> SigmaPoly::homogeneous_mdeg() const {
    std::optional<MDeg> out;
    for (const auto& [m, c] : terms_) {
        auto d = sigmainv::mdeg(m);
        if (!out) {
            out = std::move(d);
        } else if (!mdeg_equal(*out, d)) {
            return std::nullopt;
        }
    }
    if (!out) return MDeg{};
    while (!out->empty() && out->back() == 0) out->pop_back();
    return out;
}

std::uint32_t SigmaPoly::max_letter() const {
    std::uint32_t m = 0;
    for (const auto& [mono, c] : terms_) {
        for (const auto& g : mono) m = std::max(m, g.cycle.max_index());
    }
    return m;
}

SigmaPoly SigmaPoly::filter(const std::function<bool(const Monomial&)>& keep) const {
    SigmaPoly out;
    for (const auto& [m, c] : terms_) {
        if (keep(m)) out.terms_.emplace(m, c);
    }
    return out;
}

SigmaPoly homogeneous_component(const SigmaPoly& p, const MDeg& target) {
    return p.filter([&](const Monomial& m) { return mdeg_equal(mdeg(m), target); });
}

// ---------------------------------------------------------------- text I/O

namespace {

std::string generator_text(const SigmaGenerator& g, const Alphabet& a) {
    std::string head = g.t == 1 ? "tr" : "s" + std::to_string(g.t);
    return head + to_string(g.cycle, a);
}

}  // namespace

std::string to_string(const SigmaPoly& p, const Alphabet& a) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::vector<std::string> factors;
        if (m.empty() || mag != 1) factors.push_back(to_string(mag));
        for (std::size_t i = 0; i < m.size();) {
            std::size_t j = i;
            while (j < m.size() && m[j] == m[i]) ++j;
            auto f = generator_text(m[i], a);
            if (j - i > 1) f += "^" + std::to_string(j - i);
            factors.push_back(std::move(f));
            i = j;
        }
        for (std::size_t k = 0; k < factors.size(); ++k) {
            if (k > 0) out += "*";
            out += factors[k];
        }
    }
    return out;
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, Alphabet& a, bool extend) : s_(text), alphabet_(a), extend_(extend) {}

    SigmaPoly parse() {
        skip_ws();
        if (at_end()) fail("empty polynomial");
        SigmaPoly out;
        bool first = true;
        while (true) {
            skip_ws();
            if (at_end()) break;
            Rational sign = 1;
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = -1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            out += parse_term() * sign;
        }
        return out;
    }

private:
    SigmaPoly parse_term() {
        SigmaPoly acc = parse_factor();
        while (true) {
            skip_ws();
            if (at_end() || peek() != '*') break;
            ++pos_;
            skip_ws();
            acc = acc * parse_factor();
        }
        return acc;
    }

    SigmaPoly parse_factor() {
        if (at_end()) fail("expected a factor");
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const auto start = pos_;
            while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
            return SigmaPoly::constant(parse_rational(std::string(s_.substr(start, pos_ - start))));
        }
        unsigned t = 0;
        if (s_.substr(pos_, 2) == "tr") {
            t = 1;
            pos_ += 2;
        } else if (peek() == 's') {
            ++pos_;
            t = parse_unsigned();
            if (t == 0) fail("s0 is the unit; write 1");
        } else {
            fail("expected 'tr', 's<t>' or a rational");
        }
        skip_ws();
        if (at_end() || peek() != '[') fail("expected '['");
        const auto close = s_.find(']', pos_);
        if (close == std::string_view::npos) fail("unterminated word");
        const Word w = parse_word(s_.substr(pos_, close - pos_ + 1), alphabet_, extend_);
        pos_ = close + 1;
        unsigned e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            e = parse_unsigned();
        }
        return normalize_word(t, w).pow(e);
    }

    unsigned parse_unsigned() {
        const auto start = pos_;
        unsigned long long v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<unsigned>(peek() - '0');
            if (v > 1'000'000) fail("integer too large");
            ++pos_;
        }
        if (pos_ == start) fail("expected an integer");
        return static_cast<unsigned>(v);
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("sigma polynomial: " + what + " at offset " + std::to_string(pos_) +
                                    " in '" + std::string(s_) + "'");
    }

    std::string_view s_;
    Alphabet& alphabet_;
    bool extend_;
    std::size_t pos_ = 0;
};

}  // namespace

SigmaPoly parse_sigma_poly(std::string_view text, Alphabet& a, bool extend) {
    return PolyParser(text, a, extend).parse();
}

nlohmann::json to_json(const SigmaPoly& p, const Alphabet& a) {
    auto terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        auto factors = nlohmann::json::array();
        for (std::size_t i = 0; i < m.size();) {
            std::size_t j = i;
            while (j < m.size() && m[j] == m[i]) ++j;
            factors.push_back({{"t", m[i].t}, {"word", letters_to_string(m[i].cycle, a)}, {"exp", j - i}});
            i = j;
        }
        terms.push_back({{"coeff", to_string(c)}, {"monomial", std::move(factors)}});
    }
    return {{"terms", std::move(terms)}};
}

SigmaPoly sigma_poly_from_json(const nlohmann::json& j, Alphabet& a, bool extend) {
    SigmaPoly out;
    for (const auto& term : j.at("terms")) {
        SigmaPoly prod = SigmaPoly::constant(parse_rational(term.at("coeff").get<std::string>()));
        for (const auto& f : term.at("monomial")) {
            const auto t = f.at("t").get<unsigned>();
            const auto w = parse_word(f.at("word").get<std::string>(), a, extend);
            prod = prod * normalize_word(t, w).pow(f.at("exp").get<unsigned>());
        }
        out += prod;
    }
    return out;
}

}  // namespace sigmainv
