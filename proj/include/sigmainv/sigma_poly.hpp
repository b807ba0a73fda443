#pragma once

// Sparse commutative polynomials over Q in the symbols s_t(cycle).

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "sigmainv/scalar.hpp"
#include "sigmainv/word.hpp"

namespace sigmainv {

/// s_t(cycle) with t >= 1 and cycle a canonical primitive word.
struct SigmaGenerator {
    unsigned t = 1;
    Word cycle;

    SigmaGenerator(unsigned t, const CanonicalCycle& c);

    unsigned degree() const { return t * static_cast<unsigned>(cycle.size()); }
    MDeg mdeg() const;

    friend bool operator==(const SigmaGenerator&, const SigmaGenerator&) = default;
    friend std::strong_ordering operator<=>(const SigmaGenerator& a, const SigmaGenerator& b);

private:
    friend class SigmaPoly;
    SigmaGenerator(unsigned t, Word w) : t(t), cycle(std::move(w)) {}
};

/// Sorted multiset of generators; the empty monomial is the unit.
using Monomial = std::vector<SigmaGenerator>;

unsigned degree(const Monomial& m);
MDeg mdeg(const Monomial& m);

/// Printing order: total degree ascending, then more factors first, then
/// lexicographic on the sorted factor lists.
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Componentwise a <= b (missing entries are zero).
bool mdeg_leq(const MDeg& a, const MDeg& b);
bool mdeg_equal(const MDeg& a, const MDeg& b);
MDeg mdeg_add(const MDeg& a, const MDeg& b);
MDeg mdeg_scale(const MDeg& a, unsigned k);

class SigmaPoly {
public:
    using Terms = std::map<Monomial, Rational, MonomialLess>;

    SigmaPoly() = default;
    static SigmaPoly constant(const Rational& c);
    static SigmaPoly one() { return constant(1); }
    static SigmaPoly generator(const SigmaGenerator& g);
    static SigmaPoly monomial(Monomial m, const Rational& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(Monomial m, const Rational& c);

    SigmaPoly& operator+=(const SigmaPoly& o);
    SigmaPoly& operator-=(const SigmaPoly& o);
    SigmaPoly& operator*=(const Rational& c);
    SigmaPoly operator-() const;

    friend SigmaPoly operator+(SigmaPoly a, const SigmaPoly& b) { return a += b; }
    friend SigmaPoly operator-(SigmaPoly a, const SigmaPoly& b) { return a -= b; }
    friend SigmaPoly operator*(SigmaPoly a, const Rational& c) { return a *= c; }
    friend SigmaPoly operator*(const Rational& c, SigmaPoly a) { return a *= c; }
    friend SigmaPoly operator*(const SigmaPoly& a, const SigmaPoly& b);
    friend bool operator==(const SigmaPoly& a, const SigmaPoly& b) { return a.terms_ == b.terms_; }

    /// Product keeping only monomials whose multidegree stays within `cap`.
    static SigmaPoly multiply_capped(const SigmaPoly& a, const SigmaPoly& b, const MDeg& cap);
    SigmaPoly pow(unsigned e) const;

    /// Every monomial has the same multidegree.
    std::optional<MDeg> homogeneous_mdeg() const;
    /// Largest letter index appearing.
    std::uint32_t max_letter() const;

    /// Applies a function to every term; zero results are dropped.
    SigmaPoly filter(const std::function<bool(const Monomial&)>& keep) const;

private:
    Terms terms_;
};

/// The part of `p` of multidegree exactly `target`.
SigmaPoly homogeneous_component(const SigmaPoly& p, const MDeg& target);

/// Canonical text "c*s<t>[word]^e*tr[word] - ...", with s1 printed as tr.
std::string to_string(const SigmaPoly& p, const Alphabet& a);

/// Parses the canonical text. Words need not be canonical or primitive: each
/// s_t[w] is normalized into the ring.
SigmaPoly parse_sigma_poly(std::string_view text, Alphabet& a, bool extend = true);

nlohmann::json to_json(const SigmaPoly& p, const Alphabet& a);
SigmaPoly sigma_poly_from_json(const nlohmann::json& j, Alphabet& a, bool extend = true);

}  // namespace sigmainv
