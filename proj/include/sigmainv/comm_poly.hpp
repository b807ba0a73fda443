#pragma once

// Commutative polynomials over Q in numbered variables. Entries of generic
// matrices for the exact verification mode.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sigmainv/scalar.hpp"

namespace sigmainv {

class CommPoly {
public:
    /// Exponent of variable k at position k; no trailing zeros.
    using Exponents = std::vector<std::uint16_t>;
    using Terms = std::map<Exponents, Rational>;

    CommPoly() = default;
    CommPoly(int c);  // NOLINT: implicit, Eigen needs it
    static CommPoly constant(const Rational& c);
    static CommPoly variable(std::size_t k);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    CommPoly& operator+=(const CommPoly& o);
    CommPoly& operator-=(const CommPoly& o);
    CommPoly& operator*=(const CommPoly& o);
    CommPoly operator-() const;

    friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
    friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
    friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
    friend bool operator==(const CommPoly& a, const CommPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const CommPoly& a, const CommPoly& b) { return !(a == b); }

    Rational evaluate(const std::vector<Rational>& point) const;

private:
    void add_term(const Exponents& e, const Rational& c);
    Terms terms_;
};

/// "3*v0^2*v3 - 1/2*v1"
std::string to_string(const CommPoly& p);

template <>
inline CommPoly scalar_from_rational<CommPoly>(const Rational& q, const CommPoly&) {
    return CommPoly::constant(q);
}

}  // namespace sigmainv

namespace Eigen {

template <>
struct NumTraits<sigmainv::CommPoly> : GenericNumTraits<sigmainv::CommPoly> {
    using Real = sigmainv::CommPoly;
    using NonInteger = sigmainv::CommPoly;
    using Nested = sigmainv::CommPoly;
    using Literal = sigmainv::CommPoly;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 8,
        MulCost = 64
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
