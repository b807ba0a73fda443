#pragma once

// Exact scalar types shared by the symbolic and the matrix layers.
//
// Rational is the ground-truth field (GMP-backed). Fp is a prime field whose
// modulus travels with each element, so one evaluation can run over F_5 and
// the next over F_7 without global state.

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace sigmainv {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses "p/q" or "p" (optional sign). Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Element of F_p for an odd prime p.
///
/// A default-constructed or integer-constructed value has no modulus yet
/// (a "literal"); it adopts the modulus of the first modular operand it meets.
/// Eigen creates such literals for Scalar(0) and Scalar(1).
class Fp {
public:
    Fp() = default;
    Fp(int literal) : literal_(literal) {}  // NOLINT: implicit, Eigen needs it
    Fp(std::int64_t value, std::uint64_t modulus);

    static Fp from_rational(const Rational& q, std::uint64_t modulus);

    std::uint64_t modulus() const { return modulus_; }
    /// Representative in [0, p). Requires a modulus.
    std::uint64_t value() const;
    bool is_literal() const { return modulus_ == 0; }

    Fp inverse() const;

    Fp& operator+=(const Fp& o);
    Fp& operator-=(const Fp& o);
    Fp& operator*=(const Fp& o);
    Fp& operator/=(const Fp& o);
    Fp operator-() const;

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b);
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const Fp& a);
    friend std::string to_string(const Fp& a);

private:
    static std::uint64_t common_modulus(const Fp& a, const Fp& b);
    std::uint64_t residue(std::uint64_t modulus) const;

    std::uint64_t value_ = 0;
    std::uint64_t modulus_ = 0;
    std::int64_t literal_ = 0;
};

/// Throws unless p is an odd prime (the orthogonal-group theory needs char != 2).
void require_odd_prime(std::uint64_t p);

/// Whether division by nonzero elements is available (enables elimination).
template <class Scalar>
inline constexpr bool is_field_v = std::is_same_v<Scalar, Rational> || std::is_same_v<Scalar, Fp>;

/// Maps a rational coefficient into the scalar ring of `like` (which supplies
/// the modulus for Fp).
template <class Scalar>
Scalar scalar_from_rational(const Rational& q, const Scalar& like);

template <>
inline Rational scalar_from_rational<Rational>(const Rational& q, const Rational&) {
    return q;
}

template <>
inline Fp scalar_from_rational<Fp>(const Rational& q, const Fp& like) {
    if (like.is_literal()) {
        throw std::logic_error("scalar_from_rational: Fp element without modulus");
    }
    return Fp::from_rational(q, like.modulus());
}

std::string to_string(const Fp& a);

}  // namespace sigmainv

namespace Eigen {

template <>
struct NumTraits<sigmainv::Fp> : GenericNumTraits<sigmainv::Fp> {
    using Real = sigmainv::Fp;
    using NonInteger = sigmainv::Fp;
    using Nested = sigmainv::Fp;
    using Literal = sigmainv::Fp;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 4
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
