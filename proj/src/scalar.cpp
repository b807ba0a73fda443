#include "sigmainv/scalar.hpp"

#include <cctype>

namespace sigmainv {

Rational parse_rational(const std::string& text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    const std::string s = text.substr(begin, end - begin);
    if (s.empty()) throw std::invalid_argument("empty rational");

    auto valid_integer = [](const std::string& part, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        }
        return true;
    };

    const auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_integer(num, true) || !valid_integer(den, false)) {
        throw std::invalid_argument("malformed rational '" + s + "'");
    }
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    Integer n(num);
    Integer d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    return Rational(n, d);
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t reduce_signed(std::int64_t v, std::uint64_t m) {
    const auto sm = static_cast<std::int64_t>(m);
    std::int64_t r = v % sm;
    if (r < 0) r += sm;
    return static_cast<std::uint64_t>(r);
}

}  // namespace

void require_odd_prime(std::uint64_t p) {
    if (p == 2) {
        throw std::invalid_argument(
            "characteristic 2 is not supported: orthogonal invariants need char F != 2");
    }
    if (p < 3) throw std::invalid_argument("modulus must be an odd prime");
    for (std::uint64_t k = 2; k * k <= p; ++k) {
        if (p % k == 0) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    }
    if (p > (std::uint64_t{1} << 62)) throw std::invalid_argument("modulus too large");
}

Fp::Fp(std::int64_t value, std::uint64_t modulus) : modulus_(modulus) {
    if (modulus == 0) throw std::invalid_argument("Fp: zero modulus");
    value_ = reduce_signed(value, modulus);
}

Fp Fp::from_rational(const Rational& q, std::uint64_t modulus) {
    const Integer m(modulus);
    Integer num = numerator(q) % m;
    Integer den = denominator(q) % m;
    if (num < 0) num += m;
    if (den == 0) {
        throw std::domain_error("denominator of " + to_string(q) + " vanishes mod " +
                                std::to_string(modulus));
    }
    Fp n(static_cast<std::int64_t>(num.convert_to<long long>()), modulus);
    Fp d(static_cast<std::int64_t>(den.convert_to<long long>()), modulus);
    return n / d;
}

std::uint64_t Fp::common_modulus(const Fp& a, const Fp& b) {
    if (a.modulus_ != 0 && b.modulus_ != 0 && a.modulus_ != b.modulus_) {
        throw std::logic_error("Fp: mixing moduli " + std::to_string(a.modulus_) + " and " +
                               std::to_string(b.modulus_));
    }
    return a.modulus_ != 0 ? a.modulus_ : b.modulus_;
}

std::uint64_t Fp::residue(std::uint64_t modulus) const {
    return modulus_ != 0 ? value_ : reduce_signed(literal_, modulus);
}

std::uint64_t Fp::value() const {
    if (modulus_ == 0) throw std::logic_error("Fp: literal has no residue");
    return value_;
}

Fp& Fp::operator+=(const Fp& o) {
    const auto m = common_modulus(*this, o);
    if (m == 0) {
        literal_ += o.literal_;
        return *this;
    }
    const auto a = residue(m);
    const auto b = o.residue(m);
    value_ = a >= m - b ? a - (m - b) : a + b;
    modulus_ = m;
    return *this;
}

Fp& Fp::operator-=(const Fp& o) { return *this += -o; }

Fp& Fp::operator*=(const Fp& o) {
    const auto m = common_modulus(*this, o);
    if (m == 0) {
        literal_ *= o.literal_;
        return *this;
    }
    value_ = mul_mod(residue(m), o.residue(m), m);
    modulus_ = m;
    return *this;
}

Fp Fp::inverse() const {
    if (modulus_ == 0) {
        if (literal_ == 1 || literal_ == -1) return *this;
        throw std::logic_error("Fp: cannot invert a literal without modulus");
    }
    if (value_ == 0) throw std::domain_error("Fp: division by zero");
    // Fermat: a^(p-2)
    std::uint64_t result = 1;
    std::uint64_t base = value_;
    std::uint64_t e = modulus_ - 2;
    while (e > 0) {
        if (e & 1U) result = mul_mod(result, base, modulus_);
        base = mul_mod(base, base, modulus_);
        e >>= 1U;
    }
    Fp r;
    r.value_ = result;
    r.modulus_ = modulus_;
    return r;
}

Fp& Fp::operator/=(const Fp& o) {
    const auto m = common_modulus(*this, o);
    if (m == 0) return *this *= o.inverse();
    Fp divisor = o;
    if (divisor.modulus_ == 0) divisor = Fp(o.literal_, m);
    return *this *= divisor.inverse();
}

Fp Fp::operator-() const {
    Fp r = *this;
    if (modulus_ == 0) {
        r.literal_ = -literal_;
    } else if (value_ != 0) {
        r.value_ = modulus_ - value_;
    }
    return r;
}

bool operator==(const Fp& a, const Fp& b) {
    const auto m = Fp::common_modulus(a, b);
    if (m == 0) return a.literal_ == b.literal_;
    return a.residue(m) == b.residue(m);
}

std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << to_string(a); }

std::string to_string(const Fp& a) {
    if (a.is_literal()) return "lit(" + std::to_string(a.literal_) + ")";
    return std::to_string(a.value());
}

}  // namespace sigmainv
