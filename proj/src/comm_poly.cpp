#include "sigmainv/comm_poly.hpp"

#include <algorithm>

namespace sigmainv {

CommPoly::CommPoly(int c) { add_term({}, c); }

CommPoly CommPoly::constant(const Rational& c) {
    CommPoly p;
    p.add_term({}, c);
    return p;
}

CommPoly CommPoly::variable(std::size_t k) {
    CommPoly p;
    Exponents e(k + 1, 0);
    e[k] = 1;
    p.add_term(e, 1);
    return p;
}

void CommPoly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

CommPoly& CommPoly::operator*=(const CommPoly& o) { return *this = *this * o; }

CommPoly CommPoly::operator-() const {
    CommPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    CommPoly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            CommPoly::Exponents e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Rational CommPoly::evaluate(const std::vector<Rational>& point) const {
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t k = 0; k < e.size(); ++k) {
            for (unsigned i = 0; i < e[k]; ++i) term *= point.at(k);
        }
        total += term;
    }
    return total;
}

std::string to_string(const CommPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
        first = false;
        std::vector<std::string> factors;
        bool constant = std::all_of(e.begin(), e.end(), [](auto v) { return v == 0; });
        if (constant || mag != 1) factors.push_back(to_string(mag));
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            factors.push_back("v" + std::to_string(k) + (e[k] > 1 ? "^" + std::to_string(e[k]) : ""));
        }
        for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "*" : "") + factors[i];
    }
    return out;
}

}  // namespace sigmainv
