#include "doctest.h"

#include <random>
#include <thread>

#include "helpers.hpp"
#include "sigmainv/comm_poly.hpp"
#include "sigmainv/matrix_eval.hpp"
#include "sigmainv/sigma_ring.hpp"

using namespace sigmainv;

namespace {

SigmaPoly parse(const std::string& text, Alphabet& a) { return parse_sigma_poly(text, a); }

SigmaPoly random_poly(std::mt19937_64& rng, unsigned d) {
    std::uniform_int_distribution<int> coeff(-4, 4), terms(1, 4), factors(0, 2), t(1, 3);
    SigmaPoly p;
    for (int k = terms(rng); k > 0; --k) {
        SigmaPoly m = SigmaPoly::constant(coeff(rng));
        for (int f = factors(rng); f > 0; --f) {
            const auto w = testing_helpers::random_word(rng, d, 3);
            m = m * SigmaPoly::generator(SigmaGenerator(t(rng), canonicalize(w).cycle));
        }
        p += m;
    }
    return p;
}

// e_t(y^l) in e_1..e_{tl} via Newton's identities; e_k is variable k-1.
CommPoly newton_power_oracle(unsigned t, unsigned l) {
    const unsigned top = t * l;
    std::vector<CommPoly> e(top + 1), p(top + 1);
    e[0] = CommPoly(1);
    for (unsigned k = 1; k <= top; ++k) e[k] = CommPoly::variable(k - 1);
    for (unsigned m = 1; m <= top; ++m) {
        CommPoly acc = CommPoly::constant(Rational(m % 2 == 1 ? 1 : -1) * m) * e[m];
        for (unsigned i = 1; i < m; ++i) acc += CommPoly::constant(i % 2 == 1 ? 1 : -1) * e[i] * p[m - i];
        p[m] = acc;
    }
    std::vector<CommPoly> big(t + 1);
    big[0] = CommPoly(1);
    for (unsigned s = 1; s <= t; ++s) {
        CommPoly acc;
        for (unsigned i = 1; i <= s; ++i) acc += CommPoly::constant(i % 2 == 1 ? 1 : -1) * big[s - i] * p[i * l];
        big[s] = CommPoly::constant(Rational(1, s)) * acc;
    }
    return big[t];
}

CommPoly power_formula_as_poly(const PowerFormula& f) {
    CommPoly out;
    for (const auto& [parts, c] : f.terms) {
        CommPoly m = CommPoly::constant(Rational(c));
        for (auto k : parts) m = m * CommPoly::variable(k - 1);
        out += m;
    }
    return out;
}

}  // namespace

TEST_CASE("Amitsur expansion of small sums") {
    Alphabet a = Alphabet::xyz(2, 0, 0);
    const Summand two[] = {{1, parse_word("[x1]", a)}, {1, parse_word("[x2]", a)}};
    CHECK(to_string(amitsur_expand(2, two), a) == "tr[x1]*tr[x2] - tr[x1 x2] + s2[x1] + s2[x2]");
    CHECK(to_string(amitsur_expand(1, two), a) == "tr[x1] + tr[x2]");
    CHECK(amitsur_expand(2, two) == normalize(2, parse_lincomb("[x1] + [x2]", a)));
}

TEST_CASE("Amitsur expansion of s3 agrees with evaluation on 4x4 matrices") {
    Alphabet a = Alphabet::xyz(2, 0, 0);
    const auto p = normalize(3, parse_lincomb("[x1] + [x2]", a));
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto x1 = random_matrix(4, 100 + seed), x2 = random_matrix(4, 200 + seed);
        const Matrix<Rational> sum = x1 + x2;
        CHECK(eval_poly(p, 4, MatrixAssignment<Rational>{{1, x1}, {2, x2}}) == sigma_t_matrix(sum, 3));
    }
}

TEST_CASE("power formula literals") {
    const Alphabet a({"a"});
    CHECK(to_string(power_reduce(1, 2), a) == "tr[a]^2 - 2*s2[a]");
    CHECK(to_string(power_reduce(1, 3), a) == "tr[a]^3 - 3*tr[a]*s2[a] + 3*s3[a]");
    CHECK(to_string(power_reduce(2, 2), a) == "-2*tr[a]*s3[a] + s2[a]^2 + 2*s4[a]");
}

TEST_CASE("power formula agrees with the Newton identity oracle") {
    for (unsigned t = 1; t <= 4; ++t) {
        for (unsigned l = 2; t * l <= 8; ++l) {
            CAPTURE(t);
            CAPTURE(l);
            CHECK(power_formula_as_poly(power_formula(t, l)) == newton_power_oracle(t, l));
        }
    }
}

TEST_CASE("power formula memo is safe under concurrent readers") {
    std::vector<std::jthread> pool;
    std::vector<std::size_t> sizes(4);
    for (unsigned k = 0; k < 4; ++k) {
        pool.emplace_back([k, &sizes] { sizes[k] = power_formula(3 + k % 2, 3).terms.size(); });
    }
    pool.clear();
    CHECK(sizes[0] == sizes[2]);
    CHECK(sizes[1] == sizes[3]);
    CHECK(sizes[0] == power_formula(3, 3).terms.size());
}

TEST_CASE("normalization rules") {
    Alphabet a = Alphabet::xyz(2, 0, 0);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const auto w = testing_helpers::random_word(rng, 2, 4);
        const unsigned t = 1 + trial % 3;
        const Rational c(trial % 5 - 2, 3);
        if (c == 0) continue;
        Rational ct = 1;
        for (unsigned k = 0; k < t; ++k) ct *= c;
        CHECK(normalize(t, LinComb(w, c)) == normalize(t, LinComb(w)) * ct);
        LinComb arg(w);
        arg += LinComb(testing_helpers::random_word(rng, 2, 3), 2);
        CHECK(normalize(t, arg) == normalize(t, involute(arg)));
    }
    // tr of a proper power goes through the power formula
    const auto x1 = parse_word("[x1]", a);
    CHECK(to_string(normalize_word(1, x1.power(2)), a) == "tr[x1]^2 - 2*s2[x1]");
    CHECK(normalize(2, LinComb()).is_zero());
}

TEST_CASE("substitution") {
    Alphabet a = Alphabet::xyz(2, 0, 0);
    Alphabet g({"x"});
    const auto trx = parse("tr[x]", g);
    CHECK(substitute(trx, {{1, parse_lincomb("[x1] + [x1']", a)}}) == parse("2*tr[x1]", a));
    const auto s2x = parse("s2[x]", g);
    CHECK(substitute(s2x, {{1, parse_lincomb("3/2*[x1]", a)}}) == parse("9/4*s2[x1]", a));
    CHECK_THROWS_AS(substitute(parse("tr[x y]", g), {{1, LinComb(parse_word("[x1]", a))}}), std::out_of_range);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = random_poly(rng, 2), q = random_poly(rng, 2), r = random_poly(rng, 2);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p - p).is_zero());
        CHECK(p * SigmaPoly::one() == p);
    }
}

TEST_CASE("printed polynomials reparse to the same value") {
    std::mt19937_64 rng(23);
    Alphabet a = Alphabet::xyz(2, 1, 1);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = random_poly(rng, 4);
        CHECK(parse(to_string(p, a), a) == p);
        CHECK(sigma_poly_from_json(to_json(p, a), a) == p);
    }
    CHECK(to_string(SigmaPoly(), a) == "0");
    CHECK(parse("0", a).is_zero());
    CHECK_THROWS_AS(parse("tr[x1", a), std::invalid_argument);
    CHECK_THROWS_AS(parse("s0[x1]", a), std::invalid_argument);
}

TEST_CASE("complete linearization examples") {
    Alphabet a;
    for (int i = 1; i <= 16; ++i) a.index("x" + std::to_string(i), true);
    CHECK(to_string(lin(parse("s2[x1]", a), 1), a) == "tr[x1]*tr[x2] - tr[x1 x2]");
    CHECK(to_string(lin(parse("s2[x1]", a), 3), a) == "tr[x1]*tr[x4] - tr[x1 x4]");
    CHECK(to_string(lin(parse("tr[x1]^3", a), 2), a) == "6*tr[x1]*tr[x3]*tr[x5]");
    CHECK(lin(parse("tr[x1]", a), 1) == parse("tr[x1]", a));
    CHECK_THROWS_AS(lin(parse("tr[x1] + tr[x1 x1]", a), 1), std::invalid_argument);
}

TEST_CASE("multiplicity statistics") {
    Alphabet a;
    auto stats = [&](const char* text) { return multiplicity_stats(parse(text, a).terms().begin()->first); };
    CHECK(stats("tr[g1]^3").c == 6);
    CHECK(stats("tr[g1]^3").e == 3);
    CHECK(stats("s2[g1]*tr[g2]").c == 1);
    CHECK(stats("s2[g1]*tr[g2]").e == 2);
    CHECK(stats("tr[g1]*tr[g1']").c == 2);
    CHECK(stats("tr[g1]*tr[g1']").e == 2);
}

TEST_CASE("Lin of a product: leading part is +-c_f times glued traces") {
    std::mt19937_64 rng(29);
    const unsigned d = 2;
    for (int trial = 0; trial < 25; ++trial) {
        // f = product of one to three generators, total degree <= 5
        SigmaPoly f = SigmaPoly::one();
        std::vector<std::pair<unsigned, Word>> factors;
        unsigned degree = 0;
        std::uniform_int_distribution<int> count(1, 3), tdist(1, 2);
        for (int k = count(rng); k > 0; --k) {
            const unsigned t = tdist(rng);
            const auto root = canonicalize(testing_helpers::random_word(rng, d, 2)).cycle;
            if (degree + t * root.word().size() > 5) continue;
            degree += t * static_cast<unsigned>(root.word().size());
            factors.emplace_back(t, root.word());
            f = f * SigmaPoly::generator(SigmaGenerator(t, root));
        }
        if (factors.empty()) continue;
        const auto& [mono, coeff] = *f.terms().begin();
        const auto stats = multiplicity_stats(mono);
        const auto l = lin(f, d);
        CAPTURE(to_string(f, Alphabet::generic()));
        CAPTURE(to_string(l, Alphabet::generic()));
        REQUIRE_FALSE(l.is_zero());

        unsigned jsum = 0;
        std::vector<Word> expected;
        for (const auto& [t, w] : factors) {
            jsum += t;
            expected.push_back(canonicalize(w.power(t)).cycle.word().power(canonicalize(w.power(t)).power));
        }
        const Rational lead = Rational(stats.c) * ((jsum - factors.size()) % 2 == 0 ? 1 : -1);
        bool saw_leading = false;
        for (const auto& [m, c] : l.terms()) {
            for (const auto& g : m) CHECK(g.t == 1);
            // every extended letter appears at most once
            MDeg total;
            for (const auto& g : m) total = mdeg_add(total, mdeg(g.cycle));
            for (auto v : total) CHECK(v <= 1);
            CHECK(m.size() >= factors.size());
            const Rational ratio = c / Rational(stats.c);
            CHECK(denominator(ratio) == 1);
            if (m.size() == factors.size()) {
                saw_leading = true;
                // the leading sum may repeat a class product, e.g. Lin(tr[g1 g1']) = 2*tr[g1 g3']
                const Rational k = c / lead;
                CHECK(denominator(k) == 1);
                CHECK(k > 0);
                std::vector<Word> glued;
                for (const auto& g : m) {
                    const auto form = canonicalize(glue(g.cycle, d));
                    glued.push_back(form.cycle.word().power(form.power));
                }
                auto want = expected;
                std::sort(glued.begin(), glued.end());
                std::sort(want.begin(), want.end());
                CHECK(glued == want);
            }
        }
        CHECK(saw_leading);
    }
}
