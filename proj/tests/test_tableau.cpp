#include "doctest.h"

#include <numeric>
#include <random>

#include "sigmainv/sigma_tr.hpp"
#include "sigmainv/tableau.hpp"

using namespace sigmainv;

namespace {

std::vector<Matrix<Rational>> matrices(unsigned n, unsigned count, std::uint64_t seed) {
    std::vector<Matrix<Rational>> out;
    for (unsigned k = 0; k < count; ++k) out.push_back(random_matrix(n, seed * 31 + k, 5));
    return out;
}

MatrixAssignment<Rational> as_assignment(const std::vector<Matrix<Rational>>& m) {
    MatrixAssignment<Rational> a;
    for (std::size_t k = 0; k < m.size(); ++k) a.emplace(static_cast<std::uint32_t>(k + 1), m[k]);
    return a;
}

// Coefficients c_0..c_deg of a polynomial in lambda from its values at 0..deg.
std::vector<Rational> interpolate(const std::vector<Rational>& values) {
    const auto m = values.size();
    std::vector<Rational> coeffs(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        // basis polynomial prod_{k != i} (lambda - k) / (i - k)
        std::vector<Rational> basis{Rational(1)};
        Rational denom = 1;
        for (std::size_t k = 0; k < m; ++k) {
            if (k == i) continue;
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (std::size_t e = 0; e < basis.size(); ++e) {
                next[e + 1] += basis[e];
                next[e] -= basis[e] * static_cast<long>(k);
            }
            basis = std::move(next);
            denom *= static_cast<long>(i) - static_cast<long>(k);
        }
        for (std::size_t e = 0; e < m; ++e) coeffs[e] += values[i] * basis[e] / denom;
    }
    return coeffs;
}

const std::vector<std::pair<unsigned, unsigned>> kShapes{{1, 0}, {2, 0}, {0, 1}, {1, 1}, {3, 0}, {2, 1},
                                                         {0, 2}, {3, 1}, {1, 2}, {5, 0}};

}  // namespace

TEST_CASE("tableau builders") {
    const auto t = build_T(1, 1);
    CHECK(t.n() == 3);
    REQUIRE(t.arrows().size() == 3);
    CHECK(t.arrows()[0] == TableauArrow{{1, 1}, {2, 1}, 1});
    CHECK(t.arrows()[1] == TableauArrow{{1, 2}, {1, 3}, 2});
    CHECK(t.arrows()[2] == TableauArrow{{2, 2}, {2, 3}, 3});
    CHECK(t.kind(1) == ArrowKind::x);
    CHECK(t.count_kind(ArrowKind::y) == 1);

    const auto h = build_T(4, 0);
    CHECK(h.arrows().size() == 4);
    for (const auto& a : h.arrows()) CHECK(a.tail.col != a.head.col);
    CHECK(h.label_symmetry() == 24);
    CHECK(build_T_multilinear(2, 1).label_symmetry() == 1);
    CHECK(build_T_multilinear(2, 1).label_count() == 4);

    // every cell covered exactly once
    CHECK_THROWS_AS(Tableau(2, {{{1, 1}, {2, 1}, 1}, {{1, 1}, {2, 2}, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Tableau(2, {{{1, 1}, {2, 1}, 1}}), std::invalid_argument);
}

TEST_CASE("closed paths of the fragment a, b, c") {
    // a horizontal in row 1, b from (1,3) to (2,2), c from (2,3) to (1,2)
    const Tableau t(3, {{{1, 1}, {2, 1}, 1}, {{1, 3}, {2, 2}, 2}, {{2, 3}, {1, 2}, 3}});
    const std::vector<unsigned> id{0, 1, 2};
    const auto paths = closed_paths(t, id);
    REQUIRE(paths.size() == 2);
    std::vector<std::string> words;
    const Alphabet al({"a", "b", "c"});
    for (const auto& p : paths) words.push_back(to_string(canonicalize(phi_word(t, p)).cycle.word(), al));
    std::sort(words.begin(), words.end());
    CHECK(words == std::vector<std::string>{"[a]", "[b c']"});
}

TEST_CASE("closed paths cover every arrow once") {
    const auto t = build_T(3, 0);
    CHECK(closed_paths(t, {0, 1, 2}).size() == 3);
    std::mt19937_64 rng(8);
    for (const auto& [tt, r] : kShapes) {
        const auto tab = build_T(tt, r);
        std::vector<unsigned> tau(tab.n());
        std::iota(tau.begin(), tau.end(), 0u);
        for (int trial = 0; trial < 5; ++trial) {
            std::shuffle(tau.begin(), tau.end(), rng);
            std::size_t total = 0;
            std::vector<int> seen(tab.arrows().size(), 0);
            for (const auto& p : closed_paths(tab, tau)) {
                total += p.size();
                for (const auto& s : p) ++seen[s.arrow];
            }
            CHECK(total == tab.n());
            for (int s : seen) CHECK(s == 1);
        }
    }
}

TEST_CASE("per-path sign rules") {
    const auto t = build_T(1, 1);
    const Letter x{1, false}, y{2, false}, z{3, false};
    CHECK(sign_by_rules(t, Word{y, z}) == -1);
    CHECK(sign_by_rules(t, Word{y, z.transpose()}) == 1);
    CHECK(sign_by_rules(t, Word{x}) == 1);
    const auto h = build_T(3, 0);
    CHECK(sign_by_rules(h, Word{x, x}) == -1);
    CHECK(sign_by_rules(h, Word{x, x, x}) == 1);
    const auto big = build_T(2, 2);
    for (const Word& w : {Word{x, y, z}, Word{x, y.transpose(), z}, Word{y, z, y, z.transpose()}}) {
        CHECK(sign_by_rules(big, w) == sign_by_rules(big, w.transpose()));
    }
}

TEST_CASE("decomposition reproduces sigma_{t,r} with consistent signs") {
    for (const auto& [t, r] : kShapes) {
        CAPTURE(t);
        CAPTURE(r);
        const auto rep = decompose_checked(build_T(t, r));
        CHECK(rep.consistent());
        CHECK(rep.admissible_pairs > 0);
        CHECK(rep.poly == sigma_tr(t, r));
    }
    CHECK(to_string(decompose(build_T(1, 0)), Alphabet::xyz()) == "tr[x]");
    for (const auto& [t, r] : {std::pair{1u, 1u}, {2u, 1u}, {0u, 2u}}) {
        const auto rep = decompose_checked(build_T_multilinear(t, r));
        CHECK(rep.consistent());
        CHECK(rep.poly == sigma_lin(t, r));
    }
    CHECK_THROWS_AS(decompose(build_T(7, 0)), std::length_error);
}

TEST_CASE("bpf against determinants and sigma_{t,r}") {
    for (unsigned n = 1; n <= 4; ++n) {
        const auto x = random_matrix(n, 50 + n);
        CHECK(bpf(build_T(n, 0), std::vector<Matrix<Rational>>{x}) == determinant(x));
        CHECK(dp(0, x, x, x) == determinant(x));
    }
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        for (const auto& [t, r] : kShapes) {
            if (t + 2 * r > 5) continue;
            const auto tab = build_T(t, r);
            const auto m = matrices(tab.n(), 3, seed);
            const Rational value = bpf(tab, m);
            CHECK(value == bpf_q_form(tab, m));
            CHECK(value == eval_poly(sigma_tr(t, r), tab.n(), as_assignment(m)));
            CHECK(value == eval_poly(decompose(tab), tab.n(), as_assignment(m)));
            const auto lin_tab = build_T_multilinear(t, r);
            const auto ml = matrices(tab.n(), lin_tab.label_count(), seed + 7);
            CHECK(bpf(lin_tab, ml) == eval_poly(sigma_lin(t, r), tab.n(), as_assignment(ml)));
            CHECK(bpf(lin_tab, ml) == bpf_q_form(lin_tab, ml));
        }
    }
}

TEST_CASE("DP on 2 x 2 matrices") {
    const auto m = matrices(2, 3, 4);
    const Rational expected = -Matrix<Rational>(m[1] * m[2]).trace() + Matrix<Rational>(m[1] * m[2].transpose()).trace();
    CHECK(dp(1, m[0], m[1], m[2]) == expected);
    CHECK_THROWS_AS(dp(2, m[0], m[1], m[2]), std::invalid_argument);
}

TEST_CASE("lambda expansion of DP(X + lambda E, Y, Z)") {
    const unsigned n = 4, r = 1;
    const auto m = matrices(n, 3, 9);
    const auto e = identity_matrix<Rational>(n, Rational(0));
    std::vector<Rational> values;
    for (unsigned lambda = 0; lambda <= n - 2 * r; ++lambda) {
        values.push_back(dp(r, Matrix<Rational>(m[0] + Rational(lambda) * e), m[1], m[2]));
    }
    const auto coeffs = interpolate(values);
    for (unsigned i = 0; i <= n - 2 * r; ++i) {
        CHECK(coeffs[i] == eval_poly(sigma_tr(n - 2 * r - i, r), n, as_assignment(m)));
    }
}
