#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "sigmainv/matrix_eval.hpp"
#include "sigmainv/sigma_ring.hpp"
#include "sigmainv/sigma_tr.hpp"

using namespace sigmainv;

namespace {

// Fraction-free (Bareiss) elimination over Z, used as the determinant oracle.
Rational bareiss_det(Matrix<Rational> a) {
    const auto n = a.rows();
    Rational sign = 1, prev = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            Eigen::Index p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.row(p).swap(a.row(k));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Rational binomial(unsigned n, unsigned k) {
    Rational b = 1;
    for (unsigned i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

Matrix<Rational> power(const Matrix<Rational>& x, unsigned l) {
    Matrix<Rational> out = x;
    for (unsigned k = 1; k < l; ++k) out = out * x;
    return out;
}

}  // namespace

TEST_CASE("sigma_t of a matrix") {
    const auto x = random_matrix(4, 3);
    CHECK(sigma_t_matrix(x, 0) == 1);
    CHECK(sigma_t_matrix(x, 1) == x.trace());
    CHECK(sigma_t_matrix(x, 4) == bareiss_det(x));
    CHECK(sigma_t_matrix(x, 5) == 0);
    for (unsigned n = 1; n <= 5; ++n) {
        const auto e = identity_matrix<Rational>(n, Rational(0));
        for (unsigned t = 0; t <= n; ++t) CHECK(sigma_t_matrix(e, t) == binomial(n, t));
    }
}

TEST_CASE("det(X + lambda E) expands into the sigma_t") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const auto x = random_matrix(4, seed);
        for (const Rational lambda : {Rational(-3), Rational(2, 7), Rational(5)}) {
            const Matrix<Rational> shifted = x + lambda * identity_matrix<Rational>(4, Rational(0));
            Rational sum = 0, lp = 1;
            for (int t = 4; t >= 0; --t) {
                sum += lp * sigma_t_matrix(x, static_cast<unsigned>(t));
                lp *= lambda;
            }
            CHECK(bareiss_det(shifted) == sum);
            CHECK(determinant(shifted) == sum);
        }
    }
}

TEST_CASE("word evaluation") {
    const auto x = random_matrix(3, 1), y = random_matrix(3, 2);
    const MatrixAssignment<Rational> a{{1, x}, {2, y}};
    Alphabet al = Alphabet::xyz(2, 0, 0);
    CHECK(eval_word(parse_word("[x1 x1']", al), a) == Matrix<Rational>(x * x.transpose()));
    CHECK(eval_word(parse_word("[x2]", al), a) == y);
    CHECK_THROWS_AS(eval_word(parse_word("[g3]", al), a), std::out_of_range);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto w = testing_helpers::random_word(rng, 2, 6);
        const Rational tr = eval_word(w, a).trace();
        for (std::size_t k = 0; k < w.size(); ++k) {
            CHECK(eval_word(w.rotate(k), a).trace() == tr);
            CHECK(eval_word(w.transpose().rotate(k), a).trace() == tr);
        }
        CHECK(eval_poly(SigmaPoly::generator(SigmaGenerator(1, canonicalize(w).cycle)), 3, a) ==
              eval_word(canonicalize(w).cycle.word(), a).trace());
    }
}

TEST_CASE("polynomial evaluation") {
    const MatrixAssignment<Rational> a{{1, random_matrix(4, 7)}, {2, random_matrix(4, 8)}};
    CHECK(eval_poly(SigmaPoly::one(), 4, a) == 1);
    CHECK(eval_poly(SigmaPoly(), 4, a) == 0);
    const Summand sum[] = {{1, Word{Letter{1, false}}}, {1, Word{Letter{2, false}}}};
    const Matrix<Rational> s = a.at(1) + a.at(2);
    CHECK(eval_poly(amitsur_expand(2, sum), 4, a) == sigma_t_matrix(s, 2));
    CHECK_THROWS_AS(eval_poly(SigmaPoly::one(), 3, a), std::invalid_argument);

    // sigma_{1,1}(x1, x2, x2') vanishes on 2 x 2 matrices
    Alphabet al = Alphabet::xyz(2, 0, 0);
    const auto p = sigma_tr_subst(1, 1, parse_lincomb("[x1]", al), parse_lincomb("[x2]", al),
                                  parse_lincomb("[x2']", al));
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        CHECK(eval_poly(p, 2, MatrixAssignment<Rational>{{1, random_matrix(2, 2 * seed)},
                                                         {2, random_matrix(2, 2 * seed + 1)}}) == 0);
    }
}

TEST_CASE("power formula on matrices") {
    for (unsigned n = 1; n <= 6; ++n) {
        const auto x = random_matrix(n, 40 + n, 4);
        for (unsigned t = 1; t <= 6; ++t) {
            for (unsigned l = 2; t * l <= 6; ++l) {
                CAPTURE(n);
                CAPTURE(t);
                CAPTURE(l);
                CHECK(eval_poly(power_reduce(t, l), n, MatrixAssignment<Rational>{{1, x}}) ==
                      sigma_t_matrix(power(x, l), t));
            }
        }
    }
}

TEST_CASE("seeded random matrices") {
    CHECK(random_matrix(3, 9) == random_matrix(3, 9));
    CHECK(random_matrix(3, 9) != random_matrix(3, 10));
    const auto s = random_symmetric_matrix(4, 2);
    CHECK(s == Matrix<Rational>(s.transpose()));
    CHECK(s == Matrix<Rational>(random_matrix(4, 2) + random_matrix(4, 2).transpose()));
    const auto m = random_matrix(5, 1, 3);
    for (Eigen::Index i = 0; i < 25; ++i) CHECK(abs(m(i / 5, i % 5)) <= 3);
}

TEST_CASE("prime fields") {
    CHECK_THROWS_AS(parse_field("fp:2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_field("fp:9"), std::invalid_argument);
    CHECK(parse_field("fp:7").p == 7);
    CHECK(parse_field("Q").is_q());
    const Fp a(3, 7), b(5, 7);
    CHECK((a * b).value() == 1);
    CHECK((a / b).value() == 2);
    CHECK((a * a.inverse()).value() == 1);
    CHECK(Fp::from_rational(Rational(1, 2), 5).value() == 3);
    CHECK_THROWS(Fp::from_rational(Rational(1, 5), 5));

    for (std::uint64_t p : {5, 7}) {
        const auto x = random_matrix(4, 12), y = random_matrix(4, 13);
        const MatrixAssignment<Rational> q{{1, x}, {2, y}};
        Alphabet al = Alphabet::xyz(2, 0, 0);
        const auto poly = normalize(3, parse_lincomb("[x1] + [x2 x1']", al));
        const Rational exact = eval_poly(poly, 4, q);
        CHECK(eval_poly(poly, 4, reduce_mod(q, p)) == Fp::from_rational(exact, p));
        CHECK(determinant(reduce_mod(x, p)) == Fp::from_rational(bareiss_det(x), p));
    }
}

TEST_CASE("generic matrices") {
    const auto g = generic_matrix(2, 0);
    CHECK(to_string(determinant(g)) == to_string(CommPoly::variable(0) * CommPoly::variable(3) -
                                                 CommPoly::variable(1) * CommPoly::variable(2)));
    CHECK(sigma_t_matrix(g, 2) == determinant(g));
    const std::vector<Rational> point{2, 3, 5, 7};
    CHECK(determinant(g).evaluate(point) == 2 * 7 - 3 * 5);
}

TEST_CASE("matrix JSON") {
    const auto m = random_matrix(3, 4);
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
    FieldSpec f;
    const auto j = nlohmann::json::parse(R"({"field":"Fp","p":5,"entries":[[1,"2"],[3,4]]})");
    CHECK(matrix_from_json(j, &f)(0, 1) == 2);
    CHECK(f.p == 5);
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"entries":[[1,2],[3]]})")), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"field":"Fp","p":2,"entries":[[1]]})")),
                    std::invalid_argument);
}
