#pragma once

// Exact evaluation of words and sigma polynomials on concrete matrices.
//
// Everything is templated on the scalar: Rational, Fp or CommPoly. Fields
// use Gaussian elimination for minors; CommPoly (a ring) uses cofactor
// expansion.

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "json.hpp"

#include "sigmainv/comm_poly.hpp"
#include "sigmainv/scalar.hpp"
#include "sigmainv/sigma_poly.hpp"
#include "sigmainv/word.hpp"

namespace sigmainv {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Letter index to matrix; transposed letters use the transpose.
template <class Scalar>
using MatrixAssignment = std::map<std::uint32_t, Matrix<Scalar>>;

template <class Scalar>
Matrix<Scalar> identity_matrix(Eigen::Index n, const Scalar& like) {
    Matrix<Scalar> e(n, n);
    const Scalar zero = scalar_from_rational<Scalar>(0, like);
    const Scalar one = scalar_from_rational<Scalar>(1, like);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) e(i, j) = i == j ? one : zero;
    }
    return e;
}

namespace detail {

template <class Scalar>
Scalar cofactor_det(const Matrix<Scalar>& a, const Scalar& zero) {
    const auto n = a.rows();
    if (n == 1) return a(0, 0);
    if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    Scalar total = zero;
    for (Eigen::Index c = 0; c < n; ++c) {
        Matrix<Scalar> minor(n - 1, n - 1);
        for (Eigen::Index i = 1; i < n; ++i) {
            for (Eigen::Index j = 0, k = 0; j < n; ++j) {
                if (j != c) minor(i - 1, k++) = a(i, j);
            }
        }
        Scalar term = a(0, c) * cofactor_det(minor, zero);
        total = c % 2 == 0 ? total + term : total - term;
    }
    return total;
}

template <class Scalar>
Scalar elimination_det(Matrix<Scalar> a, const Scalar& zero, const Scalar& one) {
    const auto n = a.rows();
    Scalar det = one;
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = col;
        while (pivot < n && a(pivot, col) == zero) ++pivot;
        if (pivot == n) return zero;
        if (pivot != col) {
            a.row(pivot).swap(a.row(col));
            det = -det;
        }
        const Scalar p = a(col, col);
        det = det * p;
        for (Eigen::Index r = col + 1; r < n; ++r) {
            if (a(r, col) == zero) continue;
            const Scalar f = a(r, col) / p;
            for (Eigen::Index c = col; c < n; ++c) a(r, c) = a(r, c) - f * a(col, c);
        }
    }
    return det;
}

}  // namespace detail

template <class Scalar>
Scalar determinant(const Matrix<Scalar>& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
    if (a.rows() == 0) throw std::invalid_argument("determinant: empty matrix");
    const Scalar zero = scalar_from_rational<Scalar>(0, a(0, 0));
    if constexpr (is_field_v<Scalar>) {
        return detail::elimination_det(a, zero, scalar_from_rational<Scalar>(1, a(0, 0)));
    } else {
        return detail::cofactor_det(a, zero);
    }
}

/// Sum of the principal t x t minors; 1 for t = 0 and 0 for t > n.
template <class Scalar>
Scalar sigma_t_matrix(const Matrix<Scalar>& x, unsigned t) {
    if (x.rows() != x.cols()) throw std::invalid_argument("sigma_t: matrix is not square");
    const auto n = static_cast<unsigned>(x.rows());
    const Scalar& like = x(0, 0);
    if (t == 0) return scalar_from_rational<Scalar>(1, like);
    Scalar total = scalar_from_rational<Scalar>(0, like);
    if (t > n) return total;
    std::vector<Eigen::Index> idx(t);
    for (unsigned i = 0; i < t; ++i) idx[i] = i;
    while (true) {
        Matrix<Scalar> minor(t, t);
        for (unsigned i = 0; i < t; ++i) {
            for (unsigned j = 0; j < t; ++j) minor(i, j) = x(idx[i], idx[j]);
        }
        total = total + determinant(minor);
        // next t-subset in lexicographic order
        int k = static_cast<int>(t) - 1;
        while (k >= 0 && idx[k] == static_cast<Eigen::Index>(n - t + k)) --k;
        if (k < 0) break;
        ++idx[k];
        for (unsigned i = k + 1; i < t; ++i) idx[i] = idx[i - 1] + 1;
    }
    return total;
}

template <class Scalar>
Matrix<Scalar> eval_word(const Word& w, const MatrixAssignment<Scalar>& a) {
    Matrix<Scalar> acc;
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto it = a.find(w[i].index);
        if (it == a.end()) {
            throw std::out_of_range("eval_word: letter g" + std::to_string(w[i].index) + " has no matrix");
        }
        const auto& m = it->second;
        if (m.rows() != m.cols()) throw std::invalid_argument("eval_word: matrix is not square");
        if (i > 0 && m.rows() != acc.rows()) throw std::invalid_argument("eval_word: dimension mismatch");
        if (i == 0) {
            acc = w[i].transposed ? Matrix<Scalar>(m.transpose()) : m;
        } else {
            acc = w[i].transposed ? Matrix<Scalar>(acc * m.transpose()) : Matrix<Scalar>(acc * m);
        }
    }
    return acc;
}

/// The evaluation homomorphism at dimension n: s_t(c) becomes
/// sigma_t(X_c) for t <= n and 0 otherwise.
template <class Scalar>
Scalar eval_poly(const SigmaPoly& p, unsigned n, const MatrixAssignment<Scalar>& a) {
    if (a.empty()) throw std::invalid_argument("eval_poly: empty assignment");
    for (const auto& [k, m] : a) {
        if (m.rows() != n || m.cols() != n) {
            throw std::invalid_argument("eval_poly: matrix for g" + std::to_string(k) + " is not " +
                                        std::to_string(n) + "x" + std::to_string(n));
        }
    }
    const Scalar& like = a.begin()->second(0, 0);
    std::map<SigmaGenerator, Scalar> cache;
    Scalar total = scalar_from_rational<Scalar>(0, like);
    for (const auto& [mono, c] : p.terms()) {
        Scalar term = scalar_from_rational<Scalar>(c, like);
        for (const auto& g : mono) {
            auto it = cache.find(g);
            if (it == cache.end()) {
                Scalar v = g.t > n ? scalar_from_rational<Scalar>(0, like) : sigma_t_matrix(eval_word(g.cycle, a), g.t);
                it = cache.emplace(g, std::move(v)).first;
            }
            term = term * it->second;
        }
        total = total + term;
    }
    return total;
}

/// Integer entries in [-bound, bound] drawn from mt19937_64(seed), row by
/// row, each as (raw output mod (2 bound + 1)) - bound.
Matrix<Rational> random_matrix(unsigned n, std::uint64_t seed, unsigned bound = 10);
/// M + M^T for M = random_matrix(n, seed, bound).
Matrix<Rational> random_symmetric_matrix(unsigned n, std::uint64_t seed, unsigned bound = 10);

Matrix<Fp> reduce_mod(const Matrix<Rational>& m, std::uint64_t p);
MatrixAssignment<Fp> reduce_mod(const MatrixAssignment<Rational>& a, std::uint64_t p);

/// n x n matrix of fresh variables v_{offset}, ..., row-major.
Matrix<CommPoly> generic_matrix(unsigned n, std::size_t offset);

nlohmann::json matrix_to_json(const Matrix<Rational>& m);
nlohmann::json matrix_to_json(const Matrix<Fp>& m);

/// Parsed field tag of a matrix or assignment document.
struct FieldSpec {
    std::uint64_t p = 0;  // 0 for Q
    bool is_q() const { return p == 0; }
    std::string name() const { return p == 0 ? "Q" : "Fp"; }
};

/// "Q" or "fp:<p>"; rejects p = 2 with an explanation.
FieldSpec parse_field(const std::string& text);

/// Reads {"n":..,"field":"Q","entries":[[..]]}; Fp documents carry "p".
Matrix<Rational> matrix_from_json(const nlohmann::json& j, FieldSpec* field = nullptr);

std::string to_string(const Matrix<Rational>& m);

}  // namespace sigmainv
