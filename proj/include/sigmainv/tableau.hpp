#pragma once

// Two-column tableaux with substitution: bpf, DP_{r,r}, permuted tableaux,
// closed paths and the decomposition into sigma generators.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "sigmainv/matrix_eval.hpp"
#include "sigmainv/quiver.hpp"
#include "sigmainv/sigma_poly.hpp"

namespace sigmainv {

struct Cell {
    unsigned col = 1;  // 1 or 2
    unsigned row = 1;  // 1-based

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct TableauArrow {
    Cell tail;
    Cell head;
    std::uint32_t label = 1;  // value of phi, 1-based

    friend bool operator==(const TableauArrow&, const TableauArrow&) = default;
};

class Tableau {
public:
    /// Validates that every cell is covered exactly once and that arrows
    /// sharing a label share their column pattern. `kinds[k-1]` classifies
    /// label k for the sign formulas; it may be empty.
    Tableau(unsigned n, std::vector<TableauArrow> arrows, std::vector<ArrowKind> kinds = {});

    unsigned n() const { return n_; }
    const std::vector<TableauArrow>& arrows() const { return arrows_; }
    std::uint32_t label_count() const { return labels_; }
    bool has_kinds() const { return !kinds_.empty(); }
    ArrowKind kind(std::uint32_t label) const { return kinds_.at(label - 1); }
    unsigned count_kind(ArrowKind k) const;

    /// T^tau: the cells of column 2 are moved by tau (0-based: row i goes to
    /// row tau[i-1] + 1).
    Tableau permuted(const std::vector<unsigned>& tau) const;

    /// Product over labels of (number of arrows with that label)!.
    Integer label_symmetry() const;

private:
    unsigned n_;
    std::vector<TableauArrow> arrows_;
    std::vector<ArrowKind> kinds_;
    std::uint32_t labels_ = 0;
};

/// x_i horizontal in rows 1..t, y_j and z_j vertical in columns 1 and 2.
/// Labels: x = 1, y = 2, z = 3.
Tableau build_T(unsigned t, unsigned r);
/// Same arrows with distinct labels: x_i = i, y_j = t + j, z_j = t + r + j.
Tableau build_T_multilinear(unsigned t, unsigned r);

/// Sign of a permutation of 0..n-1.
int permutation_sign(const std::vector<unsigned>& p);

/// One step of a path: an arrow of the tableau, possibly transposed.
struct PathStep {
    std::size_t arrow = 0;
    bool transposed = false;

    friend bool operator==(const PathStep&, const PathStep&) = default;
};

using TableauPath = std::vector<PathStep>;

/// Closed paths of T^tau, one per class; every arrow lies on exactly one.
std::vector<TableauPath> closed_paths(const Tableau& t, const std::vector<unsigned>& tau);

/// phi of a path as a word in the label letters.
Word phi_word(const Tableau& t, const TableauPath& path);

/// Closed form (-1)^(t + sum j (deg_y c + deg_z c + 1)), with t the number
/// of x arrows and degrees counting untransposed letters. Needs kinds.
int sign_closed_form(const Tableau& t, const std::vector<unsigned>& j, const std::vector<Word>& c);

/// Per-path sign from the elimination rules: a lone x is +1, removing an x
/// flips the sign, a y/z pair is -1 when both or neither letter is
/// transposed and +1 otherwise, removing such a pair multiplies by minus
/// its sign.
int sign_by_rules(const Tableau& t, const Word& phi);

/// Per-path sign from the definition: the sign of a row permutation moving
/// the path (in T^tau) onto arrows of T. nullopt if none exists or the
/// candidates disagree.
std::optional<int> sign_by_definition(const Tableau& t, const std::vector<unsigned>& tau, const TableauPath& path);

struct DecomposeReport {
    SigmaPoly poly;
    std::size_t permutations = 0;
    std::size_t admissible_pairs = 0;
    std::size_t sign_conflicts = 0;         // permutations realizing one pair with different signs
    std::size_t closed_form_mismatches = 0;  // closed form vs sign(tau)
    std::size_t rules_mismatches = 0;        // product of per-path rules vs sign(tau)
    std::size_t definition_mismatches = 0;   // product of per-path definitional signs vs sign(tau)

    bool consistent() const {
        return sign_conflicts == 0 && closed_form_mismatches == 0 && rules_mismatches == 0 &&
               definition_mismatches == 0;
    }
};

inline constexpr unsigned kDecomposeMaxRows = 6;

/// Enumerates T^tau for all tau, keeps those whose closed paths have
/// primitive phi-images, and sums sign(tau) prod s_j(c) once per pair.
/// Throws std::length_error past kDecomposeMaxRows.
DecomposeReport decompose_checked(const Tableau& t);
/// Throws std::logic_error if the sign checks fail.
SigmaPoly decompose(const Tableau& t);

// ---------------------------------------------------------------- bpf

namespace detail {

std::vector<std::vector<unsigned>> all_permutations(unsigned n);

/// Permutations of one column respecting the order of tails that share a
/// label in that column.
std::vector<std::vector<unsigned>> restricted_permutations(const Tableau& t, unsigned col);

template <class Scalar>
Scalar bpf_sum(const Tableau& t, const std::vector<Matrix<Scalar>>& x, const std::vector<std::vector<unsigned>>& p1s,
               const std::vector<std::vector<unsigned>>& p2s) {
    const Scalar& like = x.at(0)(0, 0);
    Scalar total = scalar_from_rational<Scalar>(0, like);
    for (const auto& p1 : p1s) {
        const int s1 = permutation_sign(p1);
        for (const auto& p2 : p2s) {
            const auto& p = [&](unsigned col) -> const std::vector<unsigned>& { return col == 1 ? p1 : p2; };
            Scalar term = scalar_from_rational<Scalar>(s1 * permutation_sign(p2), like);
            for (const auto& a : t.arrows()) {
                const auto i = p(a.tail.col)[a.tail.row - 1];
                const auto j = p(a.head.col)[a.head.row - 1];
                term = term * x[a.label - 1](i, j);
            }
            total = total + term;
        }
    }
    return total;
}

template <class Scalar>
void check_bpf_args(const Tableau& t, const std::vector<Matrix<Scalar>>& x) {
    if (x.size() < t.label_count()) throw std::invalid_argument("bpf: fewer matrices than labels");
    for (const auto& m : x) {
        if (m.rows() != t.n() || m.cols() != t.n()) {
            throw std::invalid_argument("bpf: matrices must be " + std::to_string(t.n()) + "x" +
                                        std::to_string(t.n()));
        }
    }
}

}  // namespace detail

/// Restricted signed double sum; valid in every characteristic.
/// x[k-1] is the matrix for label k.
template <class Scalar>
Scalar bpf(const Tableau& t, const std::vector<Matrix<Scalar>>& x) {
    detail::check_bpf_args(t, x);
    return detail::bpf_sum(t, x, detail::restricted_permutations(t, 1), detail::restricted_permutations(t, 2));
}

/// Full double sum divided by the label symmetry; needs the factorials to
/// be invertible.
template <class Scalar>
Scalar bpf_q_form(const Tableau& t, const std::vector<Matrix<Scalar>>& x) {
    detail::check_bpf_args(t, x);
    const auto all = detail::all_permutations(t.n());
    const Scalar total = detail::bpf_sum(t, x, all, all);
    return total / scalar_from_rational<Scalar>(Rational(t.label_symmetry()), x[0](0, 0));
}

/// bpf of T_{n-2r, r} at (X, Y, Z). Throws if n < 2r.
template <class Scalar>
Scalar dp(unsigned r, const Matrix<Scalar>& x, const Matrix<Scalar>& y, const Matrix<Scalar>& z) {
    const auto n = static_cast<unsigned>(x.rows());
    if (n < 2 * r) throw std::invalid_argument("dp: need n >= 2r");
    if (n == 0) throw std::invalid_argument("dp: empty matrices");
    return bpf(build_T(n - 2 * r, r), std::vector<Matrix<Scalar>>{x, y, z});
}

}  // namespace sigmainv
