#pragma once

// Rewriting into the symbolic ring: Amitsur expansion of s_t over a sum,
// power reduction for imprimitive cycles, substitution and linearization.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sigmainv/sigma_poly.hpp"

namespace sigmainv {

struct Summand {
    Rational coeff;
    Word word;
};

/// s_t(sum a_i w_i) with each w_i treated as an atomic symbol, then
/// substituted and normalized. With `cap`, monomials whose multidegree
/// exceeds the cap are dropped early (the result is still exact below it).
SigmaPoly amitsur_expand(unsigned t, std::span<const Summand> summands, const std::optional<MDeg>& cap = {});

/// Integer expansion of e_t(y^l) in the elementary basis e_1..e_{tl}; each
/// entry lists the parts of one product e_{k1} e_{k2} ... (descending).
struct PowerFormula {
    std::vector<std::pair<std::vector<unsigned>, Integer>> terms;
};

/// Memoized; safe to call from several threads.
const PowerFormula& power_formula(unsigned t, unsigned l);

/// P_{t,l} in the single letter a (index 1).
SigmaPoly power_reduce(unsigned t, unsigned l);
/// P_{t,l} with the letter replaced by a primitive cycle.
SigmaPoly power_reduce(unsigned t, unsigned l, const CanonicalCycle& root);

/// s_t(w) for a single word: canonicalized, with power reduction if w is a
/// proper power.
SigmaPoly normalize_word(unsigned t, const Word& w);

/// s_t(arg) rewritten into the ring. s_t(0) = 0.
SigmaPoly normalize(unsigned t, const LinComb& arg, const std::optional<MDeg>& cap = {});

using LetterAssignment = std::map<std::uint32_t, LinComb>;

/// Image of a word under letter substitution; transposed letters take the
/// involuted image.
LinComb substitute_word(const Word& w, const LetterAssignment& a);

/// Replaces every generator s_t(c) by normalize(t, image of c).
/// Throws std::out_of_range on an unassigned letter.
SigmaPoly substitute(const SigmaPoly& p, const LetterAssignment& a, const std::optional<MDeg>& cap = {});

/// Complete linearization over the extended alphabet x_{i + j d}.
/// Throws std::invalid_argument if p is not multihomogeneous.
SigmaPoly lin(const SigmaPoly& p, unsigned d);

struct MultiplicityStats {
    Integer c = 1;   // product of factorials of repetition counts
    unsigned e = 0;  // number of factors
};

MultiplicityStats multiplicity_stats(const Monomial& m);

}  // namespace sigmainv
