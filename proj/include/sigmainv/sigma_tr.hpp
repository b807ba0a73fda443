#pragma once

// sigma_{t,r}, its partial linearizations and substitutions.
//
// Output letters use Alphabet::xyz(u,v,w) indices: for sigma_tr this is
// x = 1, y = 2, z = 3.

#include <vector>

#include "sigmainv/quiver.hpp"
#include "sigmainv/sigma_ring.hpp"

namespace sigmainv {

/// Enumeration grows combinatorially past this t + 2r.
inline constexpr unsigned kSigmaTrDefaultLimit = 10;

struct MultiKey {
    std::vector<unsigned> t;  // one entry per x_i
    std::vector<unsigned> r;  // one entry per y_j
    std::vector<unsigned> s;  // one entry per z_k

    unsigned t_total() const;
    unsigned r_total() const;
    bool balanced() const;
    MDeg target() const;
};

/// The sign exponent t + sum j_i (deg_y + deg_z + 1) of one index pair.
unsigned sign_exponent(unsigned t, const IndexPair& pair);

/// Memoized. Throws std::length_error if t + 2r exceeds the limit and
/// `allow_large` is false.
SigmaPoly sigma_tr(unsigned t, unsigned r, bool allow_large = false);

/// Direct enumeration over Q(u,v,w). Throws std::invalid_argument when the
/// y and z totals differ.
SigmaPoly sigma_partial(const MultiKey& key, bool allow_large = false);

/// All exponents one: the multilinear polynomial in x_1..x_u, y_1..y_v, z_1..z_v.
SigmaPoly sigma_lin(unsigned u, unsigned v, bool allow_large = false);

/// sigma_{t,r}(a, b, c), normalized.
SigmaPoly sigma_tr_subst(unsigned t, unsigned r, const LinComb& a, const LinComb& b, const LinComb& c,
                         bool allow_large = false);

/// Substitution for a partial linearization: args lists the images of
/// x_1..x_u, y_1..y_v, z_1..z_w in order.
SigmaPoly sigma_partial_subst(const MultiKey& key, const std::vector<LinComb>& args, bool allow_large = false);

}  // namespace sigmainv
