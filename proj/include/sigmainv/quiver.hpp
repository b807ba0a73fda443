#pragma once

// The two-vertex mixed quiver Q(u,v,w) and its primitive closed paths.
//
// Vertex 1 and vertex 2 are swapped by the involution. Letters follow
// Alphabet::xyz(u,v,w): loops x_i at vertex 1 (x_i' at 2), arrows y_j and
// y_j' from 2 to 1, arrows z_k and z_k' from 1 to 2. A word a_1 ... a_p is a
// path when tail(a_i) = head(a_{i+1}); it is closed when tail(a_p) = head(a_1).

#include <vector>

#include "sigmainv/word.hpp"

namespace sigmainv {

enum class ArrowKind { x, y, z };

class MixedQuiver {
public:
    MixedQuiver(unsigned u, unsigned v, unsigned w);

    unsigned u() const { return u_; }
    unsigned v() const { return v_; }
    unsigned w() const { return w_; }
    unsigned letter_count() const { return u_ + v_ + w_; }

    static constexpr unsigned transpose_vertex(unsigned vertex) { return 3 - vertex; }

    ArrowKind kind(std::uint32_t index) const;
    unsigned head(Letter l) const;
    unsigned tail(Letter l) const;

    /// Every oriented arrow, untransposed first, in letter order.
    const std::vector<Letter>& arrows() const { return arrows_; }

    bool is_path(const Word& w) const;
    bool is_closed_path(const Word& w) const;

    Alphabet alphabet() const { return Alphabet::xyz(u_, v_, w_); }

private:
    unsigned u_, v_, w_;
    std::vector<Letter> arrows_;
};

MixedQuiver build_Q(unsigned u, unsigned v, unsigned w);

/// A primitive closed path up to rotation and transpose.
struct QuiverCycle {
    CanonicalCycle cycle;
    unsigned deg_x = 0;  // untransposed letters only
    unsigned deg_y = 0;
    unsigned deg_z = 0;
    MDeg mdeg;            // letter and transpose counted together

    unsigned degree() const { return static_cast<unsigned>(cycle.word().size()); }
};

/// Primitive closed paths with multidegree <= bound, one per class, sorted
/// by (degree, canonical word).
std::vector<QuiverCycle> enumerate_cycles(const MixedQuiver& q, const MDeg& bound);

struct IndexPair {
    std::vector<unsigned> j;
    std::vector<QuiverCycle> alphas;
};

/// All (j, alpha) with pairwise distinct cycles, j_i >= 1 and
/// sum j_i mdeg(alpha_i) = target.
std::vector<IndexPair> index_set(const MixedQuiver& q, const MDeg& target);

}  // namespace sigmainv
