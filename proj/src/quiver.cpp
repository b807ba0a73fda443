#include "sigmainv/quiver.hpp"

#include <functional>
#include <set>
#include <stdexcept>

#include "sigmainv/sigma_poly.hpp"

namespace sigmainv {

MixedQuiver::MixedQuiver(unsigned u, unsigned v, unsigned w) : u_(u), v_(v), w_(w) {
    if (u + v + w == 0) throw std::invalid_argument("build_Q: the quiver needs at least one arrow");
    for (std::uint32_t i = 1; i <= letter_count(); ++i) {
        arrows_.push_back({i, false});
        arrows_.push_back({i, true});
    }
}

ArrowKind MixedQuiver::kind(std::uint32_t index) const {
    if (index == 0 || index > letter_count()) {
        throw std::out_of_range("quiver: letter index " + std::to_string(index) + " is not an arrow");
    }
    if (index <= u_) return ArrowKind::x;
    if (index <= u_ + v_) return ArrowKind::y;
    return ArrowKind::z;
}

unsigned MixedQuiver::head(Letter l) const {
    unsigned h = 0;
    switch (kind(l.index)) {
        case ArrowKind::x: h = 1; break;
        case ArrowKind::y: h = 1; break;
        case ArrowKind::z: h = 2; break;
    }
    if (!l.transposed) return h;
    // (b^T)' = (b'')^T
    return transpose_vertex(tail(l.transpose()));
}

unsigned MixedQuiver::tail(Letter l) const {
    unsigned t = 0;
    switch (kind(l.index)) {
        case ArrowKind::x: t = 1; break;
        case ArrowKind::y: t = 2; break;
        case ArrowKind::z: t = 1; break;
    }
    if (!l.transposed) return t;
    return transpose_vertex(head(l.transpose()));
}

bool MixedQuiver::is_path(const Word& w) const {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (tail(w[i]) != head(w[i + 1])) return false;
    }
    return true;
}

bool MixedQuiver::is_closed_path(const Word& w) const {
    return is_path(w) && tail(w[w.size() - 1]) == head(w[0]);
}

MixedQuiver build_Q(unsigned u, unsigned v, unsigned w) { return MixedQuiver(u, v, w); }

std::vector<QuiverCycle> enumerate_cycles(const MixedQuiver& q, const MDeg& bound) {
    unsigned budget = 0;
    for (auto b : bound) budget += b;

    std::set<Word> seen;
    std::vector<Letter> path;
    MDeg used(q.letter_count(), 0);
    std::function<void()> walk = [&] {
        const Word w(path);
        if (q.tail(path.back()) == q.head(path.front()) && is_primitive(w)) {
            seen.insert(canonicalize(w).cycle.word());
        }
        if (path.size() == budget) return;
        for (const auto& a : q.arrows()) {
            if (q.head(a) != q.tail(path.back())) continue;
            const auto k = a.index - 1;
            if (k >= bound.size() || used[k] >= bound[k]) continue;
            ++used[k];
            path.push_back(a);
            walk();
            path.pop_back();
            --used[k];
        }
    };
    for (const auto& a : q.arrows()) {
        const auto k = a.index - 1;
        if (k >= bound.size() || bound[k] == 0) continue;
        ++used[k];
        path.assign(1, a);
        walk();
        --used[k];
    }

    std::vector<QuiverCycle> out;
    for (const auto& w : seen) {
        QuiverCycle c{canonicalize(w).cycle, 0, 0, 0, mdeg(w, q.letter_count())};
        for (const auto& l : w) {
            if (l.transposed) continue;
            switch (q.kind(l.index)) {
                case ArrowKind::x: ++c.deg_x; break;
                case ArrowKind::y: ++c.deg_y; break;
                case ArrowKind::z: ++c.deg_z; break;
            }
        }
        out.push_back(std::move(c));
    }
    // std::set<Word> already iterates in (degree, word) order
    return out;
}

std::vector<IndexPair> index_set(const MixedQuiver& q, const MDeg& target) {
    const auto cycles = enumerate_cycles(q, target);
    std::vector<IndexPair> out;
    IndexPair cur;
    std::function<void(std::size_t, const MDeg&)> knap = [&](std::size_t i, const MDeg& acc) {
        if (mdeg_equal(acc, target)) {
            out.push_back(cur);
            return;
        }
        if (i == cycles.size()) return;
        knap(i + 1, acc);
        MDeg next = acc;
        for (unsigned j = 1;; ++j) {
            next = mdeg_add(next, cycles[i].mdeg);
            if (!mdeg_leq(next, target)) break;
            cur.j.push_back(j);
            cur.alphas.push_back(cycles[i]);
            knap(i + 1, next);
            cur.j.pop_back();
            cur.alphas.pop_back();
        }
    };
    bool all_zero = true;
    for (auto t : target) all_zero = all_zero && t == 0;
    if (all_zero) return {IndexPair{}};
    knap(0, MDeg(q.letter_count(), 0));
    return out;
}

}  // namespace sigmainv
