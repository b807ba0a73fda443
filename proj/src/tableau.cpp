#include "sigmainv/tableau.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "sigmainv/sigma_ring.hpp"

namespace sigmainv {

Tableau::Tableau(unsigned n, std::vector<TableauArrow> arrows, std::vector<ArrowKind> kinds)
    : n_(n), arrows_(std::move(arrows)), kinds_(std::move(kinds)) {
    if (n == 0) throw std::invalid_argument("tableau: at least one row is required");
    std::set<Cell> covered;
    std::map<std::uint32_t, std::pair<unsigned, unsigned>> pattern;
    for (const auto& a : arrows_) {
        for (const auto& c : {a.tail, a.head}) {
            if (c.col < 1 || c.col > 2 || c.row < 1 || c.row > n) {
                throw std::invalid_argument("tableau: arrow cell outside the tableau");
            }
            if (!covered.insert(c).second) {
                throw std::invalid_argument("tableau: a cell is the end of two arrows");
            }
        }
        if (a.label == 0) throw std::invalid_argument("tableau: labels are 1-based");
        auto [it, inserted] = pattern.try_emplace(a.label, a.tail.col, a.head.col);
        if (!inserted && it->second != std::make_pair(a.tail.col, a.head.col)) {
            throw std::invalid_argument("tableau: arrows with equal labels must share their columns");
        }
        labels_ = std::max(labels_, a.label);
    }
    if (covered.size() != 2 * std::size_t{n}) {
        throw std::invalid_argument("tableau: every cell must be the head or tail of an arrow");
    }
    if (!kinds_.empty() && kinds_.size() < labels_) throw std::invalid_argument("tableau: missing label kinds");
}

unsigned Tableau::count_kind(ArrowKind k) const {
    unsigned c = 0;
    for (const auto& a : arrows_) c += kind(a.label) == k ? 1 : 0;
    return c;
}

Tableau Tableau::permuted(const std::vector<unsigned>& tau) const {
    if (tau.size() != n_) throw std::invalid_argument("tableau: permutation has the wrong size");
    auto move = [&](Cell c) {
        if (c.col == 2) c.row = tau[c.row - 1] + 1;
        return c;
    };
    std::vector<TableauArrow> out;
    for (const auto& a : arrows_) out.push_back({move(a.tail), move(a.head), a.label});
    return Tableau(n_, std::move(out), kinds_);
}

Integer Tableau::label_symmetry() const {
    std::map<std::uint32_t, unsigned> counts;
    for (const auto& a : arrows_) ++counts[a.label];
    Integer out = 1;
    for (const auto& [label, c] : counts) {
        for (unsigned k = 2; k <= c; ++k) out *= k;
    }
    return out;
}

namespace {

std::vector<ArrowKind> xyz_kinds() { return {ArrowKind::x, ArrowKind::y, ArrowKind::z}; }

std::vector<TableauArrow> t_arrows(unsigned t, unsigned r, bool multilinear) {
    std::vector<TableauArrow> out;
    for (unsigned i = 1; i <= t; ++i) out.push_back({{1, i}, {2, i}, multilinear ? i : 1});
    for (unsigned j = 1; j <= r; ++j) {
        out.push_back({{1, t + 2 * j - 1}, {1, t + 2 * j}, multilinear ? t + j : 2});
    }
    for (unsigned j = 1; j <= r; ++j) {
        out.push_back({{2, t + 2 * j - 1}, {2, t + 2 * j}, multilinear ? t + r + j : 3});
    }
    return out;
}

}  // namespace

Tableau build_T(unsigned t, unsigned r) {
    if (t + 2 * r == 0) throw std::invalid_argument("build_T: t + 2r must be positive");
    return Tableau(t + 2 * r, t_arrows(t, r, false), xyz_kinds());
}

Tableau build_T_multilinear(unsigned t, unsigned r) {
    if (t + 2 * r == 0) throw std::invalid_argument("build_T: t + 2r must be positive");
    std::vector<ArrowKind> kinds(t, ArrowKind::x);
    kinds.insert(kinds.end(), r, ArrowKind::y);
    kinds.insert(kinds.end(), r, ArrowKind::z);
    return Tableau(t + 2 * r, t_arrows(t, r, true), std::move(kinds));
}

int permutation_sign(const std::vector<unsigned>& p) {
    unsigned inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j] ? 1 : 0;
    }
    return inversions % 2 == 0 ? 1 : -1;
}

// ---------------------------------------------------------------- paths

std::vector<TableauPath> closed_paths(const Tableau& t, const std::vector<unsigned>& tau) {
    const Tableau tt = t.permuted(tau);
    const auto& arrows = tt.arrows();
    std::map<Cell, std::pair<std::size_t, bool>> owner;  // cell -> (arrow, is tail)
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        owner[arrows[i].tail] = {i, true};
        owner[arrows[i].head] = {i, false};
    }
    auto end_cell = [&](const PathStep& s) { return s.transposed ? arrows[s.arrow].tail : arrows[s.arrow].head; };
    auto next = [&](const PathStep& s) {
        const Cell e = end_cell(s);
        const auto [idx, is_tail] = owner.at(Cell{3 - e.col, e.row});
        return PathStep{idx, !is_tail};
    };

    std::vector<bool> seen(arrows.size(), false);
    std::vector<TableauPath> out;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
        if (seen[i]) continue;
        TableauPath path;
        PathStep s{i, false};
        do {
            if (path.size() > 2 * arrows.size()) throw std::logic_error("closed_paths: walk does not close");
            path.push_back(s);
            seen[s.arrow] = true;
            s = next(s);
        } while (!(s == PathStep{i, false}));
        out.push_back(std::move(path));
    }
    return out;
}

Word phi_word(const Tableau& t, const TableauPath& path) {
    std::vector<Letter> letters;
    for (const auto& s : path) letters.push_back({t.arrows()[s.arrow].label, s.transposed});
    return Word(std::move(letters));
}

// ---------------------------------------------------------------- signs

int sign_closed_form(const Tableau& t, const std::vector<unsigned>& j, const std::vector<Word>& c) {
    unsigned xi = t.count_kind(ArrowKind::x);
    for (std::size_t i = 0; i < c.size(); ++i) {
        unsigned deg = 0;
        for (const auto& l : c[i]) {
            if (!l.transposed && t.kind(l.index) != ArrowKind::x) ++deg;
        }
        xi += j[i] * (deg + 1);
    }
    return xi % 2 == 0 ? 1 : -1;
}

int sign_by_rules(const Tableau& t, const Word& phi) {
    std::vector<Letter> a(phi.begin(), phi.end());
    int sign = 1;
    // items 1 and 2: strip x letters
    while (a.size() > 1) {
        auto it = std::find_if(a.begin(), a.end(), [&](Letter l) { return t.kind(l.index) == ArrowKind::x; });
        if (it == a.end()) break;
        a.erase(it);
        sign = -sign;
    }
    if (a.size() == 1) {
        if (t.kind(a[0].index) != ArrowKind::x) throw std::logic_error("sign_by_rules: lone y or z letter");
        return sign;
    }
    // items 3 to 8: strip adjacent y/z pairs
    auto pair_sign = [&](Letter p, Letter q) {
        if (t.kind(p.index) == t.kind(q.index)) throw std::logic_error("sign_by_rules: path is not alternating");
        return p.transposed == q.transposed ? -1 : 1;
    };
    while (a.size() > 2) {
        sign *= -pair_sign(a[0], a[1]);
        a.erase(a.begin(), a.begin() + 2);
    }
    if (a.size() != 2) throw std::logic_error("sign_by_rules: odd number of y and z letters");
    return sign * pair_sign(a[0], a[1]);
}

std::optional<int> sign_by_definition(const Tableau& t, const std::vector<unsigned>& tau, const TableauPath& path) {
    const Tableau tt = t.permuted(tau);
    std::set<unsigned> row_set;
    for (const auto& s : path) {
        row_set.insert(tt.arrows()[s.arrow].tail.row);
        row_set.insert(tt.arrows()[s.arrow].head.row);
    }
    const std::vector<unsigned> rows(row_set.begin(), row_set.end());
    std::set<std::pair<Cell, Cell>> targets;
    for (const auto& a : t.arrows()) targets.emplace(a.tail, a.head);

    std::vector<unsigned> sigma(rows.size());
    std::iota(sigma.begin(), sigma.end(), 0u);
    std::optional<int> found;
    do {
        auto move = [&](Cell c) {
            if (c.col != 2) return c;
            const auto k = static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), c.row) - rows.begin());
            c.row = rows[sigma[k]];
            return c;
        };
        bool ok = true;
        for (const auto& s : path) {
            const auto& a = tt.arrows()[s.arrow];
            if (!targets.count({move(a.tail), move(a.head)})) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        const int sg = permutation_sign(sigma);
        if (found && *found != sg) return std::nullopt;
        found = sg;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return found;
}

// ---------------------------------------------------------------- decompose

namespace detail {

std::vector<std::vector<unsigned>> all_permutations(unsigned n) {
    std::vector<unsigned> p(n);
    std::iota(p.begin(), p.end(), 0u);
    std::vector<std::vector<unsigned>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<std::vector<unsigned>> restricted_permutations(const Tableau& t, unsigned col) {
    std::map<std::uint32_t, std::vector<unsigned>> tails;  // label -> tail rows in this column
    for (const auto& a : t.arrows()) {
        if (a.tail.col == col) tails[a.label].push_back(a.tail.row);
    }
    for (auto& [label, rows] : tails) std::sort(rows.begin(), rows.end());
    std::vector<std::vector<unsigned>> out;
    for (auto& p : all_permutations(t.n())) {
        bool ok = true;
        for (const auto& [label, rows] : tails) {
            for (std::size_t i = 0; ok && i + 1 < rows.size(); ++i) ok = p[rows[i] - 1] < p[rows[i + 1] - 1];
        }
        if (ok) out.push_back(std::move(p));
    }
    return out;
}

}  // namespace detail

DecomposeReport decompose_checked(const Tableau& t) {
    if (t.n() > kDecomposeMaxRows) {
        throw std::length_error("decompose: " + std::to_string(t.n()) + " rows exceed the exhaustive limit " +
                                std::to_string(kDecomposeMaxRows));
    }
    DecomposeReport report;
    // key: sorted (canonical word, multiplicity)
    using Key = std::vector<std::pair<Word, unsigned>>;
    std::map<Key, int> signs;
    for (const auto& tau : detail::all_permutations(t.n())) {
        ++report.permutations;
        const auto paths = closed_paths(t, tau);
        std::map<Word, unsigned> counts;
        bool primitive = true;
        for (const auto& p : paths) {
            const auto form = canonicalize(phi_word(t, p));
            if (form.power != 1) {
                primitive = false;
                break;
            }
            ++counts[form.cycle.word()];
        }
        if (!primitive) continue;

        const int sg = permutation_sign(tau);
        Key key(counts.begin(), counts.end());
        if (t.has_kinds()) {
            std::vector<unsigned> js;
            std::vector<Word> cs;
            for (const auto& [w, j] : key) {
                cs.push_back(w);
                js.push_back(j);
            }
            if (sign_closed_form(t, js, cs) != sg) ++report.closed_form_mismatches;
            int rules = 1;
            int definition = 1;
            bool defined = true;
            for (const auto& p : paths) {
                rules *= sign_by_rules(t, phi_word(t, p));
                const auto d = sign_by_definition(t, tau, p);
                if (!d) {
                    defined = false;
                } else {
                    definition *= *d;
                }
            }
            if (rules != sg) ++report.rules_mismatches;
            if (!defined || definition != sg) ++report.definition_mismatches;
        }
        auto [it, inserted] = signs.try_emplace(std::move(key), sg);
        if (!inserted && it->second != sg) ++report.sign_conflicts;
    }
    for (const auto& [key, sg] : signs) {
        Monomial m;
        for (const auto& [w, j] : key) m.emplace_back(j, canonicalize(w).cycle);
        report.poly += SigmaPoly::monomial(std::move(m), sg);
    }
    report.admissible_pairs = signs.size();
    return report;
}

SigmaPoly decompose(const Tableau& t) {
    auto report = decompose_checked(t);
    if (!report.consistent()) throw std::logic_error("decompose: sign checks failed");
    return std::move(report.poly);
}

}  // namespace sigmainv
