#include "sigmainv/sigma_ring.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace sigmainv {

// ---------------------------------------------------------------- Amitsur

namespace {

using SymbolSeq = std::vector<std::size_t>;

// Strictly smaller than every proper rotation: the primitive necklace
// representatives.
bool is_lyndon(const SymbolSeq& s) {
    const auto n = s.size();
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto a = s[i];
            const auto b = s[(i + k) % n];
            if (a < b) break;
            if (a > b) return false;
            if (i + 1 == n) return false;  // equal rotation: periodic
        }
    }
    return true;
}

struct Necklace {
    std::size_t length = 0;  // in symbols
    Rational coeff;
    MDeg mdeg;
    Word word;
};

std::vector<Necklace> necklaces(unsigned t, std::span<const Summand> summands, const std::vector<MDeg>& degs,
                                const std::optional<MDeg>& cap) {
    std::vector<Necklace> out;
    SymbolSeq seq;
    std::function<void(const MDeg&)> walk = [&](const MDeg& acc) {
        if (!seq.empty() && is_lyndon(seq)) {
            Rational coeff = 1;
            std::vector<Letter> letters;
            for (auto s : seq) {
                coeff *= summands[s].coeff;
                letters.insert(letters.end(), summands[s].word.begin(), summands[s].word.end());
            }
            out.push_back(Necklace{seq.size(), std::move(coeff), acc, Word(std::move(letters))});
        }
        if (seq.size() == t) return;
        for (std::size_t s = 0; s < summands.size(); ++s) {
            auto next = mdeg_add(acc, degs[s]);
            if (cap && !mdeg_leq(next, *cap)) continue;
            seq.push_back(s);
            walk(next);
            seq.pop_back();
        }
    };
    walk(MDeg{});
    return out;
}

}  // namespace

SigmaPoly amitsur_expand(unsigned t, std::span<const Summand> summands, const std::optional<MDeg>& cap) {
    if (t == 0) throw std::invalid_argument("amitsur_expand: s_0 = 1 is not a generator");
    std::vector<Summand> live;
    for (const auto& s : summands) {
        if (s.coeff != 0) live.push_back(s);
    }
    if (live.empty()) return {};

    std::vector<MDeg> degs;
    for (const auto& s : live) degs.push_back(mdeg(s.word));
    const auto neck = necklaces(t, live, degs, cap);

    // s_j(W)^{...} factors are reused across branches
    std::map<std::pair<std::size_t, unsigned>, SigmaPoly> factor_cache;
    auto factor = [&](std::size_t i, unsigned j) -> const SigmaPoly& {
        auto key = std::make_pair(i, j);
        auto it = factor_cache.find(key);
        if (it == factor_cache.end()) {
            Rational c = 1;
            for (unsigned k = 0; k < j; ++k) c *= neck[i].coeff;
            it = factor_cache.emplace(key, normalize_word(j, neck[i].word) * c).first;
        }
        return it->second;
    };

    SigmaPoly out;
    std::function<void(std::size_t, unsigned, unsigned, const MDeg&, const SigmaPoly&)> knap =
        [&](std::size_t i, unsigned remaining, unsigned jsum, const MDeg& acc, const SigmaPoly& prod) {
            if (remaining == 0) {
                out += ((t - jsum) % 2 == 0) ? prod : -prod;
                return;
            }
            if (i == neck.size()) return;
            knap(i + 1, remaining, jsum, acc, prod);
            const auto len = static_cast<unsigned>(neck[i].length);
            MDeg next = acc;
            for (unsigned j = 1; j * len <= remaining; ++j) {
                next = mdeg_add(next, neck[i].mdeg);
                if (cap && !mdeg_leq(next, *cap)) break;
                knap(i + 1, remaining - j * len, jsum + j, next, prod * factor(i, j));
            }
        };
    knap(0, t, 0, MDeg{}, SigmaPoly::one());
    return out;
}

// ---------------------------------------------------------------- power formula

namespace {

using Partition = std::vector<unsigned>;  // descending, no zeros

void partitions_of(unsigned n, unsigned max_part, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (unsigned k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions_of(n - k, k, cur, out);
        cur.pop_back();
    }
}

Partition conjugate(const Partition& p) {
    Partition out;
    if (p.empty()) return out;
    for (unsigned k = 1; k <= p.front(); ++k) {
        unsigned c = 0;
        for (auto v : p) c += v >= k ? 1 : 0;
        out.push_back(c);
    }
    return out;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Number of 0-1 matrices with the given row and column sums.
class ZeroOneCounter {
public:
    explicit ZeroOneCounter(const Partition& rows) : rows_(rows), suffix_(rows.size() + 1, 0) {
        for (std::size_t i = rows.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + rows[i];
    }

    Integer count(Partition cols) {
        std::sort(cols.begin(), cols.end(), std::greater<>());
        while (!cols.empty() && cols.back() == 0) cols.pop_back();
        return rec(0, cols);
    }

private:
    Integer rec(std::size_t row, const Partition& caps) {
        if (row == rows_.size()) return caps.empty() ? 1 : 0;
        unsigned capacity = 0;
        for (auto c : caps) capacity += c;
        if (capacity != suffix_[row]) return 0;
        auto key = std::make_pair(row, caps);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        std::vector<std::pair<unsigned, unsigned>> groups;  // (capacity, multiplicity)
        for (auto c : caps) {
            if (!groups.empty() && groups.back().first == c) {
                ++groups.back().second;
            } else {
                groups.emplace_back(c, 1);
            }
        }
        Integer total = 0;
        std::vector<unsigned> take(groups.size(), 0);
        std::function<void(std::size_t, unsigned, Integer)> choose = [&](std::size_t g, unsigned left, Integer ways) {
            if (g == groups.size()) {
                if (left != 0) return;
                Partition next;
                for (std::size_t i = 0; i < groups.size(); ++i) {
                    for (unsigned k = 0; k < groups[i].second - take[i]; ++k) next.push_back(groups[i].first);
                    for (unsigned k = 0; k < take[i] && groups[i].first > 1; ++k) next.push_back(groups[i].first - 1);
                }
                std::sort(next.begin(), next.end(), std::greater<>());
                total += ways * rec(row + 1, next);
                return;
            }
            for (unsigned k = 0; k <= std::min(left, groups[g].second); ++k) {
                take[g] = k;
                choose(g + 1, left - k, ways * binomial(groups[g].second, k));
            }
            take[g] = 0;
        };
        choose(0, rows_[row], 1);
        memo_.emplace(std::move(key), total);
        return total;
    }

    Partition rows_;
    std::vector<unsigned> suffix_;
    std::map<std::pair<std::size_t, Partition>, Integer> memo_;
};

PowerFormula compute_power_formula(unsigned t, unsigned l) {
    const unsigned weight = t * l;
    std::vector<Partition> all;
    Partition cur;
    partitions_of(weight, weight, cur, all);

    // coefficients on monomial symmetric functions, largest in lex order first
    std::map<Partition, Integer, std::greater<>> f;
    f.emplace(Partition(t, l), 1);
    std::map<Partition, Integer, std::greater<>> result;
    while (!f.empty()) {
        const Partition lead = f.begin()->first;
        const Integer c = f.begin()->second;
        const Partition mu = conjugate(lead);
        result[mu] += c;
        ZeroOneCounter counter(mu);
        for (const auto& kappa : all) {
            if (kappa > lead) continue;
            const Integer k = counter.count(kappa);
            if (k == 0) continue;
            auto& slot = f[kappa];
            slot -= c * k;
            if (slot == 0) f.erase(kappa);
        }
    }
    PowerFormula out;
    for (auto& [mu, c] : result) {
        if (c != 0) out.terms.emplace_back(mu, c);
    }
    return out;
}

}  // namespace

const PowerFormula& power_formula(unsigned t, unsigned l) {
    if (t == 0 || l == 0) throw std::invalid_argument("power_formula: t and l must be positive");
    static std::shared_mutex mutex;
    static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<PowerFormula>> memo;
    const auto key = std::make_pair(t, l);
    {
        std::shared_lock lock(mutex);
        if (auto it = memo.find(key); it != memo.end()) return *it->second;
    }
    auto computed = std::make_unique<PowerFormula>(compute_power_formula(t, l));
    std::unique_lock lock(mutex);
    auto [it, inserted] = memo.try_emplace(key, std::move(computed));
    return *it->second;
}

SigmaPoly power_reduce(unsigned t, unsigned l, const CanonicalCycle& root) {
    SigmaPoly out;
    for (const auto& [parts, c] : power_formula(t, l).terms) {
        Monomial m;
        for (auto k : parts) m.emplace_back(k, root);
        out += SigmaPoly::monomial(std::move(m), Rational(c));
    }
    return out;
}

SigmaPoly power_reduce(unsigned t, unsigned l) { return power_reduce(t, l, canonicalize(Word{Letter{1, false}}).cycle); }

// ---------------------------------------------------------------- normalize

SigmaPoly normalize_word(unsigned t, const Word& w) {
    if (t == 0) throw std::invalid_argument("normalize: s_0 = 1 is not a generator");
    const auto form = canonicalize(w);
    if (form.power == 1) return SigmaPoly::generator(SigmaGenerator(t, form.cycle));
    return power_reduce(t, form.power, form.cycle);
}

SigmaPoly normalize(unsigned t, const LinComb& arg, const std::optional<MDeg>& cap) {
    if (t == 0) throw std::invalid_argument("normalize: s_0 = 1 is not a generator");
    std::vector<Summand> summands;
    for (const auto& [w, c] : arg.terms()) summands.push_back({c, w});
    return amitsur_expand(t, summands, cap);
}

// ---------------------------------------------------------------- substitution

LinComb substitute_word(const Word& w, const LetterAssignment& a) {
    LinComb acc;
    bool first = true;
    for (const auto& l : w) {
        auto it = a.find(l.index);
        if (it == a.end()) {
            throw std::out_of_range("substitute: letter g" + std::to_string(l.index) + " has no assignment");
        }
        const LinComb img = l.transposed ? involute(it->second) : it->second;
        acc = first ? img : acc * img;
        first = false;
    }
    return acc;
}

SigmaPoly substitute(const SigmaPoly& p, const LetterAssignment& a, const std::optional<MDeg>& cap) {
    std::map<SigmaGenerator, SigmaPoly> images;
    SigmaPoly out;
    for (const auto& [m, c] : p.terms()) {
        SigmaPoly prod = SigmaPoly::constant(c);
        for (const auto& g : m) {
            auto it = images.find(g);
            if (it == images.end()) it = images.emplace(g, normalize(g.t, substitute_word(g.cycle, a), cap)).first;
            prod = cap ? SigmaPoly::multiply_capped(prod, it->second, *cap) : prod * it->second;
            if (prod.is_zero()) break;
        }
        out += prod;
    }
    return out;
}

SigmaPoly lin(const SigmaPoly& p, unsigned d) {
    if (d == 0) throw std::invalid_argument("lin: d must be positive");
    const auto hom = p.homogeneous_mdeg();
    if (!hom) throw std::invalid_argument("lin: input is not multihomogeneous");
    if (p.max_letter() > d) throw std::invalid_argument("lin: letter index exceeds d");
    if (p.is_zero()) return {};

    MDeg tbar = *hom;
    tbar.resize(d, 0);
    const unsigned tmax = *std::max_element(tbar.begin(), tbar.end());
    MDeg cap(static_cast<std::size_t>(d) * std::max(tmax, 1u), 0);
    LetterAssignment assign;
    for (std::uint32_t i = 1; i <= d; ++i) {
        LinComb img;
        if (tbar[i - 1] == 0) img.add(Word{Letter{i, false}}, 1);
        for (std::uint32_t j = 0; j < tbar[i - 1]; ++j) {
            img.add(Word{Letter{i + j * d, false}}, 1);
            cap[i + j * d - 1] = 1;
        }
        assign.emplace(i, std::move(img));
    }
    return homogeneous_component(substitute(p, assign, cap), cap);
}

MultiplicityStats multiplicity_stats(const Monomial& m) {
    MultiplicityStats s;
    s.e = static_cast<unsigned>(m.size());
    for (std::size_t i = 0; i < m.size();) {
        std::size_t j = i;
        while (j < m.size() && m[j] == m[i]) ++j;
        for (std::size_t k = 2; k <= j - i; ++k) s.c *= static_cast<unsigned>(k);
        i = j;
    }
    return s;
}

}  // namespace sigmainv
