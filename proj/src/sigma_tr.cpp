#include "sigmainv/sigma_tr.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

namespace sigmainv {

unsigned MultiKey::t_total() const { return std::accumulate(t.begin(), t.end(), 0u); }
unsigned MultiKey::r_total() const { return std::accumulate(r.begin(), r.end(), 0u); }
bool MultiKey::balanced() const { return r_total() == std::accumulate(s.begin(), s.end(), 0u); }

MDeg MultiKey::target() const {
    MDeg out(t);
    out.insert(out.end(), r.begin(), r.end());
    out.insert(out.end(), s.begin(), s.end());
    return out;
}

unsigned sign_exponent(unsigned t, const IndexPair& pair) {
    unsigned xi = t;
    for (std::size_t i = 0; i < pair.j.size(); ++i) {
        xi += pair.j[i] * (pair.alphas[i].deg_y + pair.alphas[i].deg_z + 1);
    }
    return xi;
}

namespace {

void check_limit(unsigned t, unsigned r, bool allow_large) {
    if (!allow_large && t + 2 * r > kSigmaTrDefaultLimit) {
        throw std::length_error("sigma_tr: t + 2r = " + std::to_string(t + 2 * r) + " exceeds the limit " +
                                std::to_string(kSigmaTrDefaultLimit) + " (pass the override to proceed)");
    }
}

SigmaPoly enumerate(const MultiKey& key) {
    const unsigned u = static_cast<unsigned>(key.t.size());
    const unsigned v = static_cast<unsigned>(key.r.size());
    const unsigned w = static_cast<unsigned>(key.s.size());
    if (key.t_total() + key.r_total() == 0) return SigmaPoly::one();
    const auto q = build_Q(u, v, w);
    SigmaPoly out;
    for (const auto& pair : index_set(q, key.target())) {
        Monomial m;
        for (std::size_t i = 0; i < pair.j.size(); ++i) m.emplace_back(pair.j[i], pair.alphas[i].cycle);
        out += SigmaPoly::monomial(std::move(m), sign_exponent(key.t_total(), pair) % 2 == 0 ? 1 : -1);
    }
    return out;
}

}  // namespace

SigmaPoly sigma_tr(unsigned t, unsigned r, bool allow_large) {
    check_limit(t, r, allow_large);
    static std::shared_mutex mutex;
    static std::map<std::pair<unsigned, unsigned>, SigmaPoly> memo;
    const auto key = std::make_pair(t, r);
    {
        std::shared_lock lock(mutex);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    auto computed = enumerate(MultiKey{{t}, {r}, {r}});
    std::unique_lock lock(mutex);
    return memo.try_emplace(key, std::move(computed)).first->second;
}

SigmaPoly sigma_partial(const MultiKey& key, bool allow_large) {
    if (!key.balanced()) {
        throw std::invalid_argument("sigma_partial: the y and z degree totals must agree");
    }
    if (key.t.size() + key.r.size() + key.s.size() == 0) return SigmaPoly::one();
    check_limit(key.t_total(), key.r_total(), allow_large);
    return enumerate(key);
}

SigmaPoly sigma_lin(unsigned u, unsigned v, bool allow_large) {
    return sigma_partial(MultiKey{std::vector<unsigned>(u, 1), std::vector<unsigned>(v, 1), std::vector<unsigned>(v, 1)},
                         allow_large);
}

SigmaPoly sigma_tr_subst(unsigned t, unsigned r, const LinComb& a, const LinComb& b, const LinComb& c,
                         bool allow_large) {
    return substitute(sigma_tr(t, r, allow_large), LetterAssignment{{1, a}, {2, b}, {3, c}});
}

SigmaPoly sigma_partial_subst(const MultiKey& key, const std::vector<LinComb>& args, bool allow_large) {
    const auto count = key.t.size() + key.r.size() + key.s.size();
    if (args.size() != count) {
        throw std::invalid_argument("sigma_partial_subst: expected " + std::to_string(count) + " arguments");
    }
    LetterAssignment assign;
    for (std::size_t i = 0; i < count; ++i) assign.emplace(static_cast<std::uint32_t>(i + 1), args[i]);
    return substitute(sigma_partial(key, allow_large), assign);
}

}  // namespace sigmainv
