#include "sigmainv/relations.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace sigmainv {

namespace {

std::vector<Word> all_words(unsigned d, unsigned max_len, bool transposes) {
    std::vector<Word> out;
    std::vector<Letter> letters;
    for (std::uint32_t i = 1; i <= d; ++i) {
        letters.push_back({i, false});
        if (transposes) letters.push_back({i, true});
    }
    std::vector<std::vector<Letter>> layer{{}};
    for (unsigned len = 1; len <= max_len; ++len) {
        std::vector<std::vector<Letter>> next;
        for (const auto& prefix : layer) {
            for (const auto& l : letters) {
                auto w = prefix;
                w.push_back(l);
                next.push_back(std::move(w));
            }
        }
        for (const auto& w : next) out.emplace_back(w);
        layer = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct FamilyChoice {
    std::vector<unsigned> exps;
    std::vector<Word> words;
    unsigned degree = 0;
    unsigned total = 0;
};

// Multisets of (exponent >= 1, word) over distinct words, by word order.
std::vector<FamilyChoice> family_choices(const std::vector<Word>& words, unsigned budget) {
    std::vector<FamilyChoice> out;
    FamilyChoice cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        out.push_back(cur);
        for (std::size_t k = i; k < words.size(); ++k) {
            const auto len = static_cast<unsigned>(words[k].size());
            for (unsigned e = 1; cur.degree + e * len <= budget; ++e) {
                cur.exps.push_back(e);
                cur.words.push_back(words[k]);
                cur.degree += e * len;
                cur.total += e;
                rec(k + 1);
                cur.exps.pop_back();
                cur.words.pop_back();
                cur.degree -= e * len;
                cur.total -= e;
            }
        }
    };
    rec(0);
    return out;
}

std::string dedupe_key(const SigmaPoly& p) {
    const Rational lead = p.terms().begin()->second;
    return to_string(p * Rational(1 / lead), Alphabet::generic());
}

std::string exps_text(const std::vector<unsigned>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

}  // namespace

std::string RelationGenerator::provenance(const Alphabet& a) const {
    std::string out = family == "GL" ? "s_" + exps_text(key.t) : "s_" + exps_text(key.t) + exps_text(key.r) + exps_text(key.s);
    out += "(";
    for (std::size_t i = 0; i < args.size(); ++i) out += (i ? ", " : "") + to_string(args[i], a);
    return out + ")";
}

std::vector<RelationGenerator> o_relation_generators(unsigned n, unsigned d, unsigned max_total_degree,
                                                     const GeneratorOptions& opts) {
    if (n == 0 || d == 0) throw std::invalid_argument("relations: n and d must be positive");
    const auto words = all_words(d, std::min(opts.word_degree_cap, max_total_degree), true);
    const auto choices = family_choices(words, max_total_degree);
    std::map<unsigned, std::vector<const FamilyChoice*>> by_total;
    for (const auto& c : choices) by_total[c.total].push_back(&c);

    std::map<std::tuple<std::vector<unsigned>, std::vector<unsigned>, std::vector<unsigned>>, SigmaPoly> partial_cache;
    std::set<std::string> seen;
    std::vector<RelationGenerator> out;
    for (const auto& x : choices) {
        for (const auto& [r, ys] : by_total) {
            if (x.total + 2 * r <= n) continue;
            if (x.degree + 2 * r > max_total_degree) break;
            for (const auto* y : ys) {
                for (const auto* z : ys) {
                    if (x.degree + y->degree + z->degree > max_total_degree) continue;
                    MultiKey key{x.exps, y->exps, z->exps};
                    auto ck = std::make_tuple(key.t, key.r, key.s);
                    auto it = partial_cache.find(ck);
                    if (it == partial_cache.end()) it = partial_cache.emplace(ck, sigma_partial(key)).first;
                    std::vector<Word> args = x.words;
                    args.insert(args.end(), y->words.begin(), y->words.end());
                    args.insert(args.end(), z->words.begin(), z->words.end());
                    LetterAssignment assign;
                    for (std::size_t i = 0; i < args.size(); ++i) {
                        assign.emplace(static_cast<std::uint32_t>(i + 1), LinComb(args[i]));
                    }
                    auto poly = substitute(it->second, assign);
                    if (poly.is_zero() || !seen.insert(dedupe_key(poly)).second) continue;
                    out.push_back({std::move(poly), "O", std::move(key), std::move(args)});
                }
            }
        }
    }
    return out;
}

std::vector<RelationGenerator> gl_relation_generators(unsigned n, unsigned d, unsigned max_total_degree,
                                                      const GeneratorOptions& opts) {
    if (n == 0 || d == 0) throw std::invalid_argument("relations: n and d must be positive");
    const auto words = all_words(d, std::min(opts.word_degree_cap, max_total_degree), false);
    std::set<std::string> seen;
    std::vector<RelationGenerator> out;
    for (const auto& x : family_choices(words, max_total_degree)) {
        if (x.total <= n) continue;
        // component of s_t(a_1 x_1 + ... + a_u x_u) of multidegree exps
        std::vector<Summand> summands;
        for (std::uint32_t i = 1; i <= x.exps.size(); ++i) summands.push_back({1, Word{Letter{i, false}}});
        const MDeg cap(x.exps.begin(), x.exps.end());
        const auto component = homogeneous_component(amitsur_expand(x.total, summands, cap), cap);
        LetterAssignment assign;
        for (std::size_t i = 0; i < x.words.size(); ++i) {
            assign.emplace(static_cast<std::uint32_t>(i + 1), LinComb(x.words[i]));
        }
        auto poly = substitute(component, assign);
        if (poly.is_zero() || !seen.insert(dedupe_key(poly)).second) continue;
        out.push_back({std::move(poly), "GL", MultiKey{x.exps, {}, {}}, x.words});
    }
    return out;
}

// ---------------------------------------------------------------- verify

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::verified_zero: return "verified-zero";
        case Verdict::falsified: return "falsified";
        case Verdict::exact_zero: return "exact-zero";
    }
    return "?";
}

std::string to_string(VerifyMode m) { return m == VerifyMode::exact ? "exact" : "randomized"; }

std::uint64_t derive_seed(std::uint64_t trial_seed, std::uint32_t letter) {
    // splitmix64 finalizer over (seed, letter)
    std::uint64_t z = trial_seed * 0x9E3779B97F4A7C15ULL + letter;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

unsigned total_degree(const SigmaPoly& p) {
    unsigned d = 0;
    for (const auto& [m, c] : p.terms()) d = std::max(d, degree(m));
    return d;
}

namespace {

std::string eval_text(const SigmaPoly& p, unsigned n, const MatrixAssignment<Rational>& a, std::uint64_t prime) {
    if (prime == 0) return to_string(eval_poly(p, n, a));
    return to_string(eval_poly(p, n, reduce_mod(a, prime)));
}

bool eval_is_zero(const SigmaPoly& p, unsigned n, const MatrixAssignment<Rational>& a, std::uint64_t prime) {
    if (prime == 0) return eval_poly(p, n, a) == 0;
    return eval_poly(p, n, reduce_mod(a, prime)).value() == 0;
}

MatrixAssignment<Rational> random_assignment(unsigned n, std::uint32_t letters, std::uint64_t seed, unsigned bound) {
    MatrixAssignment<Rational> a;
    for (std::uint32_t k = 1; k <= letters; ++k) a.emplace(k, random_matrix(n, derive_seed(seed, k), bound));
    return a;
}

}  // namespace

RelationCertificate verify(const SigmaPoly& p, unsigned n, const VerifyPolicy& policy) {
    if (n == 0) throw std::invalid_argument("verify: n must be positive");
    if (policy.p != 0) require_odd_prime(policy.p);
    RelationCertificate cert;
    cert.generator = p;
    cert.n = n;
    cert.policy = policy;
    const auto letters = std::max<std::uint32_t>(p.max_letter(), 1);

    if (policy.mode == VerifyMode::randomized) {
        cert.verdict = Verdict::verified_zero;
        for (unsigned k = 0; k < policy.trials; ++k) {
            const auto seed = policy.seed + k;
            cert.seeds.push_back(seed);
            auto a = random_assignment(n, letters, seed, policy.entry_bound);
            if (!eval_is_zero(p, n, a, policy.p)) {
                cert.verdict = Verdict::falsified;
                cert.witness_value = eval_text(p, n, a, policy.p);
                cert.witness = std::move(a);
                break;
            }
        }
        return cert;
    }

    if (n > kExactMaxN || letters > kExactMaxLetters || total_degree(p) > kExactMaxDegree) {
        throw std::invalid_argument("verify: exact mode needs n <= " + std::to_string(kExactMaxN) + ", at most " +
                                    std::to_string(kExactMaxLetters) + " letters and degree <= " +
                                    std::to_string(kExactMaxDegree));
    }
    if (policy.p != 0) throw std::invalid_argument("verify: exact mode works over Q only");
    MatrixAssignment<CommPoly> generic;
    for (std::uint32_t k = 1; k <= letters; ++k) generic.emplace(k, generic_matrix(n, (k - 1) * n * n));
    const CommPoly value = eval_poly(p, n, generic);
    if (value.is_zero()) {
        cert.verdict = Verdict::exact_zero;
        return cert;
    }
    cert.verdict = Verdict::falsified;
    // witness: identity matrices first, then seeded random points
    MatrixAssignment<Rational> a;
    for (std::uint32_t k = 1; k <= letters; ++k) a.emplace(k, identity_matrix<Rational>(n, Rational(0)));
    for (unsigned k = 0; eval_poly(p, n, a) == 0; ++k) {
        const auto seed = policy.seed + k;
        cert.seeds.push_back(seed);
        a = random_assignment(n, letters, seed, policy.entry_bound);
    }
    cert.witness_value = to_string(eval_poly(p, n, a));
    cert.witness = std::move(a);
    return cert;
}

std::vector<RelationCertificate> verify_all(const std::vector<RelationGenerator>& gens, unsigned n,
                                            const VerifyPolicy& policy, const Alphabet& a, unsigned threads) {
    std::vector<RelationCertificate> out(gens.size());
    std::vector<std::exception_ptr> errors(gens.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < gens.size(); i = next++) {
            try {
                out[i] = verify(gens[i].poly, n, policy);
                out[i].provenance = gens[i].provenance(a);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, gens.size()));
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(work);
    work();
    pool.clear();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

nlohmann::json to_json(const RelationCertificate& c, const Alphabet& a) {
    nlohmann::json j;
    j["generator"] = to_string(c.generator, a);
    if (!c.provenance.empty()) j["provenance"] = c.provenance;
    j["n"] = c.n;
    j["field"] = c.policy.p == 0 ? "Q" : "fp:" + std::to_string(c.policy.p);
    j["mode"] = to_string(c.policy.mode);
    j["trials"] = c.policy.mode == VerifyMode::randomized ? c.policy.trials : 0;
    j["seed"] = c.policy.seed;
    j["entry_bound"] = c.policy.entry_bound;
    j["seeds"] = c.seeds;
    j["verdict"] = to_string(c.verdict);
    if (c.witness) {
        nlohmann::json w;
        for (const auto& [k, m] : *c.witness) {
            w[a.name(k)] = c.policy.p == 0 ? matrix_to_json(m) : matrix_to_json(reduce_mod(m, c.policy.p));
        }
        j["witness"] = {{"matrices", std::move(w)}, {"value", c.witness_value}};
    }
    return j;
}

}  // namespace sigmainv
