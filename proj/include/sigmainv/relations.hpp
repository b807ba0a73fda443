#pragma once

// Relation generators for O(n) and GL(n) matrix invariants, and the
// verification harness (seeded random evaluation or exact generic matrices).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "sigmainv/matrix_eval.hpp"
#include "sigmainv/sigma_tr.hpp"

namespace sigmainv {

struct RelationGenerator {
    SigmaPoly poly;
    std::string family;          // "O" or "GL"
    MultiKey key;                // exponents; GL generators use key.t only
    std::vector<Word> args;      // images of x_1..x_u, y_1..y_v, z_1..z_w
    std::string provenance(const Alphabet& a) const;
};

struct GeneratorOptions {
    unsigned word_degree_cap = 3;
};

/// sigma_{t,r,s}(argument words) with t + 2r > n and total degree <= bound,
/// over letters 1..d and their transposes. Words within one family are
/// distinct and listed in order; zero and duplicate (up to a scalar)
/// polynomials are dropped.
std::vector<RelationGenerator> o_relation_generators(unsigned n, unsigned d, unsigned max_total_degree,
                                                     const GeneratorOptions& opts = {});

/// Components of s_t(sum a_i w_i) with t > n, transpose-free words.
std::vector<RelationGenerator> gl_relation_generators(unsigned n, unsigned d, unsigned max_total_degree,
                                                      const GeneratorOptions& opts = {});

enum class VerifyMode { randomized, exact };
enum class Verdict { verified_zero, falsified, exact_zero };

std::string to_string(Verdict v);
std::string to_string(VerifyMode m);

struct VerifyPolicy {
    VerifyMode mode = VerifyMode::randomized;
    unsigned trials = 20;
    std::uint64_t seed = 1;
    unsigned entry_bound = 10;
    std::uint64_t p = 0;  // 0: evaluate over Q, otherwise over F_p
};

/// Exact mode caps: n <= 2, at most 2 letters, degree <= 4.
inline constexpr unsigned kExactMaxN = 2;
inline constexpr unsigned kExactMaxLetters = 2;
inline constexpr unsigned kExactMaxDegree = 4;

struct RelationCertificate {
    SigmaPoly generator;
    std::string provenance;
    unsigned n = 0;
    VerifyPolicy policy;
    std::vector<std::uint64_t> seeds;
    Verdict verdict = Verdict::verified_zero;
    std::optional<MatrixAssignment<Rational>> witness;
    std::string witness_value;  // nonzero value at the witness
};

/// Matrix for letter k in trial seed s: random_matrix(n, derive_seed(s, k), bound).
std::uint64_t derive_seed(std::uint64_t trial_seed, std::uint32_t letter);

/// Throws std::invalid_argument when exact mode exceeds its caps.
RelationCertificate verify(const SigmaPoly& p, unsigned n, const VerifyPolicy& policy);

/// Verifies each generator independently on up to `threads` workers (0: one
/// per hardware thread). Results keep the input order and carry provenance.
std::vector<RelationCertificate> verify_all(const std::vector<RelationGenerator>& gens, unsigned n,
                                            const VerifyPolicy& policy, const Alphabet& a, unsigned threads = 0);

/// Maximum degree over the monomials of p.
unsigned total_degree(const SigmaPoly& p);

nlohmann::json to_json(const RelationCertificate& c, const Alphabet& a);

}  // namespace sigmainv
