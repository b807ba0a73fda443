#include "sigmainv/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "sigmainv/matrix_eval.hpp"
#include "sigmainv/quiver.hpp"
#include "sigmainv/relations.hpp"
#include "sigmainv/sigma_tr.hpp"
#include "sigmainv/tableau.hpp"

namespace sigmainv::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string join_args(const std::vector<std::string>& args) {
    std::string s = "sigmainv";
    for (const auto& a : args) {
        const bool quote = a.find_first_of(" []'*") != std::string::npos;
        s += " " + (quote ? "\"" + a + "\"" : a);
    }
    return s;
}

// x1..x256 so that index arithmetic (x_{i + j d}) is visible in names.
Alphabet indexed_x() {
    std::vector<std::string> names;
    for (int i = 1; i <= 256; ++i) names.push_back("x" + std::to_string(i));
    return Alphabet(std::move(names));
}

std::string read_text(const std::string& path_or_text) {
    std::ifstream in(path_or_text);
    if (!in) return path_or_text;
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SigmaPoly read_poly(const std::string& source, Alphabet& a) {
    const auto text = read_text(source);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        const auto j = json::parse(text);
        if (j.contains("terms")) return sigma_poly_from_json(j, a);
        if (j.contains("generator")) return parse_sigma_poly(j.at("generator").get<std::string>(), a);
        throw UsageError("generator JSON needs 'terms' or 'generator'");
    }
    std::string trimmed = text;
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.pop_back();
    return parse_sigma_poly(trimmed, a);
}

std::vector<unsigned> parse_uint_list(const std::string& text) {
    std::vector<unsigned> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
            throw UsageError("expected a comma-separated list of nonnegative integers, got '" + text + "'");
        }
        out.push_back(static_cast<unsigned>(std::stoul(item)));
    }
    return out;
}

template <class Scalar>
std::string scalar_text(const Scalar& s) {
    return to_string(s);
}

// Output helper: text lines or one JSON document.
struct Printer {
    std::ostream& out;
    bool as_json;
    json doc = json::object();

    void line(const std::string& s) const {
        if (!as_json) out << s << "\n";
    }
    void finish() const {
        if (as_json) out << doc.dump(2) << "\n";
    }
};

std::vector<Matrix<Rational>> seeded_matrices(unsigned n, unsigned count, std::uint64_t seed, unsigned bound) {
    std::vector<Matrix<Rational>> out;
    for (std::uint32_t k = 1; k <= count; ++k) out.push_back(random_matrix(n, derive_seed(seed, k), bound));
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Symbolic invariants of matrices under O(n) and GL(n)", "sigmainv"};
    app.require_subcommand(1);
    bool as_json = false;
    std::string field_text = "Q";
    app.add_flag("--json", as_json, "Structured output");
    app.add_option("--field", field_text, "Q (default) or fp:<p> for an odd prime p");

    // canon
    auto* canon = app.add_subcommand("canon", "Canonical cycle and power of a word");
    std::string canon_word;
    canon->add_option("word", canon_word, "Word such as \"[x1 y1' z1]\"")->required();

    // cycles
    auto* cycles = app.add_subcommand("cycles", "Primitive closed paths of the mixed quiver Q(u,v,w)");
    unsigned qu = 1, qv = 1, qw = 1;
    std::string bound_text;
    cycles->add_option("-u", qu, "Number of loops x_i");
    cycles->add_option("-v", qv, "Number of arrows y_j");
    cycles->add_option("-w", qw, "Number of arrows z_k");
    cycles->add_option("--bound", bound_text, "Multidegree bound, comma-separated")->required();

    // amitsur
    auto* amitsur = app.add_subcommand("amitsur", "Expand s_t of a linear combination");
    unsigned am_t = 1;
    std::string am_arg;
    amitsur->add_option("-t", am_t, "Index t >= 1")->required();
    amitsur->add_option("--arg", am_arg, "Linear combination such as \"[x1] + 2*[x2 x1']\"")->required();

    // power
    auto* power = app.add_subcommand("power", "P_{t,l}: s_t(a^l) in s_1(a), s_2(a), ...");
    unsigned pw_t = 1, pw_l = 2;
    power->add_option("-t", pw_t, "Index t >= 1")->required();
    power->add_option("-l", pw_l, "Power l >= 2")->required();

    // sigma-tr
    auto* sigma = app.add_subcommand("sigma-tr", "sigma_{t,r}, its linearizations and substitutions");
    unsigned sg_t = 0, sg_r = 0;
    std::vector<std::string> sg_subst;
    std::string sg_key;
    bool sg_lin = false, sg_large = false;
    sigma->add_option("-t", sg_t, "t >= 0");
    sigma->add_option("-r", sg_r, "r >= 0");
    sigma->add_option("--subst", sg_subst, "x=<lincomb>, y=<lincomb> or z=<lincomb>");
    sigma->add_option("--key", sg_key, "Partial linearization \"t1,t2;r1;s1\"");
    sigma->add_flag("--lin", sg_lin, "Multilinear sigma^lin with u = t, v = r");
    sigma->add_flag("--allow-large", sg_large, "Lift the t + 2r <= 10 guard");

    // lin
    auto* linc = app.add_subcommand("lin", "Complete linearization over x_{i + j d}");
    unsigned ln_d = 1;
    std::string ln_poly;
    linc->add_option("-d", ln_d, "Number of letters d")->required();
    linc->add_option("poly", ln_poly, "Polynomial such as \"s2[x1]\"")->required();

    // dp
    auto* dpc = app.add_subcommand("dp", "DP_{r,r}(X,Y,Z) on seeded random matrices");
    unsigned dp_r = 1, dp_n = 2, dp_bound = 10;
    std::uint64_t dp_seed = 1;
    dpc->add_option("-r", dp_r, "r")->required();
    dpc->add_option("-n", dp_n, "Matrix size n >= 2r")->required();
    dpc->add_option("--seed", dp_seed, "Seed");
    dpc->add_option("--entry-bound", dp_bound, "Entries in [-b, b]");

    // bpf
    auto* bpfc = app.add_subcommand("bpf", "bpf of T_{t,r} and its decomposition");
    unsigned bp_t = 1, bp_r = 1, bp_bound = 10;
    std::uint64_t bp_seed = 1;
    bool bp_multi = false, bp_dec = false;
    bpfc->add_option("-t", bp_t, "t");
    bpfc->add_option("-r", bp_r, "r");
    bpfc->add_option("--seed", bp_seed, "Seed");
    bpfc->add_option("--entry-bound", bp_bound, "Entries in [-b, b]");
    bpfc->add_flag("--multilinear", bp_multi, "Distinct label for every arrow");
    bpfc->add_flag("--decompose", bp_dec, "Also print the decomposition and its sign checks");

    // relations
    auto* rel = app.add_subcommand("relations", "Relation generators for O(n) (or GL(n))");
    unsigned rl_n = 2, rl_d = 1, rl_deg = 0, rl_trials = 20, rl_cap = 3;
    std::uint64_t rl_seed = 1;
    std::string rl_verify, rl_out, rl_group = "O";
    rel->add_option("-n", rl_n, "Matrix size")->required();
    rel->add_option("-d", rl_d, "Number of letters")->required();
    rel->add_option("--max-deg", rl_deg, "Total degree bound (default n + 4)");
    rel->add_option("--word-cap", rl_cap, "Degree cap for argument words");
    rel->add_option("--group", rl_group, "O or GL")->check(CLI::IsMember({"O", "GL"}));
    rel->add_option("--verify", rl_verify, "randomized or exact")->check(CLI::IsMember({"randomized", "exact"}));
    rel->add_option("--trials", rl_trials, "Random trials per generator");
    rel->add_option("--seed", rl_seed, "First trial seed");
    rel->add_option("--out", rl_out, "Write certificates (JSON) to this file");

    // verify
    auto* ver = app.add_subcommand("verify", "Check that a polynomial vanishes on n x n matrices");
    std::string vf_gen, vf_mode = "randomized";
    unsigned vf_n = 2, vf_trials = 20, vf_bound = 10;
    std::uint64_t vf_seed = 1;
    ver->add_option("--gen", vf_gen, "Polynomial text, or a file with text or JSON")->required();
    ver->add_option("-n", vf_n, "Matrix size")->required();
    ver->add_option("--trials", vf_trials, "Random trials");
    ver->add_option("--seed", vf_seed, "First trial seed");
    ver->add_option("--entry-bound", vf_bound, "Entries in [-b, b]");
    ver->add_option("--mode", vf_mode, "randomized or exact")->check(CLI::IsMember({"randomized", "exact"}));

    // eval
    auto* ev = app.add_subcommand("eval", "Evaluate a polynomial on matrices from a JSON file");
    std::string ev_poly, ev_assign;
    ev->add_option("--poly", ev_poly, "Polynomial text or file")->required();
    ev->add_option("--assign", ev_assign, "JSON: {\"field\":..,\"matrices\":{\"x1\":{..}}}")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Printer pr{out, as_json};
    const std::string replay = join_args(args);
    try {
        const FieldSpec field = parse_field(field_text);
        if (!field.is_q()) pr.doc["field"] = "fp:" + std::to_string(field.p);

        if (canon->parsed()) {
            Alphabet a;
            const Word w = parse_word(canon_word, a);
            const auto form = canonicalize(w);
            const auto text = to_string(form.cycle.word(), a);
            pr.doc.update(json{{"command", "canon"}, {"input", to_string(w, a)}, {"cycle", text},
                               {"power", form.power}, {"primitive", form.power == 1}});
            pr.line(form.power == 1 ? text : text + "^" + std::to_string(form.power));
        } else if (cycles->parsed()) {
            const auto q = build_Q(qu, qv, qw);
            const auto bound = parse_uint_list(bound_text);
            if (bound.size() != q.letter_count()) {
                throw UsageError("--bound needs " + std::to_string(q.letter_count()) + " entries");
            }
            const auto a = q.alphabet();
            auto list = json::array();
            for (const auto& c : enumerate_cycles(q, bound)) {
                std::string md;
                for (std::size_t i = 0; i < c.mdeg.size(); ++i) md += (i ? "," : "") + std::to_string(c.mdeg[i]);
                pr.line(to_string(c.cycle.word(), a) + "  mdeg=(" + md + ")");
                list.push_back({{"cycle", to_string(c.cycle.word(), a)}, {"mdeg", c.mdeg}});
            }
            pr.doc.update(json{{"command", "cycles"}, {"u", qu}, {"v", qv}, {"w", qw}, {"bound", bound},
                               {"cycles", list}});
        } else if (amitsur->parsed()) {
            Alphabet a;
            const auto arg = parse_lincomb(am_arg, a);
            const auto p = normalize(am_t, arg);
            pr.line(to_string(p, a));
            pr.doc.update(json{{"command", "amitsur"}, {"t", am_t}, {"arg", to_string(arg, a)},
                               {"poly", to_string(p, a)}, {"terms", to_json(p, a)["terms"]}});
        } else if (power->parsed()) {
            if (pw_t == 0 || pw_l < 2) throw UsageError("power needs t >= 1 and l >= 2");
            const Alphabet a({"a"});
            const auto p = power_reduce(pw_t, pw_l);
            pr.line(to_string(p, a));
            pr.doc.update(json{{"command", "power"}, {"t", pw_t}, {"l", pw_l}, {"poly", to_string(p, a)},
                               {"terms", to_json(p, a)["terms"]}});
        } else if (sigma->parsed()) {
            SigmaPoly p;
            Alphabet a = Alphabet::xyz();
            json info{{"command", "sigma-tr"}};
            if (!sg_key.empty()) {
                std::vector<std::string> parts;
                std::stringstream ss(sg_key);
                std::string item;
                while (std::getline(ss, item, ';')) parts.push_back(item);
                if (parts.size() != 3) throw UsageError("--key needs three ';'-separated lists");
                MultiKey key{parse_uint_list(parts[0]), parse_uint_list(parts[1]), parse_uint_list(parts[2])};
                a = Alphabet::xyz(static_cast<unsigned>(key.t.size()), static_cast<unsigned>(key.r.size()),
                                  static_cast<unsigned>(key.s.size()));
                p = sigma_partial(key, sg_large);
                info["key"] = {{"t", key.t}, {"r", key.r}, {"s", key.s}};
            } else if (sg_lin) {
                a = Alphabet::xyz(sg_t, sg_r, sg_r);
                p = sigma_lin(sg_t, sg_r, sg_large);
                info.update(json{{"t", sg_t}, {"r", sg_r}, {"lin", true}});
            } else {
                info.update(json{{"t", sg_t}, {"r", sg_r}});
                if (sg_subst.empty()) {
                    p = sigma_tr(sg_t, sg_r, sg_large);
                } else {
                    Alphabet sub;
                    std::map<char, LinComb> images;
                    for (const auto& s : sg_subst) {
                        if (s.size() < 3 || s[1] != '=' || std::string("xyz").find(s[0]) == std::string::npos) {
                            throw UsageError("--subst expects x=<lincomb>, y=<lincomb> or z=<lincomb>");
                        }
                        images[s[0]] = parse_lincomb(s.substr(2), sub);
                    }
                    auto image = [&](char c, bool needed) {
                        if (auto it = images.find(c); it != images.end()) return it->second;
                        if (needed) throw UsageError(std::string("--subst is missing ") + c + "=...");
                        return LinComb(Word{Letter{1, false}});
                    };
                    p = sigma_tr_subst(sg_t, sg_r, image('x', sg_t > 0), image('y', sg_r > 0), image('z', sg_r > 0),
                                       sg_large);
                    a = sub;
                    json subst = json::object();
                    for (const auto& [c, lc] : images) subst[std::string(1, c)] = to_string(lc, sub);
                    info["subst"] = subst;
                }
            }
            pr.line(to_string(p, a));
            info.update(json{{"poly", to_string(p, a)}, {"terms", to_json(p, a)["terms"]}});
            pr.doc.update(info);
        } else if (linc->parsed()) {
            Alphabet a = indexed_x();
            const auto p = parse_sigma_poly(ln_poly, a, false);
            const auto l = lin(p, ln_d);
            pr.line(to_string(l, a));
            auto stats = json::array();
            for (const auto& [m, c] : l.terms()) {
                const auto s = multiplicity_stats(m);
                stats.push_back({{"coeff", to_string(c)}, {"c_f", s.c.str()}, {"e_f", s.e}});
            }
            pr.doc.update(json{{"command", "lin"}, {"d", ln_d}, {"input", to_string(p, a)},
                               {"poly", to_string(l, a)}, {"terms", to_json(l, a)["terms"]}, {"stats", stats}});
        } else if (dpc->parsed()) {
            if (dp_n < 2 * dp_r || dp_n == 0) throw UsageError("dp needs n >= 2r and n >= 1");
            const unsigned t0 = dp_n - 2 * dp_r;
            const auto m = seeded_matrices(dp_n, 3, dp_seed, dp_bound);
            const MatrixAssignment<Rational> assign{{1, m[0]}, {2, m[1]}, {3, m[2]}};
            std::string value, sigma_value;
            if (field.is_q()) {
                value = to_string(dp(dp_r, m[0], m[1], m[2]));
                sigma_value = to_string(eval_poly(sigma_tr(t0, dp_r), dp_n, assign));
            } else {
                value = to_string(dp(dp_r, reduce_mod(m[0], field.p), reduce_mod(m[1], field.p), reduce_mod(m[2], field.p)));
                sigma_value = to_string(eval_poly(sigma_tr(t0, dp_r), dp_n, reduce_mod(assign, field.p)));
            }
            pr.line("DP_{" + std::to_string(dp_r) + "," + std::to_string(dp_r) + "} = " + value);
            pr.line("sigma_{" + std::to_string(t0) + "," + std::to_string(dp_r) + "} = " + sigma_value);
            pr.line("# replay: " + replay);
            pr.doc.update(json{{"command", "dp"}, {"r", dp_r}, {"n", dp_n}, {"seed", dp_seed},
                               {"entry_bound", dp_bound}, {"dp", value}, {"sigma_tr", sigma_value},
                               {"agree", value == sigma_value}, {"replay", replay}});
        } else if (bpfc->parsed()) {
            const auto t = bp_multi ? build_T_multilinear(bp_t, bp_r) : build_T(bp_t, bp_r);
            const unsigned n = t.n();
            const auto m = seeded_matrices(n, t.label_count(), bp_seed, bp_bound);
            std::string restricted, qform;
            if (field.is_q()) {
                restricted = to_string(bpf(t, m));
                qform = to_string(bpf_q_form(t, m));
            } else {
                std::vector<Matrix<Fp>> mf;
                for (const auto& x : m) mf.push_back(reduce_mod(x, field.p));
                restricted = to_string(bpf(t, mf));
                qform = to_string(bpf_q_form(t, mf));
            }
            pr.line("bpf = " + restricted);
            pr.line("bpf (full sum / symmetry) = " + qform);
            json info{{"command", "bpf"}, {"t", bp_t}, {"r", bp_r}, {"multilinear", bp_multi}, {"n", n},
                      {"seed", bp_seed}, {"entry_bound", bp_bound}, {"bpf", restricted}, {"bpf_q_form", qform}};
            if (bp_dec) {
                const auto rep = decompose_checked(t);
                const auto a = bp_multi ? Alphabet::xyz(bp_t, bp_r, bp_r) : Alphabet::xyz();
                pr.line("decomposition = " + to_string(rep.poly, a));
                pr.line("admissible pairs = " + std::to_string(rep.admissible_pairs) +
                        ", sign checks " + (rep.consistent() ? "agree" : "DISAGREE"));
                info["decomposition"] = to_string(rep.poly, a);
                info["admissible_pairs"] = rep.admissible_pairs;
                info["signs_agree"] = rep.consistent();
            }
            pr.line("# replay: " + replay);
            info["replay"] = replay;
            pr.doc.update(info);
        } else if (rel->parsed()) {
            const unsigned deg = rl_deg == 0 ? rl_n + 4 : rl_deg;
            GeneratorOptions opts;
            opts.word_degree_cap = rl_cap;
            const auto gens = rl_group == "GL" ? gl_relation_generators(rl_n, rl_d, deg, opts)
                                               : o_relation_generators(rl_n, rl_d, deg, opts);
            Alphabet a;
            for (std::uint32_t k = 1; k <= rl_d; ++k) a.index("x" + std::to_string(k), true);
            auto list = json::array();
            auto certs = json::array();
            std::size_t falsified = 0;
            std::vector<RelationCertificate> verified;
            if (!rl_verify.empty()) {
                VerifyPolicy pol;
                pol.mode = rl_verify == "exact" ? VerifyMode::exact : VerifyMode::randomized;
                pol.trials = rl_trials;
                pol.seed = rl_seed;
                pol.p = field.p;
                verified = verify_all(gens, rl_n, pol, a);
            }
            for (std::size_t i = 0; i < gens.size(); ++i) {
                const auto prov = gens[i].provenance(a);
                const auto text = to_string(gens[i].poly, a);
                json item{{"provenance", prov}, {"generator", text}};
                std::string line = prov + " = " + text;
                if (!verified.empty()) {
                    const auto& cert = verified[i];
                    falsified += cert.verdict == Verdict::falsified ? 1 : 0;
                    item["verdict"] = to_string(cert.verdict);
                    line += "  [" + to_string(cert.verdict) + "]";
                    certs.push_back(to_json(cert, a));
                }
                pr.line(line);
                list.push_back(std::move(item));
            }
            if (!rl_verify.empty()) {
                pr.line("# " + std::to_string(gens.size()) + " generators, " + std::to_string(falsified) +
                        " falsified");
                pr.line("# replay: " + replay);
            }
            if (!rl_out.empty()) {
                std::ofstream f(rl_out);
                if (!f) throw UsageError("cannot write " + rl_out);
                f << json{{"replay", replay}, {"certificates", certs}}.dump(2) << "\n";
            }
            pr.doc.update(json{{"command", "relations"}, {"group", rl_group}, {"n", rl_n}, {"d", rl_d},
                               {"max_deg", deg}, {"count", gens.size()}, {"generators", list}});
            if (!rl_verify.empty()) pr.doc.update(json{{"falsified", falsified}, {"replay", replay}});
            pr.finish();
            return falsified > 0 ? kExitFalsified : kExitOk;
        } else if (ver->parsed()) {
            Alphabet a;
            const auto p = read_poly(vf_gen, a);
            VerifyPolicy pol;
            pol.mode = vf_mode == "exact" ? VerifyMode::exact : VerifyMode::randomized;
            pol.trials = vf_trials;
            pol.seed = vf_seed;
            pol.entry_bound = vf_bound;
            pol.p = field.p;
            const auto cert = verify(p, vf_n, pol);
            pr.line("verdict: " + to_string(cert.verdict));
            if (cert.witness) {
                pr.line("witness value: " + cert.witness_value);
                for (const auto& [k, m] : *cert.witness) {
                    pr.line(a.name(k) + " =");
                    pr.line(field.is_q() ? to_string(m) : matrix_to_json(reduce_mod(m, field.p))["entries"].dump());
                }
            }
            pr.line("# replay: " + replay);
            pr.doc.update(to_json(cert, a));
            pr.doc["command"] = "verify";
            pr.doc["replay"] = replay;
            pr.finish();
            return cert.verdict == Verdict::falsified ? kExitFalsified : kExitOk;
        } else if (ev->parsed()) {
            Alphabet a;
            const auto p = read_poly(ev_poly, a);
            const auto doc = json::parse(read_text(ev_assign));
            FieldSpec file_field;
            if (doc.contains("field") && doc.at("field").get<std::string>() == "Fp") {
                file_field.p = doc.at("p").get<std::uint64_t>();
                require_odd_prime(file_field.p);
            }
            const FieldSpec use = field.is_q() ? file_field : field;
            MatrixAssignment<Rational> assign;
            unsigned n = 0;
            for (const auto& [name, m] : doc.at("matrices").items()) {
                const auto matrix = m.is_array() ? matrix_from_json(json{{"entries", m}}) : matrix_from_json(m);
                const auto k = a.index(name, true);
                if (n != 0 && matrix.rows() != n) throw UsageError("eval: matrices have different sizes");
                n = static_cast<unsigned>(matrix.rows());
                assign.emplace(k, matrix);
            }
            if (assign.empty()) throw UsageError("eval: no matrices given");
            for (std::uint32_t k = 1; k <= p.max_letter(); ++k) {
                if (!assign.count(k)) throw UsageError("eval: no matrix for letter " + a.name(k));
            }
            const auto value = use.is_q() ? to_string(eval_poly(p, n, assign))
                                          : to_string(eval_poly(p, n, reduce_mod(assign, use.p)));
            pr.line(value);
            pr.doc.update(json{{"command", "eval"}, {"poly", to_string(p, a)}, {"n", n},
                               {"field", use.is_q() ? "Q" : "fp:" + std::to_string(use.p)}, {"value", value}});
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const json::exception& e) {
        err << "error: malformed JSON: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        err << "error: size limit: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: unassigned or out-of-range letter: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: arithmetic: " << e.what() << "\n";
        return kExitUsage;
    }
    pr.finish();
    return kExitOk;
}

}  // namespace sigmainv::cli
