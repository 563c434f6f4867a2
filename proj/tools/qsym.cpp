#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <future>
#include <iostream>
#include <json.hpp>
#include <random>
#include <thread>

#include "qsym/io.hpp"
#include "qsym/representation.hpp"

using namespace qsym;
using nlohmann::json;

namespace {

const char* kVersion = "1.0.0";

struct RunConfig {
    std::string command;
    std::string input;
    std::string mode = "quasi";
    std::string format = "json";
    std::string weight;
    std::string poly;
    uint64_t seed = 20240101;
    int max_degree = 3;
    int cap = 200;
    int jobs = 0;
    int n_max = 4;
    int samples = 25;
    int mutate_xi = 0;
    bool close = false;
    bool timing = false;
};

struct Bad : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// run tasks on up to n threads, results in task order
template <class T>
std::vector<T> run_all(int n, std::vector<std::function<T()>> tasks) {
    std::vector<T> out(tasks.size());
    if (n <= 1) {
        for (size_t k = 0; k < tasks.size(); ++k) out[k] = tasks[k]();
        return out;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex mu;
    for (int t = 0; t < n; ++t)
        pool.emplace_back([&] {
            for (size_t k; (k = next++) < tasks.size();) {
                try {
                    out[k] = tasks[k]();
                } catch (...) {
                    std::lock_guard<std::mutex> g(mu);
                    if (!err) err = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    return out;
}

std::vector<long> parse_weight(const std::string& s) {
    std::vector<long> w;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            w.push_back(std::stol(tok, &used));
            if (used != tok.size()) throw Bad("bad weight entry " + tok);
        } catch (const std::logic_error&) {
            throw Bad("bad weight entry " + tok);
        }
    }
    return w;
}

json cartan_json(const CartanData& cd) { return {{"cartan", cd.C}, {"symmetrizer", cd.D}}; }

json check_list(const std::vector<CheckResult>& cs) {
    json a = json::array();
    for (auto& c : cs) a.push_back(to_json(c));
    return a;
}

bool checks_pass(const json& checks) {
    for (auto& c : checks)
        if (c.at("status") != "pass") return false;
    return true;
}

WeightData weight_for(const InputDoc& doc, const RunConfig& rc) {
    std::vector<long> w;
    if (!rc.weight.empty()) w = parse_weight(rc.weight);
    else if (doc.weight) w = *doc.weight;
    else throw Bad("a weight is required (--weight or input field)");
    if (static_cast<int>(w.size()) != doc.cartan.rank()) throw Bad("weight length mismatch");
    for (long x : w)
        if (x > 0) throw Bad("weight entries must be nonpositive");
    return make_weight(doc.cartan, w);
}

// verify-hopf: structure identities of the engine on words of length <= max_degree
json cmd_verify_hopf(const InputDoc& doc, const RunConfig& rc, json& extra) {
    AlgebraConfig cfg(doc.cartan, Variant::Standard);
    PairSpec spec = PairSpec::standard(cfg, parse_mode(rc.mode));
    std::vector<Word> words{{}};
    for (int l = 1; l <= rc.max_degree; ++l) {
        std::vector<Word> next;
        for (auto& w : words)
            if (static_cast<int>(w.size()) == l - 1)
                for (int x = 0; x < cfg.alphabet_size(); ++x) {
                    Word v = w;
                    v.push_back(x);
                    next.push_back(v);
                }
        words.insert(words.end(), next.begin(), next.end());
    }
    extra["words"] = words.size();
    auto S = std::make_shared<Antipode>(cfg, spec);
    std::vector<std::function<CheckResult()>> tasks;
    tasks.push_back([&] {
        CheckResult c{"coassociativity", true, ""};
        for (auto& w : words)
            if (delta_delta_left(Element::word(cfg, w)) != delta_delta_right(Element::word(cfg, w))) {
                c.pass = false;
                c.witness = term_str(cfg, Term{w, cfg.unit()});
                break;
            }
        return c;
    });
    tasks.push_back([&] {
        CheckResult c{"counit", true, ""};
        for (auto& w : words) {
            Element x = Element::word(cfg, w);
            Tensor d = coproduct(x);
            if (counit_left(d) != x || counit_right(d) != x) {
                c.pass = false;
                c.witness = term_str(cfg, Term{w, cfg.unit()});
                break;
            }
        }
        return c;
    });
    tasks.push_back([&] {
        CheckResult c{"antipode", true, ""};
        for (auto& w : words) {
            Element x = Element::word(cfg, w);
            Element l(&cfg), r(&cfg);
            for (auto& [k, co] : coproduct(x).terms()) {
                Element a = Element::word(cfg, k.first.w, k.first.t), b = Element::word(cfg, k.second.w, k.second.t);
                l.add_scaled(multiply((*S)(a), b, spec), co);
                r.add_scaled(multiply(a, (*S)(b), spec), co);
            }
            Element want = Element::one(cfg) * counit(x);
            if (l != want || r != want) {
                c.pass = false;
                c.witness = term_str(cfg, Term{w, cfg.unit()});
                break;
            }
        }
        return c;
    });
    tasks.push_back([&] {
        CheckResult c{"bialgebra", true, ""};
        QuantumGroupModel m(cfg, spec.mode);
        auto gens = m.generators();
        std::mt19937_64 rng(rc.seed);
        std::vector<std::pair<Element, Element>> pairs;
        for (auto& a : gens)
            for (auto& b : gens) pairs.push_back({a.second, b.second});
        for (int k = 0; k < rc.samples; ++k)
            pairs.push_back({random_engine_element(cfg, rng, 2, 2), random_engine_element(cfg, rng, 1, 2)});
        for (auto& [a, b] : pairs)
            if (coproduct(multiply(a, b, spec)) != multiply(coproduct(a), coproduct(b), spec)) {
                c.pass = false;
                c.witness = a.str() + " | " + b.str();
                break;
            }
        return c;
    });
    tasks.push_back([&] {
        QuantumGroupModel m(cfg, spec.mode);
        auto rep = associativity_suite(m, rc.seed, rc.samples, spec.mode == Mode::Quotient);
        return CheckResult{"associativity", rep.failures == 0, rep.first_failure};
    });
    return check_list(run_all<CheckResult>(rc.jobs, tasks));
}

json cmd_verify_pair(const InputDoc& doc, const RunConfig& rc, json& extra) {
    AlgebraConfig base(doc.cartan, Variant::Standard);
    AlgebraConfig cfg = rc.mutate_xi ? base.with_xi_degree(rc.mutate_xi) : base;
    Mode mode = parse_mode(rc.mode);
    if (mode == Mode::Quotient || mode == Mode::QuotientLiteral) mode = Mode::Quasi;
    extra["mutated_xi_degree"] = rc.mutate_xi;
    auto res = validate_pair(cfg, PairSpec::standard(cfg, mode));
    json checks = check_list(res);
    if (rc.mutate_xi) {
        // residual of the left comodule identity on (E_1, F_1)
        int i = 0;
        Torus want = torus_add(cfg.letter(cfg.E(i)).degree, cfg.letter(cfg.F(i)).degree);
        Torus got = cfg.letter(cfg.XI(i)).degree;
        Tensor lhs(&cfg), rhs(&cfg);
        Scalar a = cfg.qi_diff(i).inverse();
        lhs.add(Term{{}, got}, Term{{cfg.XI(i)}, cfg.unit()}, a);
        rhs.add(Term{{}, want}, Term{{cfg.XI(i)}, cfg.unit()}, a);
        Tensor r = lhs - rhs;
        json res_j = json::array();
        for (auto& [k, c] : r.terms())
            res_j.push_back({{"coeff", c.str()}, {"left_torus", k.first.t}, {"right_word", json::array({cfg.letter(k.second.w[0]).name})}});
        extra["residual"] = res_j;
    }
    return checks;
}

json relation_list(const RelationReport& r) {
    json a = json::array();
    for (auto& x : r) a.push_back(to_json(x));
    return a;
}

json cmd_verify_qgroup(const InputDoc& doc, const RunConfig& rc, json& extra) {
    AlgebraConfig cfg(doc.cartan, Variant::Standard);
    QuantumGroupModel m(cfg, parse_mode(rc.mode));
    QuantumGroupModel quasi(cfg, Mode::Quasi);
    int n = cfg.rank();
    std::vector<std::function<RelationReport()>> tasks;
    tasks.push_back([&] { return relation_suite(m); });
    for (int side = 0; side < 2; ++side)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) tasks.push_back([&quasi, i, j, side] { return RelationReport{serre_check(quasi, i, j, side == 1)}; });
    tasks.push_back([&] { return xi_ideal_check(cfg); });
    RelationReport all;
    for (auto& r : run_all<RelationReport>(rc.jobs, tasks)) all.insert(all.end(), r.begin(), r.end());
    extra["relations"] = relation_list(all);
    json checks = json::array();
    checks.push_back({{"check", "relations"}, {"status", all_pass(all) ? "pass" : "fail"}});
    if (m.mode() == Mode::Quotient || m.mode() == Mode::QuotientLiteral) {
        auto a = associativity_suite(m, rc.seed, rc.samples, true);
        json c = {{"check", "quotient associativity"}, {"status", a.failures ? "fail" : "pass"}};
        if (a.failures) c["witness"] = a.first_failure;
        extra["associativity"] = {{"generator_triples", a.generator_triples}, {"random_triples", a.random_triples},
                                  {"failures", a.failures}};
        checks.push_back(c);
    }
    return checks;
}

json character_json(const CharacterTable& ct) {
    json a = json::array();
    for (auto& [w, mult] : ct) {
        json wj = json::array();
        for (auto& x : w) wj.push_back(x.get_str());
        a.push_back({{"weight", wj}, {"multiplicity", mult}});
    }
    return a;
}

std::string weight_str(const Weight& w) {
    std::string s;
    for (size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + w[k].get_str();
    return s;
}

json cmd_build_rep(const InputDoc& doc, const RunConfig& rc, json& extra, std::string& tsv) {
    WeightData w = weight_for(doc, rc);
    AlgebraConfig cfg(doc.cartan, Variant::HighestWeight, w);
    Mode mode = parse_mode(rc.mode == "quasi" ? "quotient" : rc.mode);
    ModuleBasis mb = generate_module(cfg, rc.cap, mode);
    json checks = json::array();
    extra["weight"] = w.coroot;
    extra["root_order"] = cfg.field().root_order();
    extra["closed"] = mb.closed;
    if (!mb.closed) {
        // expected for affine types, a failure for finite ones
        extra["dimension"] = nullptr;
        extra["result"] = "not closed within cap";
        checks.push_back({{"check", "closure"}, {"status", doc.cartan.finite_type() ? "fail" : "pass"},
                          {"witness", "cap " + std::to_string(rc.cap)}});
        return checks;
    }
    extra["dimension"] = mb.dimension();
    CharacterTable ct = weight_character(mb);
    extra["character"] = character_json(ct);
    for (auto& [wt, mult] : ct) tsv += weight_str(wt) + "\t" + std::to_string(mult) + "\n";
    if (doc.cartan.finite_type()) {
        std::vector<long> dom;
        for (long x : w.coroot) dom.push_back(-x);
        long d = weyl_dim_oracle(doc.cartan, dom);
        extra["weyl_dimension"] = d;
        checks.push_back({{"check", "weyl dimension"}, {"status", d == static_cast<long>(mb.dimension()) ? "pass" : "fail"}});
    }
    checks.push_back({{"check", "coinvariant basis"}, {"status", mb.coinvariant ? "pass" : "fail"}});
    auto hw = highest_weight_checks(cfg, mode);
    for (auto& c : hw.checks) checks.push_back(to_json(c));
    extra["vanishing_threshold"] = hw.vanishing_threshold;
    for (auto& c : operator_relations(mb)) checks.push_back(to_json(c));
    checks.push_back({{"check", "unique highest line"}, {"status", highest_line_unique(mb) ? "pass" : "fail"}});
    json mats;
    for (auto& [name, M] : mb.action) mats[name] = matrix_json(M);
    extra["matrices"] = mats;
    json basis = json::array();
    for (auto& b : mb.basis) basis.push_back(to_json(b));
    extra["basis"] = basis;
    return checks;
}

json cmd_double_check(const InputDoc& doc, const RunConfig& rc, json& extra) {
    WeightData w = weight_for(doc, rc);
    bool close = rc.close || doc.cartan.rank() == 1;
    auto rep = double_module_check(doc.cartan, w, rc.n_max, close, rc.cap);
    json lines = json::array();
    for (auto& l : rep.lines) {
        lines.push_back({{"side", l.side}, {"i", l.i + 1}, {"n", l.n}, {"expected_coeff", l.expected.str()},
                         {"computed_coeff", l.computed_coeff.str()}, {"computed", l.computed}, {"match", l.match},
                         {"matches_displayed_form", l.matches_displayed}});
    }
    extra["lines"] = lines;
    extra["e_vanishing"] = rep.e_vanishing;
    extra["f_vanishing"] = rep.f_vanishing;
    if (close) {
        extra["closure_dimension"] = rep.closure_dimension;
        extra["expected_closure"] = rep.expected_closure;
    }
    return check_list(rep.checks);
}

json cmd_unique_ideal(const RunConfig& rc, json& extra) {
    if (rc.poly.empty()) throw Bad("--poly is required");
    Laurent p;
    try {
        p = parse_laurent(rc.poly);
    } catch (const ConfigError& e) {
        throw Bad(e.what());
    }
    bool adm = substitution_admissibility(p);
    extra["poly"] = rc.poly;
    extra["admissible"] = adm;
    json checks = json::array();
    checks.push_back({{"check", "coefficient test agrees with family"},
                      {"status", adm == in_scaled_family(p) ? "pass" : "fail"}});
    return checks;
}

json cmd_oracle_dim(const InputDoc& doc, const RunConfig& rc, json& extra) {
    WeightData w = weight_for(doc, rc);
    std::vector<long> dom;
    for (long x : w.coroot) dom.push_back(-x);
    extra["dimension"] = weyl_dim_oracle(doc.cartan, dom);
    return json::array();
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig rc;
    CLI::App app{"exact symbolic engine for quantum quasi-shuffle Hopf algebras"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    const std::vector<std::string> names{"verify-hopf", "verify-pair", "verify-qgroup", "build-rep",
                                         "double-check", "unique-ideal", "oracle-dim"};
    for (auto& n : names) {
        auto* sc = app.add_subcommand(n);
        if (n != "unique-ideal") sc->add_option("--input", rc.input, "input JSON")->required();
        sc->add_option("--seed", rc.seed, "random seed");
        sc->add_option("--mode", rc.mode, "shuffle | quasi | quotient | quotient_literal")
            ->check(CLI::IsMember({"shuffle", "quasi", "quotient", "quotient_literal"}));
        sc->add_option("--format", rc.format)->check(CLI::IsMember({"json", "tsv"}));
        sc->add_option("--jobs", rc.jobs, "worker threads");
        sc->add_option("--max-degree", rc.max_degree, "word length bound (<= 6)");
        sc->add_option("--cap", rc.cap, "dimension cap");
        sc->add_option("--samples", rc.samples, "random samples");
        sc->add_flag("--timing", rc.timing, "include wall time in the report");
        if (n == "build-rep" || n == "double-check" || n == "oracle-dim")
            sc->add_option("--weight", rc.weight, "comma separated lambda_i, nonpositive")->allow_extra_args(false);
        if (n == "double-check") {
            sc->add_option("--n-max", rc.n_max);
            sc->add_flag("--close", rc.close, "close the module (default for rank 1)");
        }
        if (n == "verify-pair") sc->add_option("--mutate-xi-degree", rc.mutate_xi, "give xi_i degree K_i^p");
        if (n == "unique-ideal") sc->add_option("--poly", rc.poly, "Laurent polynomial in K")->required();
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    for (auto* sc : app.get_subcommands()) rc.command = sc->get_name();
    if (rc.jobs <= 0) {
        const char* env = std::getenv("QSYM_JOBS");
        rc.jobs = env ? std::max(1, std::atoi(env)) : 1;
    }

    auto t0 = std::chrono::steady_clock::now();
    json report;
    report["tool"] = "qsym";
    report["version"] = kVersion;
    report["command"] = rc.command;
    json extra = json::object();
    json checks;
    std::string tsv;
    try {
        if (rc.max_degree < 0 || rc.max_degree > 6) throw Bad("max-degree must be between 0 and 6");
        InputDoc doc;
        if (!rc.input.empty()) {
            doc = load_input(rc.input);
            report["config"] = cartan_json(doc.cartan);
            report["config"]["variant"] = variant_name(doc.variant);
            if (doc.weight) report["config"]["weight"] = *doc.weight;
        } else {
            report["config"] = json::object();
        }
        report["config"]["mode"] = rc.mode;
        report["config"]["seed"] = rc.seed;
        if (rc.command == "verify-hopf") checks = cmd_verify_hopf(doc, rc, extra);
        else if (rc.command == "verify-pair") checks = cmd_verify_pair(doc, rc, extra);
        else if (rc.command == "verify-qgroup") checks = cmd_verify_qgroup(doc, rc, extra);
        else if (rc.command == "build-rep") checks = cmd_build_rep(doc, rc, extra, tsv);
        else if (rc.command == "double-check") checks = cmd_double_check(doc, rc, extra);
        else if (rc.command == "unique-ideal") checks = cmd_unique_ideal(rc, extra);
        else checks = cmd_oracle_dim(doc, rc, extra);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Bad& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    for (auto& [k, v] : extra.items()) report[k] = v;
    report["checks"] = checks;
    bool ok = checks_pass(checks);
    report["status"] = ok ? "pass" : "fail";
    if (rc.timing) report["wall_time_ms"] = static_cast<long>(ms);
    std::cerr << "wall time " << static_cast<long>(ms) << " ms\n";
    if (rc.format == "tsv") {
        if (rc.command == "build-rep" && !tsv.empty()) {
            std::cout << tsv;
        } else {
            for (auto& c : checks) std::cout << c.at("check").get<std::string>() << "\t" << c.at("status").get<std::string>() << "\n";
            for (auto& [k, v] : extra.items())
                if (v.is_primitive()) std::cout << k << "\t" << v.dump() << "\n";
        }
    } else {
        std::cout << report.dump(2) << "\n";
    }
    return ok ? 0 : 1;
}
