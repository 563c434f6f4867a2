// criteria 1-10, one line each
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <thread>

#include "qsym/representation.hpp"

using namespace qsym;

namespace {

CartanData A1() { return build_cartan_data({{2}}, {1}); }
CartanData A2() { return build_cartan_data({{2, -1}, {-1, 2}}, {1, 1}); }
CartanData B2() { return build_cartan_data({{2, -1}, {-2, 2}}, {2, 1}); }
CartanData G2() { return build_cartan_data({{2, -1}, {-3, 2}}, {3, 1}); }
CartanData A1A1() { return build_cartan_data({{2, 0}, {0, 2}}, {1, 1}); }
CartanData Affine() { return build_cartan_data({{2, -2}, {-2, 2}}, {1, 1}); }

struct Outcome {
    bool pass = true;
    std::string note;
    void fail(const std::string& s) {
        if (pass) note = s;
        pass = false;
    }
};

// runs f(k) for k < n on all cores, first failure wins
void parallel_for(size_t n, const std::function<void(size_t)>& f) {
    unsigned t = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < t; ++k)
        pool.emplace_back([&] {
            for (size_t i; (i = next++) < n;) f(i);
        });
    for (auto& th : pool) th.join();
}

std::vector<Word> words_upto(int letters, int len) {
    std::vector<Word> out{{}};
    for (size_t k = 0; k < out.size(); ++k)
        if (static_cast<int>(out[k].size()) < len)
            for (int x = 0; x < letters; ++x) {
                Word w = out[k];
                w.push_back(x);
                out.push_back(w);
            }
    return out;
}

Outcome hopf_suite() {
    Outcome o;
    AlgebraConfig c(A2(), Variant::Standard);
    PairSpec spec = PairSpec::standard(c, Mode::Quasi);
    Antipode S(c, spec);
    auto words = words_upto(c.alphabet_size(), 4);
    std::mutex mu;
    auto report = [&](const std::string& s) {
        std::lock_guard<std::mutex> g(mu);
        o.fail(s);
    };
    parallel_for(words.size(), [&](size_t k) {
        for (Torus t : {c.unit(), Torus{1, -1}}) {
            Element x = Element::word(c, words[k], t);
            std::string tag = term_str(c, Term{words[k], t});
            if (delta_delta_left(x) != delta_delta_right(x)) report("coassociativity " + tag);
            Tensor d = coproduct(x);
            if (counit_left(d) != x || counit_right(d) != x) report("counit " + tag);
            Element l(&c), r(&c);
            for (auto& [key, co] : d.terms()) {
                Element a = Element::word(c, key.first.w, key.first.t), b = Element::word(c, key.second.w, key.second.t);
                l.add_scaled(multiply(S(a), b, spec), co);
                r.add_scaled(multiply(a, S(b), spec), co);
            }
            Element want = Element::one(c) * counit(x);
            if (l != want || r != want) report("antipode " + tag);
        }
    });
    // bialgebra: all word pairs of total length <= 4, torus generators, random pairs
    std::vector<std::pair<Element, Element>> pairs;
    for (auto& u : words)
        for (auto& w : words)
            if (u.size() + w.size() <= 4) pairs.push_back({Element::word(c, u), Element::word(c, w)});
    QuantumGroupModel m(c, Mode::Quasi);
    for (auto& a : m.generators())
        for (auto& b : m.generators()) pairs.push_back({a.second, b.second});
    std::mt19937_64 rng(1);
    for (int k = 0; k < 50; ++k) pairs.push_back({random_engine_element(c, rng, 3), random_engine_element(c, rng, 3)});
    parallel_for(pairs.size(), [&](size_t k) {
        auto& [a, b] = pairs[k];
        if (coproduct(multiply(a, b, spec)) != multiply(coproduct(a), coproduct(b), spec))
            report("bialgebra " + a.str() + " | " + b.str());
    });
    if (o.pass) o.note = std::to_string(words.size()) + " words, " + std::to_string(pairs.size()) + " product pairs";
    return o;
}

Outcome associativity() {
    Outcome o;
    int triples = 0;
    for (auto cd : {A1(), A2(), B2(), A1A1()}) {
        AlgebraConfig c(cd, Variant::Standard);
        for (Mode mode : {Mode::Shuffle, Mode::Quasi, Mode::Quotient}) {
            auto r = associativity_suite(QuantumGroupModel(c, mode), 2024, 100, mode == Mode::Quotient);
            triples += r.generator_triples + r.random_triples;
            if (r.failures) o.fail(mode_name(mode) + " rank " + std::to_string(cd.rank()) + ": " + r.first_failure);
        }
    }
    if (o.pass) o.note = std::to_string(triples) + " triples";
    return o;
}

Outcome relations() {
    Outcome o;
    int n = 0;
    for (auto cd : {A1(), A2(), B2(), G2(), Affine()}) {
        AlgebraConfig c(cd, Variant::Standard);
        for (Mode mode : {Mode::Quasi, Mode::Quotient})
            for (auto& r : relation_suite(QuantumGroupModel(c, mode))) {
                ++n;
                if (!r.pass) o.fail(r.name);
            }
    }
    if (o.pass) o.note = std::to_string(n) + " relations, quasi and quotient";
    return o;
}

Outcome serre() {
    Outcome o;
    int count = 0;
    for (auto cd : {A2(), B2(), G2(), A1A1()}) {
        AlgebraConfig c(cd, Variant::Standard);
        QuantumGroupModel m(c, Mode::Quasi);
        std::vector<std::tuple<int, int, bool>> jobs;
        for (int side = 0; side < 2; ++side)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    if (i != j) jobs.push_back({i, j, side == 1});
        std::vector<Relation> res(jobs.size());
        parallel_for(jobs.size(), [&](size_t k) {
            auto [i, j, f] = jobs[k];
            res[k] = serre_check(m, i, j, f);
        });
        for (auto& r : res) {
            ++count;
            if (!r.pass) o.fail(r.name);
        }
    }
    if (o.pass) o.note = std::to_string(count) + " relations";
    return o;
}

Outcome shuffle() {
    Outcome o;
    AlgebraConfig c(A2(), Variant::Standard);
    PairSpec spec = PairSpec::standard(c, Mode::Shuffle);
    auto ws = words_upto(c.rank(), 3);
    for (auto& u : ws)
        for (auto& w : ws)
            if (multiply(Element::word(c, u), Element::word(c, w), spec) != shuffle_oracle(c, u, w))
                o.fail(term_str(c, Term{u, c.unit()}) + " * " + term_str(c, Term{w, c.unit()}));
    if (o.pass) o.note = std::to_string(ws.size() * ws.size()) + " pairs";
    return o;
}

struct Case {
    std::string name;
    CartanData cd;
    std::vector<long> lambda;
};

std::vector<Case> rep_cases() {
    std::vector<Case> cs;
    for (long m = 0; m <= 5; ++m) cs.push_back({"A1 -" + std::to_string(m) + "w", A1(), {-m}});
    cs.push_back({"A2 -w1", A2(), {-1, 0}});
    cs.push_back({"A2 -rho", A2(), {-1, -1}});
    cs.push_back({"B2 -w1", B2(), {-1, 0}});
    return cs;
}

struct Built {
    Case c;
    std::unique_ptr<AlgebraConfig> cfg;
    ModuleBasis mb;
};

std::vector<Built>& modules() {
    static std::vector<Built> built = [] {
        std::vector<Built> b;
        for (auto& c : rep_cases()) {
            auto cfg = std::make_unique<AlgebraConfig>(c.cd, Variant::HighestWeight, make_weight(c.cd, c.lambda));
            ModuleBasis mb = generate_module(*cfg);
            b.push_back({c, std::move(cfg), std::move(mb)});
        }
        return b;
    }();
    return built;
}

Outcome dimensions() {
    Outcome o;
    std::string dims;
    for (auto& b : modules()) {
        std::vector<long> mu;
        for (long x : b.c.lambda) mu.push_back(-x);
        long want = weyl_dim_oracle(b.c.cd, mu);
        dims += (dims.empty() ? "" : " ") + std::to_string(b.mb.dimension());
        if (!b.mb.closed || static_cast<long>(b.mb.dimension()) != want)
            o.fail(b.c.name + ": got " + std::to_string(b.mb.dimension()) + ", oracle " + std::to_string(want));
    }
    if (o.pass) o.note = "dims " + dims;
    return o;
}

Outcome highest_weight() {
    Outcome o;
    int n = 0;
    for (auto& b : modules()) {
        auto rep = highest_weight_checks(*b.cfg);
        for (auto& c : rep.checks) {
            ++n;
            if (!c.pass) o.fail(b.c.name + ": " + c.name);
        }
    }
    if (o.pass) o.note = std::to_string(n) + " checks";
    return o;
}

Outcome double_modules() {
    Outcome o;
    std::vector<std::pair<CartanData, std::vector<long>>> cs{
        {A1(), {-1}}, {A1(), {-2}}, {A1(), {-3}}, {A2(), {-1, 0}}, {A2(), {-1, -1}}, {A2(), {-2, -1}}};
    std::string closures;
    for (auto& [cd, lam] : cs) {
        bool close = cd.rank() == 1 && lam[0] >= -2;
        auto rep = double_module_check(cd, make_weight(cd, lam), 4, close);
        for (auto& l : rep.lines)
            if (l.side == "E" && !l.match) o.fail("E line i=" + std::to_string(l.i + 1) + " n=" + std::to_string(l.n));
        for (auto& c : rep.checks)
            if (!c.pass) o.fail(c.name + " " + c.witness);
        if (close) closures += (closures.empty() ? "" : " ") + std::to_string(rep.closure_dimension);
    }
    if (o.pass) o.note = "A1 closures " + closures;
    return o;
}

Outcome sweep() {
    Outcome o;
    int hits = 0;
    for (int code = 0; code < 729; ++code) {
        Laurent p;
        for (int e = -2, k = code; e <= 3; ++e, k /= 3)
            if (k % 3) p[e] = k % 3 == 1 ? 1 : -1;
        bool adm = substitution_admissibility(p);
        hits += adm;
        if (adm != in_scaled_family(p)) o.fail("code " + std::to_string(code));
    }
    if (o.pass) o.note = "729 polynomials, " + std::to_string(hits) + " admissible";
    return o;
}

Outcome operators() {
    Outcome o;
    int n = 0;
    for (auto& b : modules()) {
        for (auto& r : operator_relations(b.mb)) {
            ++n;
            if (!r.pass) o.fail(b.c.name + ": " + r.name);
        }
        if (!highest_line_unique(b.mb)) o.fail(b.c.name + ": highest line");
    }
    if (o.pass) o.note = std::to_string(n) + " identities";
    return o;
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Hopf axioms, A2 words of length <= 4", hopf_suite},
        {"associativity, A1 A2 B2 A1xA1", associativity},
        {"torus and commutation relations", relations},
        {"quantum Serre relations", serre},
        {"shuffle oracle, A2 E-words of length <= 3", shuffle},
        {"module dimensions against Weyl oracle", dimensions},
        {"highest weight checks", highest_weight},
        {"double module closed forms and closures", double_modules},
        {"substitution sweep", sweep},
        {"operator relations on action matrices", operators},
    };
    int failed = 0;
    for (size_t k = 0; k < criteria.size(); ++k) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %zu: %s  %s (%s) [%.2fs]\n", k + 1, o.pass ? "PASS" : "FAIL", criteria[k].first.c_str(),
                    o.note.c_str(), s);
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed ? 1 : 0;
}
