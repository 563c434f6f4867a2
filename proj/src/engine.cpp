#include "qsym/engine.hpp"

#include <algorithm>
#include <numeric>

namespace qsym {

std::string mode_name(Mode m) {
    switch (m) {
        case Mode::Shuffle: return "shuffle";
        case Mode::Quasi: return "quasi";
        case Mode::Quotient: return "quotient";
        case Mode::QuotientLiteral: return "quotient_literal";
    }
    return "?";
}

Mode parse_mode(const std::string& s) {
    if (s == "shuffle") return Mode::Shuffle;
    if (s == "quasi") return Mode::Quasi;
    if (s == "quotient") return Mode::Quotient;
    if (s == "quotient_literal") return Mode::QuotientLiteral;
    throw ConfigError("unknown mode " + s);
}

PairSpec PairSpec::standard(const AlgebraConfig& cfg, Mode mode) {
    PairSpec p;
    p.mode = mode;
    if (mode == Mode::Shuffle) return p;
    for (int i = 0; i < cfg.rank(); ++i)
        p.alpha.push_back({cfg.E(i), cfg.F(i), cfg.XI(i), cfg.qi_diff(i).inverse()});
    return p;
}

const AlphaEntry* PairSpec::lookup(int left, int right) const {
    for (auto& a : alpha)
        if (a.left == left && a.right == right) return &a;
    return nullptr;
}

Tensor coproduct(const Element& x) {
    Tensor r(x.config());
    const AlgebraConfig& cfg = x.cfg();
    for (auto& [t, c] : x.terms()) {
        size_t n = t.w.size();
        // suffix degrees
        std::vector<Torus> suf(n + 1, t.t);
        for (size_t k = n; k-- > 0;) suf[k] = torus_add(suf[k + 1], cfg.letter(t.w[k]).degree);
        for (size_t k = 0; k <= n; ++k) {
            Term a{Word(t.w.begin(), t.w.begin() + k), suf[k]};
            Term b{Word(t.w.begin() + k, t.w.end()), t.t};
            r.add(a, b, c);
        }
    }
    return r;
}

Scalar counit(const Element& x) {
    Scalar s;
    for (auto& [t, c] : x.terms())
        if (t.w.empty()) s += c;
    return s;
}

Element counit_left(const Tensor& t) {
    Element r(t.config());
    for (auto& [k, c] : t.terms())
        if (k.first.w.empty()) r.add(k.second, c);
    return r;
}

Element counit_right(const Tensor& t) {
    Element r(t.config());
    for (auto& [k, c] : t.terms())
        if (k.second.w.empty()) r.add(k.first, c);
    return r;
}

Tensor tensor_of(const Element& a, const Element& b) {
    Tensor r(a.config());
    for (auto& [x, c] : a.terms())
        for (auto& [y, d] : b.terms()) r.add(x, y, c * d);
    return r;
}

Triple delta_delta_left(const Element& x) {
    Triple r;
    for (auto& [k, c] : coproduct(x).terms()) {
        Element a(x.config());
        a.add(k.first, Scalar(1));
        for (auto& [k2, c2] : coproduct(a).terms()) {
            auto key = std::make_tuple(k2.first, k2.second, k.second);
            Scalar v = c * c2;
            auto [it, fresh] = r.try_emplace(key, v);
            if (!fresh) {
                it->second += v;
                if (it->second.is_zero()) r.erase(it);
            }
        }
    }
    return r;
}

Triple delta_delta_right(const Element& x) {
    Triple r;
    for (auto& [k, c] : coproduct(x).terms()) {
        Element b(x.config());
        b.add(k.second, Scalar(1));
        for (auto& [k2, c2] : coproduct(b).terms()) {
            auto key = std::make_tuple(k.first, k2.first, k2.second);
            Scalar v = c * c2;
            auto [it, fresh] = r.try_emplace(key, v);
            if (!fresh) {
                it->second += v;
                if (it->second.is_zero()) r.erase(it);
            }
        }
    }
    return r;
}

Element normalize_word(const AlgebraConfig& cfg, const std::vector<Piece>& parts) {
    Torus acc = cfg.unit();
    Word w;
    long e = 0;
    for (auto& p : parts) {
        if (p.letter >= 0) {
            e += cfg.chi_exp(acc, p.letter);
            w.push_back(p.letter);
        }
        acc = torus_add(acc, p.t);
    }
    Element r(&cfg);
    r.add(Term{w, acc}, Scalar::vpow(e));
    return r;
}

namespace {

struct TermProduct {
    const AlgebraConfig& cfg;
    const PairSpec& spec;
    const Word& u;
    const Word& w;
    std::vector<Torus> gk;
    Torus tor;
    Scalar base;
    Element& out;
    Word cur;

    void run(size_t c, size_t d, long e, const Scalar& extra) {
        if (c == u.size() && d == w.size()) {
            Scalar s = Scalar::vpow(e) * extra * base;
            out.add(Term{cur, tor}, s);
            return;
        }
        if (c < u.size()) {
            cur.push_back(u[c]);
            run(c + 1, d, e, extra);
            cur.pop_back();
        }
        if (d < w.size()) {
            cur.push_back(w[d]);
            run(c, d + 1, e + cfg.chi_exp(gk[c], w[d]), extra);
            cur.pop_back();
        }
        if (c < u.size() && d < w.size() && spec.mode != Mode::Shuffle) {
            if (const AlphaEntry* a = spec.lookup(u[c], w[d])) {
                cur.push_back(a->result);
                run(c + 1, d + 1, e + cfg.chi_exp(gk[c + 1], w[d]), extra * a->coeff);
                cur.pop_back();
            }
        }
    }
};

Element universal_product(const Element& a, const Element& b, const PairSpec& spec) {
    if (a.config() != b.config()) throw MixedConfigError("multiply: elements from different configurations");
    const AlgebraConfig& cfg = a.cfg();
    Element out(&cfg);
    for (auto& [x, c] : a.terms()) {
        std::vector<Torus> gk(x.w.size() + 1, x.t);
        for (size_t k = x.w.size(); k-- > 0;) gk[k] = torus_add(gk[k + 1], cfg.letter(x.w[k]).degree);
        for (auto& [y, d] : b.terms()) {
            TermProduct tp{cfg, spec, x.w, y.w, gk, torus_add(x.t, y.t), c * d, out, {}};
            tp.cur.reserve(x.w.size() + y.w.size());
            tp.run(0, 0, 0, Scalar(1));
        }
    }
    return out;
}

}  // namespace

Element multiply(const Element& a, const Element& b, const PairSpec& spec) {
    if (spec.mode == Mode::Quotient || spec.mode == Mode::QuotientLiteral)
        return quotient_product(a, b, spec.mode);
    return universal_product(a, b, spec);
}

Tensor multiply(const Tensor& a, const Tensor& b, const PairSpec& spec) {
    Tensor r(a.config());
    const AlgebraConfig& cfg = *a.config();
    for (auto& [x, c] : a.terms())
        for (auto& [y, d] : b.terms()) {
            Element l = multiply(Element::word(cfg, x.first.w, x.first.t), Element::word(cfg, y.first.w, y.first.t), spec);
            Element rr = multiply(Element::word(cfg, x.second.w, x.second.t), Element::word(cfg, y.second.w, y.second.t), spec);
            Scalar cd = c * d;
            for (auto& [s, e] : l.terms())
                for (auto& [t, f] : rr.terms()) r.add(s, t, cd * e * f);
        }
    return r;
}

Element braiding(const AlgebraConfig& cfg, int x, int y) {
    Element r(&cfg);
    r.add(Term{Word{y, x}, cfg.unit()}, cfg.chi(cfg.letter(x).degree, y));
    return r;
}

Element Antipode::pure(const Word& w) {
    {
        std::lock_guard<std::mutex> g(mu_);
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
    }
    Element r(&cfg_);
    if (w.empty()) {
        r = Element::one(cfg_);
    } else {
        // S(w) = - sum_{k<n} S(w_<k) g(w_>=k)^{-1} * w_>=k
        for (size_t k = 0; k < w.size(); ++k) {
            Word left(w.begin(), w.begin() + k);
            Torus g = word_degree(cfg_, w, k);
            Element sl = multiply(Element::torus(cfg_, torus_neg(g)), pure(left), spec_);
            r -= multiply(sl, Element::word(cfg_, Word(w.begin() + k, w.end())), spec_);
        }
    }
    std::lock_guard<std::mutex> g(mu_);
    memo_.emplace(w, r);
    return r;
}

Element Antipode::operator()(const Element& x) {
    Element r(&cfg_);
    for (auto& [t, c] : x.terms()) {
        Element s = pure(t.w);
        if (std::any_of(t.t.begin(), t.t.end(), [](int v) { return v != 0; }))
            s = multiply(Element::torus(cfg_, torus_neg(t.t)), s, spec_);
        r.add_scaled(s, c);
    }
    return r;
}

Element antipode(const Element& x, const PairSpec& spec) {
    Antipode S(x.cfg(), spec);
    return S(x);
}

Element project_coinvariants(const Element& x, Antipode& S, const std::function<bool(const Term&)>& keep) {
    const AlgebraConfig& cfg = x.cfg();
    Element r(&cfg);
    for (auto& [k, c] : coproduct(x).terms()) {
        if (!keep(k.second)) continue;
        Element s = S(Element::word(cfg, k.second.w, k.second.t));
        r.add_scaled(multiply(Element::word(cfg, k.first.w, k.first.t), s, S.spec()), c);
    }
    return r;
}

Element project_coinvariants(const Element& x, const PairSpec& spec) {
    Antipode S(x.cfg(), spec);
    return project_coinvariants(x, S, [](const Term& t) { return t.w.empty(); });
}

Element shuffle_oracle(const AlgebraConfig& cfg, const Word& u, const Word& w) {
    Element r(&cfg);
    size_t n = u.size() + w.size();
    std::vector<int> mask(n, 0);
    std::fill(mask.begin(), mask.begin() + u.size(), 1);  // 1 marks a slot taken by u
    std::sort(mask.begin(), mask.end());
    do {
        Word out;
        long e = 0;
        size_t c = 0, d = 0;
        for (size_t s = 0; s < n; ++s) {
            if (mask[s]) {
                out.push_back(u[c++]);
            } else {
                // w_d jumps over the letters u_c.. that are still to come
                for (size_t j = c; j < u.size(); ++j) e += cfg.chi_exp(cfg.letter(u[j]).degree, w[d]);
                out.push_back(w[d++]);
            }
        }
        r.add(Term{out, cfg.unit()}, Scalar::vpow(e));
    } while (std::next_permutation(mask.begin(), mask.end()));
    return r;
}

namespace {

// alpha on (x K) # (y K'), degree-1 result
Element alpha_apply(const AlgebraConfig& cfg, const PairSpec& spec, int x, const Torus& k, int y, const Torus& k2) {
    Element r(&cfg);
    if (const AlphaEntry* a = spec.lookup(x, y))
        r.add(Term{Word{a->result}, torus_add(k, k2)}, a->coeff * cfg.chi(k, y));
    return r;
}

Element left_act(const AlgebraConfig& cfg, const Torus& h, const Element& m) {
    Element r(&cfg);
    for (auto& [t, c] : m.terms()) {
        long e = 0;
        for (int x : t.w) e += cfg.chi_exp(h, x);
        r.add(Term{t.w, torus_add(h, t.t)}, c * Scalar::vpow(e));
    }
    return r;
}

Element right_act(const AlgebraConfig& cfg, const Element& m, const Torus& h) {
    Element r(&cfg);
    for (auto& [t, c] : m.terms()) r.add(Term{t.w, torus_add(t.t, h)}, c);
    return r;
}

std::string pair_name(const AlgebraConfig& cfg, int x, int y) {
    return "(" + cfg.letter(x).name + "," + cfg.letter(y).name + ")";
}

}  // namespace

std::vector<CheckResult> validate_pair(const AlgebraConfig& cfg, const PairSpec& spec) {
    CheckResult lin_l{"left H-linearity", true, ""}, lin_r{"right H-linearity", true, ""}, fac{"factorization through tensor over H", true, ""},
        com_l{"left comodule compatibility", true, ""}, com_r{"right comodule compatibility", true, ""}, assoc{"alpha associativity", true, ""};
    int N = cfg.alphabet_size(), m = cfg.lattice_dim();
    std::vector<Torus> gens{cfg.unit()};
    for (int a = 0; a < m; ++a) {
        gens.push_back(cfg.K(a));
        gens.push_back(cfg.K(a, -1));
    }
    auto fail = [](CheckResult& r, const std::string& w) {
        if (r.pass) {
            r.pass = false;
            r.witness = w;
        }
    };
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
            for (auto& k : gens)
                for (auto& k2 : gens) {
                    Element base = alpha_apply(cfg, spec, x, k, y, k2);
                    for (int a = 0; a < m; ++a) {
                        Torus h = cfg.K(a);
                        // K_a . (x K) = chi(K_a, x) x K_a K
                        Element l = alpha_apply(cfg, spec, x, torus_add(h, k), y, k2) * cfg.chi(h, x);
                        if (l != left_act(cfg, h, base)) fail(lin_l, pair_name(cfg, x, y));
                        Element r = alpha_apply(cfg, spec, x, k, y, torus_add(k2, h));
                        if (r != right_act(cfg, base, h)) fail(lin_r, pair_name(cfg, x, y));
                        Element f1 = alpha_apply(cfg, spec, x, torus_add(k, h), y, k2);
                        Element f2 = alpha_apply(cfg, spec, x, k, y, torus_add(h, k2)) * cfg.chi(h, y);
                        if (f1 != f2) fail(fac, pair_name(cfg, x, y));
                    }
                    for (auto& [t, c] : base.terms()) {
                        Torus want = torus_add(torus_add(cfg.letter(x).degree, k), torus_add(cfg.letter(y).degree, k2));
                        Torus got = torus_add(word_degree(cfg, t.w), t.t);
                        if (got != want) fail(com_l, pair_name(cfg, x, y));
                        if (t.t != torus_add(k, k2)) fail(com_r, pair_name(cfg, x, y));
                    }
                }
            for (int z = 0; z < N; ++z) {
                Element lhs(&cfg), rhs(&cfg);
                for (auto& [t, c] : alpha_apply(cfg, spec, x, cfg.unit(), y, cfg.unit()).terms())
                    lhs.add_scaled(alpha_apply(cfg, spec, t.w[0], t.t, z, cfg.unit()), c);
                for (auto& [t, c] : alpha_apply(cfg, spec, y, cfg.unit(), z, cfg.unit()).terms())
                    rhs.add_scaled(alpha_apply(cfg, spec, x, cfg.unit(), t.w[0], t.t), c);
                if (lhs != rhs)
                    fail(assoc, "(" + cfg.letter(x).name + "," + cfg.letter(y).name + "," + cfg.letter(z).name + ")");
            }
        }
    return {lin_l, lin_r, fac, com_l, com_r, assoc};
}

}  // namespace qsym
