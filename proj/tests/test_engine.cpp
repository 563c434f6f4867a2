#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qsym/engine.hpp"
#include "qsym/qgroup.hpp"

using namespace qsym;

namespace {

CartanData A1() { return build_cartan_data({{2}}, {1}); }
CartanData A2() { return build_cartan_data({{2, -1}, {-1, 2}}, {1, 1}); }
CartanData B2() { return build_cartan_data({{2, -1}, {-2, 2}}, {2, 1}); }

std::vector<Word> words_upto(const AlgebraConfig& c, int len, int letters = -1) {
    if (letters < 0) letters = c.alphabet_size();
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

Element el(const AlgebraConfig& c, Word w, Torus t) { return Element::word(c, w, t); }

}  // namespace

TEST_CASE("coproduct examples") {
    AlgebraConfig c(A1(), Variant::Standard);
    int E = c.E(0), F = c.F(0), X = c.XI(0);
    Tensor d = coproduct(Element::torus(c, {3}));
    Tensor want(&c);
    want.add(Term{{}, {3}}, Term{{}, {3}}, 1);
    CHECK(d == want);

    Tensor dx(&c);
    dx.add(Term{{}, {2}}, Term{{X}, {0}}, 1);
    dx.add(Term{{X}, {0}}, Term{{}, {0}}, 1);
    CHECK(coproduct(Element::letter(c, X)) == dx);

    Tensor def(&c);
    def.add(Term{{}, {2}}, Term{{E, F}, {0}}, 1);
    def.add(Term{{E}, {1}}, Term{{F}, {0}}, 1);
    def.add(Term{{E, F}, {0}}, Term{{}, {0}}, 1);
    CHECK(coproduct(el(c, {E, F}, {0})) == def);

    CHECK(counit(Element::torus(c, {5})) == Scalar(1));
    CHECK(counit(Element::letter(c, E)).is_zero());
}

TEST_CASE("normalize word") {
    AlgebraConfig c(A2(), Variant::Standard);
    Torus K{1, 2}, K2{-1, 1};
    Element r = normalize_word(c, {Piece{c.E(0), K}, Piece{c.F(0), K2}});
    CHECK(r == el(c, {c.E(0), c.F(0)}, {0, 3}) * c.chi(K, c.F(0)));
    CHECK(normalize_word(c, {Piece{c.E(0), c.unit()}, Piece{c.F(1), c.unit()}}) == el(c, {c.E(0), c.F(1)}, c.unit()));
    CHECK(normalize_word(c, {Piece{-1, c.K(1, 2)}, Piece{c.XI(0), c.unit()}}) == el(c, {c.XI(0)}, c.K(1, 2)));
}

TEST_CASE("product examples") {
    AlgebraConfig c(A2(), Variant::Standard);
    PairSpec spec = PairSpec::standard(c, Mode::Quasi);
    CHECK(multiply(Element::torus(c, {1, 2}), Element::torus(c, {-3, 1}), spec) == Element::torus(c, {-2, 3}));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(multiply(Element::torus(c, c.K(i)), Element::letter(c, c.E(j)), spec) ==
                  el(c, {c.E(j)}, c.K(i)) * c.field().q_power(c.cartan().A[i][j]));
    for (int i = 0; i < 2; ++i) {
        Element want = el(c, {c.E(i), c.F(i)}, c.unit()) + el(c, {c.F(i), c.E(i)}, c.unit()) * c.field().q_power(-2) +
                       Element::letter(c, c.XI(i)) * c.qi_diff(i).inverse();
        CHECK(multiply(Element::letter(c, c.E(i)), Element::letter(c, c.F(i)), spec) == want);
    }
}

TEST_CASE("degree one product law") {
    for (auto cd : {A2(), B2()}) {
        AlgebraConfig c(cd, Variant::Standard);
        PairSpec spec = PairSpec::standard(c, Mode::Quasi);
        for (int u = 0; u < c.alphabet_size(); ++u)
            for (int v = 0; v < c.alphabet_size(); ++v) {
                Element r = multiply(Element::letter(c, u), Element::letter(c, v), spec) - el(c, {u, v}, c.unit());
                if (auto* a = spec.lookup(u, v)) r -= Element::letter(c, a->result) * a->coeff;
                CHECK(r == braiding(c, u, v));
                CHECK(braiding(c, u, v) == el(c, {v, u}, c.unit()) * c.chi(c.letter(u).degree, v));
            }
    }
}

TEST_CASE("braiding examples") {
    AlgebraConfig c(B2(), Variant::Standard);
    for (int i = 0; i < 2; ++i) {
        CHECK(braiding(c, c.E(i), c.E(i)) == el(c, {c.E(i), c.E(i)}, c.unit()) * c.field().q_power(c.cartan().A[i][i]));
        CHECK(braiding(c, c.F(i), c.XI(0)) == el(c, {c.XI(0), c.F(i)}, c.unit()));
    }
    WeightData lam = make_weight(A2(), {-1, 0});
    AlgebraConfig w(A2(), Variant::Invariant, scale_weight(A2(), lam, 2), default_root_order(lam));
    for (int i = 0; i < 2; ++i)
        CHECK(braiding(w, w.extra(), w.E(i)) == el(w, {w.E(i), w.extra()}, w.unit()) * w.field().q_power(2 * lam.pairing[i]));
}

TEST_CASE("antipode examples") {
    AlgebraConfig c(B2(), Variant::Standard);
    PairSpec spec = PairSpec::standard(c, Mode::Quasi);
    CHECK(antipode(Element::torus(c, {2, -1}), spec) == Element::torus(c, {-2, 1}));
    for (int i = 0; i < 2; ++i) {
        Element e = Element::letter(c, c.E(i));
        CHECK(antipode(e, spec) == el(c, {c.E(i)}, c.K(i, -1)) * -c.field().q_power(-c.cartan().A[i][i]));
        CHECK(antipode(e, spec) == -multiply(Element::torus(c, c.K(i, -1)), e, spec));
        CHECK(antipode(Element::letter(c, c.XI(i)), spec) ==
              -multiply(Element::torus(c, c.K(i, -2)), Element::letter(c, c.XI(i)), spec));
    }
}

TEST_CASE("hopf axioms on short words") {
    AlgebraConfig c(A1(), Variant::Standard);
    for (Mode mode : {Mode::Shuffle, Mode::Quasi}) {
        PairSpec spec = PairSpec::standard(c, mode);
        Antipode S(c, spec);
        for (auto& w : words_upto(c, 3))
            for (int k = -1; k <= 1; ++k) {
                Element x = el(c, w, {k});
                CHECK(delta_delta_left(x) == delta_delta_right(x));
                Tensor d = coproduct(x);
                CHECK(counit_left(d) == x);
                CHECK(counit_right(d) == x);
                Element l(&c), r(&c);
                for (auto& [key, co] : d.terms()) {
                    Element a = el(c, key.first.w, key.first.t), b = el(c, key.second.w, key.second.t);
                    l.add_scaled(multiply(S(a), b, spec), co);
                    r.add_scaled(multiply(a, S(b), spec), co);
                }
                CHECK(l == Element::one(c) * counit(x));
                CHECK(r == Element::one(c) * counit(x));
            }
    }
}

TEST_CASE("product is associative and multiplicative") {
    for (auto cd : {A1(), A2()}) {
        AlgebraConfig c(cd, Variant::Standard);
        for (Mode mode : {Mode::Shuffle, Mode::Quasi}) {
            PairSpec spec = PairSpec::standard(c, mode);
            std::mt19937_64 rng(11);
            for (int k = 0; k < 15; ++k) {
                Element a = random_engine_element(c, rng, 2), b = random_engine_element(c, rng, 2),
                        d = random_engine_element(c, rng, 1);
                CHECK(multiply(multiply(a, b, spec), d, spec) == multiply(a, multiply(b, d, spec), spec));
                CHECK(coproduct(multiply(a, b, spec)) == multiply(coproduct(a), coproduct(b), spec));
            }
        }
    }
}

TEST_CASE("shuffle oracle") {
    AlgebraConfig c(A2(), Variant::Standard);
    PairSpec spec = PairSpec::standard(c, Mode::Shuffle);
    auto ws = words_upto(c, 2, 2);
    for (auto& u : ws)
        for (auto& w : ws)
            CHECK(multiply(Element::word(c, u), Element::word(c, w), spec) == shuffle_oracle(c, u, w));
    // E-letters only: quasi product never meets alpha
    PairSpec quasi = PairSpec::standard(c, Mode::Quasi);
    for (auto& u : ws)
        for (auto& w : ws)
            CHECK(multiply(Element::word(c, u), Element::word(c, w), quasi) == shuffle_oracle(c, u, w));
}

TEST_CASE("coinvariant projector") {
    AlgebraConfig c(A2(), Variant::Standard);
    PairSpec spec = PairSpec::standard(c, Mode::Quasi);
    CHECK(project_coinvariants(Element::torus(c, {2, 1}), spec) == Element::one(c));
    CHECK(project_coinvariants(el(c, {c.E(0)}, {1, -1}), spec) == Element::letter(c, c.E(0)));
    WeightData lam = make_weight(A2(), {-1, -1});
    AlgebraConfig h(A2(), Variant::HighestWeight, lam);
    PairSpec hs = PairSpec::standard(h, Mode::Quasi);
    CHECK(project_coinvariants(Element::letter(h, h.extra()), hs) == Element::letter(h, h.extra()));

    std::mt19937_64 rng(5);
    Antipode S(c, spec);
    for (int k = 0; k < 20; ++k) {
        Element x = random_engine_element(c, rng, 2);
        Element p = project_coinvariants(x, S, [](const Term& t) { return t.w.empty(); });
        for (auto& [t, co] : p.terms()) CHECK(t.t == c.unit());
        CHECK(project_coinvariants(p, spec) == p);
        CHECK(project_coinvariants(multiply(x, Element::torus(c, {1, -2}), spec), spec) == p);
    }
}

TEST_CASE("radford decomposition") {
    AlgebraConfig c(A1(), Variant::Standard);
    PairSpec spec = PairSpec::standard(c, Mode::Quasi);
    std::set<Term> seen;
    for (auto& w : words_upto(c, 3))
        for (int k = -2; k <= 2; ++k) {
            Element x = multiply(Element::word(c, w), Element::torus(c, {k}), spec);
            CHECK(x == el(c, w, {k}));
            CHECK(seen.insert(Term{w, {k}}).second);
            // x = sum P(x_(1)) * pi(x_(2))
            Element back(&c);
            for (auto& [key, co] : coproduct(x).terms())
                if (key.second.w.empty())
                    back.add_scaled(multiply(project_coinvariants(el(c, key.first.w, key.first.t), spec),
                                             Element::torus(c, key.second.t), spec),
                                    co);
            CHECK(back == x);
        }
}

TEST_CASE("pair validation") {
    AlgebraConfig c(A2(), Variant::Standard);
    for (Mode m : {Mode::Quasi, Mode::Shuffle})
        for (auto& r : validate_pair(c, PairSpec::standard(c, m))) CHECK_MESSAGE(r.pass, r.name);
    AlgebraConfig bad = c.with_xi_degree(1);
    bool found = false;
    for (auto& r : validate_pair(bad, PairSpec::standard(bad, Mode::Quasi)))
        if (!r.pass) {
            CHECK(r.name == "left comodule compatibility");
            CHECK(r.witness == "(E1,F1)");
            found = true;
        }
    CHECK(found);
}

TEST_CASE("mixed configurations") {
    AlgebraConfig a(A1(), Variant::Standard), b(A1(), Variant::Standard);
    CHECK_THROWS_AS(Element::one(a) + Element::one(b), MixedConfigError);
    CHECK_THROWS_AS(multiply(Element::one(a), Element::one(b), PairSpec::standard(a, Mode::Quasi)), MixedConfigError);
}
