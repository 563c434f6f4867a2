#include "qsym/representation.hpp"

#include <deque>
#include <random>
#include <set>

namespace qsym {

Element adjoint_action(const Element& x, const Element& m, Antipode& S) {
    const AlgebraConfig& cfg = x.cfg();
    Element r(&cfg);
    const PairSpec& spec = S.spec();
    for (auto& [k, c] : coproduct(x).terms()) {
        Element left = multiply(Element::word(cfg, k.first.w, k.first.t), m, spec);
        Element s = S(Element::word(cfg, k.second.w, k.second.t));
        r.add_scaled(multiply(left, s, spec), c);
    }
    return r;
}

Element adjoint_action(const Element& x, const Element& m, Mode mode) {
    Antipode S(x.cfg(), PairSpec::standard(x.cfg(), mode));
    return adjoint_action(x, m, S);
}

namespace {

using Sparse = std::map<int, Scalar>;

void axpy(Sparse& y, const Sparse& x, const Scalar& a) {
    for (auto& [k, v] : x) {
        auto [it, fresh] = y.try_emplace(k, v * a);
        if (!fresh) {
            it->second += v * a;
            if (it->second.is_zero()) y.erase(it);
        }
    }
}

// reduced row echelon form over term coordinates, rows remember their basis combination
class Echelon {
public:
    Sparse vec(const Element& e) {
        Sparse s;
        for (auto& [t, c] : e.terms()) {
            auto [it, fresh] = col_.try_emplace(t, static_cast<int>(col_.size()));
            s[it->second] = c;
        }
        return s;
    }

    // reduce x in place, coordinates of the eliminated part accumulate into combo
    void reduce(Sparse& x, Sparse& combo) const {
        for (auto& r : rows_) {
            auto it = x.find(r.pivot);
            if (it == x.end()) continue;
            Scalar c = it->second;
            axpy(x, r.vec, -c);
            axpy(combo, r.combo, c);
        }
    }

    // returns false if dependent; otherwise registers x as basis element idx
    bool insert(const Element& e, int idx) {
        Sparse x = vec(e), combo;
        reduce(x, combo);
        if (x.empty()) return false;
        Sparse own;
        own[idx] = Scalar(1);
        axpy(own, combo, Scalar(-1));
        int pivot = x.begin()->first;
        Scalar inv = x.begin()->second.inverse();
        Row row{pivot, {}, {}};
        axpy(row.vec, x, inv);
        axpy(row.combo, own, inv);
        for (auto& r : rows_) {
            auto it = r.vec.find(pivot);
            if (it == r.vec.end()) continue;
            Scalar c = it->second;
            axpy(r.vec, row.vec, -c);
            axpy(r.combo, row.combo, -c);
        }
        rows_.push_back(std::move(row));
        return true;
    }

    std::optional<Sparse> coords(const Element& e) {
        Sparse x = vec(e), combo;
        reduce(x, combo);
        if (!x.empty()) return std::nullopt;
        return combo;
    }

private:
    struct Row {
        int pivot;
        Sparse vec, combo;
    };
    std::map<Term, int> col_;
    std::vector<Row> rows_;
};

Element start_letter(const AlgebraConfig& cfg) { return Element::letter(cfg, cfg.extra()); }

Element gen_e(const AlgebraConfig& cfg, int i) { return Element::letter(cfg, cfg.E(i)); }
Element gen_f(const AlgebraConfig& cfg, int i) { return Element::word(cfg, Word{cfg.F(i)}, cfg.K(i, -1)); }
Element gen_t(const AlgebraConfig& cfg, int i, int p = 1) { return Element::torus(cfg, cfg.K(i, p)); }

}  // namespace

ModuleBasis generate_module(const AlgebraConfig& cfg, const Element& start, size_t cap, Mode mode) {
    ModuleBasis mb;
    mb.cfg = &cfg;
    Antipode S(cfg, PairSpec::standard(cfg, mode));
    int n = cfg.rank();
    std::vector<std::pair<std::string, Element>> gens;
    for (int i = 0; i < n; ++i) {
        gens.push_back({"e" + std::to_string(i + 1), gen_e(cfg, i)});
        gens.push_back({"f" + std::to_string(i + 1), gen_f(cfg, i)});
    }
    Echelon ech;
    std::deque<size_t> queue;
    if (start.is_zero()) {
        mb.closed = true;
        return mb;
    }
    ech.insert(start, 0);
    mb.basis.push_back(start);
    queue.push_back(0);
    std::map<std::string, std::vector<Element>> images;
    while (!queue.empty()) {
        size_t k = queue.front();
        queue.pop_front();
        for (auto& [name, g] : gens) {
            Element img = adjoint_action(g, mb.basis[k], S);
            auto& im = images[name];
            if (im.size() <= k) im.resize(k + 1, Element(&cfg));
            im[k] = img;
            if (img.is_zero()) continue;
            if (ech.insert(img, static_cast<int>(mb.basis.size()))) {
                mb.basis.push_back(img);
                if (mb.basis.size() > cap) return mb;
                queue.push_back(mb.basis.size() - 1);
            }
        }
    }
    mb.closed = true;
    size_t d = mb.basis.size();
    for (auto& b : mb.basis)
        for (auto& [t, c] : b.terms())
            for (int x : t.t)
                if (x != 0) mb.coinvariant = false;
    auto fill = [&](const std::string& name, const std::vector<Element>& im) {
        Matrix M(d, std::vector<Scalar>(d));
        for (size_t c = 0; c < d; ++c) {
            auto co = ech.coords(im[c]);
            if (!co) throw DomainError("image outside the closed span");
            for (auto& [r, v] : *co) M[r][c] = v;
        }
        mb.action[name] = M;
    };
    for (auto& [name, g] : gens) {
        auto& im = images[name];
        im.resize(d, Element(&cfg));
        fill(name, im);
    }
    for (int i = 0; i < n; ++i) {
        std::vector<Element> im;
        for (auto& b : mb.basis) im.push_back(adjoint_action(gen_t(cfg, i), b, S));
        fill("t" + std::to_string(i + 1), im);
    }
    return mb;
}

ModuleBasis generate_module(const AlgebraConfig& cfg, size_t cap, Mode mode) {
    return generate_module(cfg, start_letter(cfg), cap, mode);
}

Weight weight_of(const ModuleBasis& mb, size_t k) {
    const AlgebraConfig& cfg = *mb.cfg;
    Weight w;
    for (int i = 0; i < cfg.rank(); ++i) {
        const Scalar& s = mb.action.at("t" + std::to_string(i + 1))[k][k];
        if (!s.is_laurent() || s.num().degree() != 0 || s.num().lead() != 1)
            throw DomainError("torus action is not a pure power of v");
        mpq_class x(s.shift(), cfg.field().root_order() * cfg.cartan().D[i]);
        x.canonicalize();
        w.push_back(x);
    }
    return w;
}

CharacterTable weight_character(const ModuleBasis& mb) {
    CharacterTable ct;
    for (size_t k = 0; k < mb.dimension(); ++k) ++ct[weight_of(mb, k)];
    return ct;
}

bool HighestWeightReport::pass() const {
    for (auto& c : checks)
        if (!c.pass) return false;
    return true;
}

HighestWeightReport highest_weight_checks(const AlgebraConfig& cfg, Mode mode) {
    HighestWeightReport rep;
    Antipode S(cfg, PairSpec::standard(cfg, mode));
    Element v = start_letter(cfg);
    const WeightData& w = *cfg.weight();
    for (int i = 0; i < cfg.rank(); ++i) {
        std::string s = std::to_string(i + 1);
        Element e = adjoint_action(gen_e(cfg, i), v, S);
        rep.checks.push_back({"ad(e" + s + ")(v)=0", e.is_zero(), e.is_zero() ? "" : e.str()});
        Element t = adjoint_action(gen_t(cfg, i), v, S) - v * cfg.field().q_power(-w.pairing[i]);
        rep.checks.push_back({"ad(t" + s + ")(v)=q^-(l,a)v", t.is_zero(), t.is_zero() ? "" : t.str()});
        long target = 1 - w.coroot[i];
        Element cur = v;
        long thr = -1;
        for (long k = 1; k <= target + 2; ++k) {
            cur = adjoint_action(gen_f(cfg, i), cur, S);
            if (cur.is_zero()) {
                thr = k;
                break;
            }
        }
        rep.vanishing_threshold.push_back(thr);
        rep.checks.push_back({"ad(f" + s + ")^" + std::to_string(target) + "(v)=0 and power " +
                                  std::to_string(target - 1) + " nonzero",
                              thr == target, "measured threshold " + std::to_string(thr)});
    }
    return rep;
}

std::vector<CheckResult> operator_relations(const ModuleBasis& mb) {
    const AlgebraConfig& cfg = *mb.cfg;
    const QField& F = cfg.field();
    int n = cfg.rank();
    size_t d = mb.dimension();
    std::vector<CheckResult> out;
    auto A = [&](const std::string& s, int i) -> const Matrix& { return mb.action.at(s + std::to_string(i + 1)); };
    std::vector<Matrix> tinv;
    for (int i = 0; i < n; ++i) {
        auto inv = matinv(A("t", i));
        if (!inv) throw DomainError("torus operator not invertible");
        tinv.push_back(*inv);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::string ij = std::to_string(i + 1) + std::to_string(j + 1);
            Matrix c = matadd(matmul(A("e", i), A("f", j)), matmul(A("f", j), A("e", i)), Scalar(-1));
            if (i == j) c = matadd(c, matadd(A("t", i), tinv[i], Scalar(-1)), -cfg.qi_diff(i).inverse());
            out.push_back({"[e_i,f_j]:" + ij, matzero(c), ""});
            long a = cfg.cartan().A[i][j];
            Matrix te = matmul(matmul(A("t", i), A("e", j)), tinv[i]);
            out.push_back({"t_ie_jt_i^-1:" + ij, matzero(matadd(te, A("e", j), -F.q_power(a))), ""});
            Matrix tf = matmul(matmul(A("t", i), A("f", j)), tinv[i]);
            out.push_back({"t_if_jt_i^-1:" + ij, matzero(matadd(tf, A("f", j), -F.q_power(-a))), ""});
            Matrix tt = matadd(matmul(A("t", i), A("t", j)), matmul(A("t", j), A("t", i)), Scalar(-1));
            out.push_back({"t_it_j:" + ij, matzero(tt), ""});
            if (i == j) continue;
            int N = 1 - cfg.cartan().C[i][j];
            for (std::string side : {"e", "f"}) {
                std::vector<Matrix> pw{identity(d)};
                for (int k = 1; k <= N; ++k) pw.push_back(matmul(pw.back(), A(side, i)));
                Matrix sum(d, std::vector<Scalar>(d));
                for (int k = 0; k <= N; ++k) {
                    Scalar c = F.q_binomial(N, k, cfg.cartan().D[i]);
                    if (k % 2) c = -c;
                    sum = matadd(sum, matmul(matmul(pw[k], A(side, j)), pw[N - k]), c);
                }
                out.push_back({"serre-" + side + ":" + ij, matzero(sum), ""});
            }
        }
    return out;
}

bool highest_line_unique(const ModuleBasis& mb) {
    const AlgebraConfig& cfg = *mb.cfg;
    size_t d = mb.dimension();
    if (d == 0) return false;
    Weight top = weight_of(mb, 0);
    std::vector<size_t> idx;
    for (size_t k = 0; k < d; ++k)
        if (weight_of(mb, k) == top) idx.push_back(k);
    // stack the ad(e_i) columns restricted to the top weight space
    Matrix stacked;
    for (int i = 0; i < cfg.rank(); ++i) {
        const Matrix& E = mb.action.at("e" + std::to_string(i + 1));
        for (size_t r = 0; r < d; ++r) {
            std::vector<Scalar> row;
            for (size_t k : idx) row.push_back(E[r][k]);
            stacked.push_back(row);
        }
    }
    return idx.size() - matrank(stacked) == 1;
}

bool DoubleModuleReport::pass() const {
    for (auto& c : checks)
        if (!c.pass) return false;
    return true;
}

Scalar double_module_coefficient(const AlgebraConfig& cfg, int i, int n) {
    const QField& F = cfg.field();
    long aii = cfg.cartan().A[i][i];
    mpq_class la = cfg.weight()->pairing[i] / 2;  // weight of w is 2 lambda
    Scalar r(1);
    for (int k = 1; k <= n; ++k) r *= (F.q_power(k * aii) - Scalar(1)) / (F.q_power(aii) - Scalar(1));
    for (int k = 0; k < n; ++k) r *= Scalar(1) - F.q_power(k * aii) * F.q_power(2 * la);
    return r;
}

Scalar double_module_coefficient_f(const AlgebraConfig& cfg, int i, int n) {
    const QField& F = cfg.field();
    long aii = cfg.cartan().A[i][i];
    mpq_class la = cfg.weight()->pairing[i] / 2;
    Scalar r(1);
    for (int k = 1; k <= n; ++k) r *= (F.q_power(-k * aii) - Scalar(1)) / (F.q_power(-aii) - Scalar(1));
    for (int k = 0; k < n; ++k) r *= Scalar(1) - F.q_power(-k * aii) * F.q_power(-2 * la);
    return r;
}

DoubleModuleReport double_module_check(const CartanData& cd, const WeightData& lambda, int n_max,
                                       bool close_module, size_t cap) {
    DoubleModuleReport rep;
    WeightData mu = scale_weight(cd, lambda, 2);
    AlgebraConfig cfg(cd, Variant::Invariant, mu, default_root_order(lambda));
    Antipode S(cfg, PairSpec::standard(cfg, Mode::Quasi));
    Element w = start_letter(cfg);
    for (int i = 0; i < cd.rank(); ++i) {
        std::string s = std::to_string(i + 1);
        long want = 1 - lambda.coroot[i];
        for (int side = 0; side < 2; ++side) {
            Element cur = w, g = Element::letter(cfg, side == 0 ? cfg.E(i) : cfg.F(i));
            long thr = -1;
            bool all_match = true;
            for (int n = 1; n <= n_max; ++n) {
                cur = adjoint_action(g, cur, S);
                LineReport lr;
                lr.i = i;
                lr.n = n;
                lr.side = side == 0 ? "E" : "F";
                lr.computed = cur.str();
                lr.expected = side == 0 ? double_module_coefficient(cfg, i, n) : double_module_coefficient_f(cfg, i, n);
                lr.expected_word = Word(n, side == 0 ? cfg.E(i) : cfg.F(i));
                lr.expected_word.push_back(cfg.extra());
                Element want_el(&cfg);
                want_el.add(Term{lr.expected_word, cfg.unit()}, lr.expected);
                lr.computed_coeff = cur.coeff(Term{lr.expected_word, cfg.unit()});
                lr.match = cur == want_el;
                lr.matches_displayed = lr.computed_coeff == double_module_coefficient(cfg, i, n);
                all_match = all_match && lr.match;
                if (cur.is_zero() && thr < 0) thr = n;
                rep.lines.push_back(lr);
            }
            (side == 0 ? rep.e_vanishing : rep.f_vanishing).push_back(thr);
            std::string tag = std::string(side == 0 ? "ad(E" : "ad(F") + s + ")^n(w)";
            rep.checks.push_back({tag + " closed form n<=" + std::to_string(n_max), all_match, ""});
            bool vanish_ok = n_max < want ? thr < 0 : thr == want;
            rep.checks.push_back({tag + " vanishes first at n=" + std::to_string(want), vanish_ok,
                                  "measured " + std::to_string(thr)});
        }
    }
    if (close_module) {
        ModuleBasis mb = generate_module(cfg, w, cap, Mode::Quotient);
        rep.closure_dimension = mb.closed ? static_cast<long>(mb.dimension()) : -1;
        if (cd.finite_type()) {
            std::vector<long> dom;
            for (long x : lambda.coroot) dom.push_back(-x);
            long d = weyl_dim_oracle(cd, dom);
            rep.expected_closure = d * d;
        }
        rep.checks.push_back({"closure dimension", rep.closure_dimension == rep.expected_closure,
                              std::to_string(rep.closure_dimension)});
    }
    return rep;
}

std::vector<std::vector<long>> positive_roots(const CartanData& cd) {
    if (!cd.finite_type()) throw DomainError("Weyl dimension oracle needs a finite-type Cartan matrix");
    int n = cd.rank();
    std::set<std::vector<long>> roots;
    std::deque<std::vector<long>> todo;
    for (int i = 0; i < n; ++i) {
        std::vector<long> a(n, 0);
        a[i] = 1;
        roots.insert(a);
        todo.push_back(a);
    }
    while (!todo.empty()) {
        auto b = todo.front();
        todo.pop_front();
        for (int j = 0; j < n; ++j) {
            // <b, alpha_j^vee> = sum_i b_i c_ji
            long p = 0;
            for (int i = 0; i < n; ++i) p += b[i] * cd.C[j][i];
            auto r = b;
            r[j] -= p;
            bool pos = true, nonzero = false;
            for (long x : r) {
                if (x < 0) pos = false;
                if (x) nonzero = true;
            }
            if (pos && nonzero && roots.insert(r).second) {
                if (roots.size() > 1000) throw DomainError("root system does not close");
                todo.push_back(r);
            }
        }
    }
    return {roots.begin(), roots.end()};
}

long weyl_dim_oracle(const CartanData& cd, const std::vector<long>& mu) {
    int n = cd.rank();
    if (static_cast<int>(mu.size()) != n) throw DomainError("weight length mismatch");
    mpq_class r = 1;
    for (auto& b : positive_roots(cd)) {
        // (x, beta) = sum_j x_j b_j d_j for x in fundamental weight coordinates
        mpq_class num = 0, den = 0;
        for (int j = 0; j < n; ++j) {
            num += (mu[j] + 1) * b[j] * cd.D[j];
            den += b[j] * cd.D[j];
        }
        r *= num / den;
    }
    if (r.get_den() != 1) throw DomainError("non-integral Weyl dimension");
    return r.get_num().get_si();
}

CheckResult projector_consistency(const AlgebraConfig& cfg, uint64_t seed, int count) {
    CheckResult res{"P(a v b) = eps(b) ad(a)(v)", true, ""};
    PairSpec spec = PairSpec::standard(cfg, Mode::Quasi);
    Antipode S(cfg, spec);
    int extra = cfg.extra();
    auto keep = [&](const Term& t) {
        for (int x : t.w)
            if (x == extra) return false;
        return true;
    };
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, 3 * cfg.rank() - 1), lenp(0, 2), coef(-2, 2), tor(-1, 1);
    auto rnd = [&]() {
        Element r(&cfg);
        for (int k = 0; k < 2; ++k) {
            Word w;
            int l = lenp(rng);
            for (int s = 0; s < l; ++s) w.push_back(pick(rng));
            Torus t = cfg.unit();
            for (int a = 0; a < cfg.rank(); ++a) t[a] = tor(rng);
            int c = coef(rng);
            r.add(Term{w, t}, Scalar(c == 0 ? 1 : c));
        }
        return r;
    };
    Element v = start_letter(cfg);
    for (int k = 0; k < count; ++k) {
        Element a = rnd(), b = rnd();
        Element avb = multiply(multiply(a, v, spec), b, spec);
        Element lhs = project_coinvariants(avb, S, keep);
        Element rhs = adjoint_action(a, v, S) * counit(b);
        if (lhs != rhs) {
            res.pass = false;
            res.witness = "sample " + std::to_string(k);
            break;
        }
    }
    return res;
}

}  // namespace qsym
