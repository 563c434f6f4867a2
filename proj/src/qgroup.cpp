#include "qsym/qgroup.hpp"

#include <cctype>

namespace qsym {

bool all_pass(const RelationReport& r) {
    for (auto& x : r)
        if (!x.pass) return false;
    return true;
}

QuantumGroupModel::QuantumGroupModel(const AlgebraConfig& cfg, Mode mode)
    : cfg_(cfg), spec_(PairSpec::standard(cfg, mode)) {}

Element QuantumGroupModel::mul(std::initializer_list<Element> xs) const {
    Element r = one();
    for (auto& x : xs) r = mul(r, x);
    return r;
}

std::vector<std::pair<std::string, Element>> QuantumGroupModel::generators() const {
    std::vector<std::pair<std::string, Element>> g;
    for (int i = 0; i < cfg_.rank(); ++i) {
        std::string s = std::to_string(i + 1);
        g.push_back({"e" + s, e(i)});
        g.push_back({"f" + s, f(i)});
        g.push_back({"t" + s, t(i)});
        g.push_back({"t" + s + "^-1", t(i, -1)});
    }
    return g;
}

namespace {
Relation make(const std::string& name, const Element& res) { return Relation{name, res.is_zero(), res}; }
}  // namespace

RelationReport relation_suite(const QuantumGroupModel& m) {
    const AlgebraConfig& cfg = m.cfg();
    const QField& F = cfg.field();
    RelationReport r;
    int n = cfg.rank();
    bool quotient = m.mode() == Mode::Quotient || m.mode() == Mode::QuotientLiteral;
    for (int i = 0; i < n; ++i) {
        std::string si = std::to_string(i + 1);
        r.push_back(make("t" + si + "*t" + si + "^-1=1", m.mul(m.t(i), m.t(i, -1)) - m.one()));
        for (int j = 0; j < n; ++j) {
            std::string sj = std::to_string(j + 1), ij = si + sj;
            long a = cfg.cartan().A[i][j];
            r.push_back(make("t_it_j=t_jt_i:" + ij, m.mul(m.t(i), m.t(j)) - m.mul(m.t(j), m.t(i))));
            r.push_back(make("t_ie_j=q^a e_jt_i:" + ij,
                             m.mul(m.t(i), m.e(j)) - m.mul(m.e(j), m.t(i)) * F.q_power(a)));
            r.push_back(make("t_if_j=q^-a f_jt_i:" + ij,
                             m.mul(m.t(i), m.f(j)) - m.mul(m.f(j), m.t(i)) * F.q_power(-a)));
            Element lhs = m.mul(m.e(i), m.f(j)) - m.mul(m.f(j), m.e(i));
            if (i == j) {
                Scalar d = cfg.qi_diff(i).inverse();
                if (quotient) {
                    lhs -= (m.t(i) - m.t(i, -1)) * d;
                } else {
                    lhs -= Element::word(cfg, Word{cfg.XI(i)}, cfg.K(i, -1)) * d;
                }
            }
            r.push_back(make("e_if_j-f_je_i:" + ij, lhs));
        }
    }
    return r;
}

Relation serre_check(const QuantumGroupModel& m, int i, int j, bool f_side) {
    if (i == j) throw DomainError("serre_check needs i != j");
    const AlgebraConfig& cfg = m.cfg();
    int N = 1 - cfg.cartan().C[i][j];
    auto X = [&](int k) { return f_side ? m.f(k) : m.e(k); };
    std::vector<Element> pw{m.one()};
    for (int k = 1; k <= N; ++k) pw.push_back(m.mul(pw.back(), X(i)));
    Element xj = X(j);
    Element sum(&cfg);
    for (int k = 0; k <= N; ++k) {
        Scalar c = cfg.field().q_binomial(N, k, cfg.cartan().D[i]);
        if (k % 2) c = -c;
        sum.add_scaled(m.mul(m.mul(pw[k], xj), pw[N - k]), c);
    }
    std::string name = std::string("serre-") + (f_side ? "F" : "E") + ":" + std::to_string(i + 1) +
                       std::to_string(j + 1) + ":N=" + std::to_string(N);
    return make(name, sum);
}

RelationReport serre_suite(const QuantumGroupModel& m) {
    RelationReport r;
    int n = m.cfg().rank();
    for (int side = 0; side < 2; ++side)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) r.push_back(serre_check(m, i, j, side == 1));
    return r;
}

Tensor coideal_residual(const Element& x, const Torus& g) {
    const AlgebraConfig& cfg = x.cfg();
    Tensor want = tensor_of(Element::torus(cfg, g), x);
    want.add_scaled(tensor_of(x, Element::one(cfg)), Scalar(1));
    return coproduct(x) - want;
}

RelationReport xi_ideal_check(const AlgebraConfig& cfg) {
    RelationReport r;
    for (int i = 0; i < cfg.rank(); ++i) {
        Element x = Element::letter(cfg, cfg.XI(i)) - Element::torus(cfg, cfg.K(i, 2)) + Element::one(cfg);
        Tensor res = coideal_residual(x, cfg.K(i, 2));
        Element flat(&cfg);  // residual reported through its left legs
        for (auto& [k, c] : res.terms()) flat.add(k.first, c);
        Relation rel{"coideal:x" + std::to_string(i + 1), res.is_zero(), res.is_zero() ? Element(&cfg) : flat};
        r.push_back(rel);
    }
    return r;
}

Laurent parse_laurent(const std::string& src, char var) {
    std::string s;
    for (char c : src)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ConfigError("empty polynomial");
    Laurent p;
    size_t i = 0;
    auto number = [&](std::string& out) {
        size_t st = i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
        out = s.substr(st, i - st);
    };
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        std::string num;
        number(num);
        mpq_class c = 1;
        if (!num.empty()) {
            c = mpq_class(num);
            c.canonicalize();
            if (i < s.size() && s[i] == '*') ++i;
        }
        int e = 0;
        if (i < s.size() && s[i] == var) {
            ++i;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                int es = 1;
                if (i < s.size() && (s[i] == '-' || s[i] == '+')) es = s[i++] == '-' ? -1 : 1;
                if (i < s.size() && s[i] == '(') {
                    ++i;
                    if (i < s.size() && s[i] == '-') { es = -es; ++i; }
                    std::string d;
                    number(d);
                    if (i >= s.size() || s[i] != ')') throw ConfigError("cannot parse polynomial: " + src);
                    ++i;
                    e = es * std::stoi(d);
                } else {
                    std::string d;
                    number(d);
                    if (d.empty()) throw ConfigError("cannot parse polynomial: " + src);
                    e = es * std::stoi(d);
                }
            }
        } else if (num.empty()) {
            throw ConfigError("cannot parse polynomial: " + src);
        }
        p[e] += sign * c;
        if (p[e] == 0) p.erase(e);
    }
    return p;
}

bool substitution_admissibility(const Laurent& p) {
    // Delta(P) against K^2 # P + P # 1, both in H # H
    std::map<std::pair<int, int>, mpq_class> lhs, rhs;
    for (auto& [e, c] : p) {
        lhs[{e, e}] += c;
        rhs[{2, e}] += c;
        rhs[{e, 0}] += c;
    }
    auto clean = [](std::map<std::pair<int, int>, mpq_class>& m) {
        for (auto it = m.begin(); it != m.end();) it = sgn(it->second) == 0 ? m.erase(it) : std::next(it);
    };
    clean(lhs);
    clean(rhs);
    return lhs == rhs;
}

bool in_scaled_family(const Laurent& p) {
    if (p.empty()) return true;
    if (p.size() != 2 || !p.count(2) || !p.count(0)) return false;
    return p.at(2) == -p.at(0);
}

Element quotient_multiply(const Element& a, const Element& b) { return quotient_product(a, b, Mode::Quotient); }

Element random_generator_poly(const QuantumGroupModel& m, std::mt19937_64& rng, int len, int terms) {
    auto gens = m.generators();
    std::uniform_int_distribution<int> pick(0, static_cast<int>(gens.size()) - 1), lenp(0, len), coef(-3, 3);
    Element r(&m.cfg());
    for (int k = 0; k < terms; ++k) {
        Element p = m.one();
        int l = lenp(rng);
        for (int s = 0; s < l; ++s) p = m.mul(p, gens[pick(rng)].second);
        int c = coef(rng);
        r.add_scaled(p, Scalar(c == 0 ? 1 : c));
    }
    return r;
}

Element random_engine_element(const AlgebraConfig& cfg, std::mt19937_64& rng, int len, int terms) {
    std::uniform_int_distribution<int> pick(0, cfg.alphabet_size() - 1), lenp(0, len), coef(-3, 3), tor(-1, 1);
    Element r(&cfg);
    for (int k = 0; k < terms; ++k) {
        Word w;
        int l = lenp(rng);
        for (int s = 0; s < l; ++s) w.push_back(pick(rng));
        Torus t = cfg.unit();
        for (auto& x : t) x = tor(rng);
        int c = coef(rng);
        r.add(Term{w, t}, Scalar(c == 0 ? 1 : c));
    }
    return r;
}

AssociativityReport associativity_suite(const QuantumGroupModel& m, uint64_t seed, int random_count,
                                        bool generator_poly_inputs) {
    AssociativityReport rep;
    auto note = [&](const std::string& what) {
        if (rep.failures++ == 0) rep.first_failure = what;
    };
    auto gens = m.generators();
    for (auto& [na, a] : gens)
        for (auto& [nb, b] : gens)
            for (auto& [nc, c] : gens) {
                ++rep.generator_triples;
                if (m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c))) note(na + "," + nb + "," + nc);
            }
    std::mt19937_64 rng(seed);
    for (int k = 0; k < random_count; ++k) {
        Element a = generator_poly_inputs ? random_generator_poly(m, rng, 2) : random_engine_element(m.cfg(), rng, 2);
        Element b = generator_poly_inputs ? random_generator_poly(m, rng, 2) : random_engine_element(m.cfg(), rng, 2);
        Element c = generator_poly_inputs ? random_generator_poly(m, rng, 2) : random_engine_element(m.cfg(), rng, 2);
        ++rep.random_triples;
        if (m.mul(m.mul(a, b), c) != m.mul(a, m.mul(b, c))) note("random #" + std::to_string(k));
    }
    return rep;
}

}  // namespace qsym
