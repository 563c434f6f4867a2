#include <algorithm>

#include "qsym/engine.hpp"
#include "qsym/linalg.hpp"

namespace qsym {

namespace {

bool is_xi(const AlgebraConfig& cfg, int x) { return cfg.letter(x).kind == LetterKind::XI; }

Element quasi(const Element& a, const Element& b) {
    return multiply(a, b, PairSpec::standard(a.cfg(), Mode::Quasi));
}

}  // namespace

Element resolve_single_xi(const Element& x) {
    const AlgebraConfig& cfg = x.cfg();
    Element r(&cfg);
    for (auto& [t, c] : x.terms()) {
        std::vector<size_t> pos;
        for (size_t k = 0; k < t.w.size(); ++k)
            if (is_xi(cfg, t.w[k])) pos.push_back(k);
        if (pos.empty()) {
            r.add(t, c);
            continue;
        }
        if (pos.size() > 1) throw DomainError("more than one xi letter in a single-generator product");
        size_t p = pos[0];
        int i = cfg.letter(t.w[p]).index;
        Word rest = t.w;
        rest.erase(rest.begin() + p);
        Torus up = torus_add(t.t, cfg.K(i, 2));
        if (t.w.size() == 1) {
            r.add(Term{rest, up}, c);
            r.add(Term{rest, t.t}, -c);
        } else if (p == 0) {
            r.add(Term{rest, t.t}, -c);
        } else if (p + 1 == t.w.size()) {
            r.add(Term{rest, up}, c);
        }
    }
    return r;
}

Element rewrite_xi_literal(const Element& x) {
    const AlgebraConfig& cfg = x.cfg();
    Element cur = x;
    for (;;) {
        Element next(&cfg);
        bool any = false;
        for (auto& [t, c] : cur.terms()) {
            auto it = std::find_if(t.w.begin(), t.w.end(), [&](int l) { return is_xi(cfg, l); });
            if (it == t.w.end()) {
                next.add(t, c);
                continue;
            }
            any = true;
            size_t p = it - t.w.begin();
            int i = cfg.letter(*it).index;
            std::vector<Piece> parts;
            for (size_t k = 0; k < t.w.size(); ++k) {
                if (k == p) parts.push_back({-1, cfg.K(i, 2)});
                else parts.push_back({t.w[k], cfg.unit()});
            }
            parts.push_back({-1, t.t});
            next.add_scaled(normalize_word(cfg, parts), c);
            Word rest = t.w;
            rest.erase(rest.begin() + p);
            next.add(Term{rest, t.t}, -c);
        }
        cur = next;
        if (!any) return cur;
    }
}

namespace {

// F_m1 * ... * F_mk as pure words
Element monomial(const AlgebraConfig& cfg, const Word& m) {
    Element r = Element::one(cfg);
    for (int x : m) r = quasi(r, Element::letter(cfg, x));
    return r;
}

// sum_w w # B_w  ->  sum_m mono(m) # C_m, the words w ranging over one letter multiset
template <class Fn>
void invert_symmetrizer(const AlgebraConfig& cfg, const std::map<Word, Element>& parts, Fn&& emit) {
    std::map<Word, std::vector<Word>> groups;
    for (auto& [w, b] : parts) {
        Word key = w;
        std::sort(key.begin(), key.end());
        groups[key].push_back(w);
    }
    for (auto& [key, present] : groups) {
        std::vector<Word> words;
        Word p = key;
        do words.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        size_t n = words.size();
        std::map<Word, size_t> row;
        for (size_t i = 0; i < n; ++i) row[words[i]] = i;
        Matrix om(n, std::vector<Scalar>(n));
        for (size_t j = 0; j < n; ++j)
            for (auto& [t, c] : monomial(cfg, words[j]).terms()) om[row.at(t.w)][j] = c;
        Element zero(&cfg);
        std::vector<Element> rhs(n, zero);
        for (auto& w : present) rhs[row.at(w)] = parts.at(w);
        auto sol = solve_linear(om, rhs, zero);
        if (!sol) throw DomainError("operand is not in the subalgebra generated by the generator images");
        for (size_t j = 0; j < n; ++j)
            if (!(*sol)[j].is_zero()) emit(words[j], (*sol)[j]);
    }
}

struct Split {
    // element = sum c * (y shuffle x) K
    std::vector<std::tuple<Word, Word, Torus, Scalar>> parts;
};

Split split_triangular(const Element& b) {
    const AlgebraConfig& cfg = b.cfg();
    Split s;
    Element rebuilt(&cfg);
    for (auto& [t, c] : b.terms()) {
        size_t k = 0;
        while (k < t.w.size() && cfg.letter(t.w[k]).kind == LetterKind::F) ++k;
        bool sorted = true;
        for (size_t j = k; j < t.w.size(); ++j)
            if (cfg.letter(t.w[j]).kind != LetterKind::E) sorted = false;
        if (!sorted) continue;
        Word y(t.w.begin(), t.w.begin() + k), x(t.w.begin() + k, t.w.end());
        s.parts.emplace_back(y, x, t.t, c);
        Element yx = quasi(Element::word(cfg, y), Element::word(cfg, x, t.t));
        rebuilt.add_scaled(yx, c);
    }
    if (rebuilt != b) throw DomainError("operand is not in the triangular span F-part * torus * E-part");
    return s;
}

void check_letters(const Element& a) {
    for (auto& [t, c] : a.terms())
        for (int x : t.w)
            if (a.cfg().letter(x).kind == LetterKind::XI) throw DomainError("xi letter in quotient operand");
}

bool only_ef(const Element& a) {
    for (auto& [t, c] : a.terms())
        for (int x : t.w) {
            auto k = a.cfg().letter(x).kind;
            if (k != LetterKind::E && k != LetterKind::F) return false;
        }
    return true;
}

}  // namespace

Element quotient_product(const Element& a, const Element& b, Mode mode) {
    if (a.config() != b.config()) throw MixedConfigError("multiply: elements from different configurations");
    const AlgebraConfig& cfg = a.cfg();
    if (mode == Mode::QuotientLiteral) return rewrite_xi_literal(quasi(a, b));
    check_letters(a);
    check_letters(b);
    if (a.max_length() <= 1 || b.max_length() <= 1) return resolve_single_xi(quasi(a, b));

    Element out(&cfg);
    if (only_ef(b)) {
        // b = sum_y y * B_y, y F-words, B_y in torus * E-words
        std::map<Word, Element> parts;
        for (auto& [y, x, t, c] : split_triangular(b).parts) {
            auto it = parts.try_emplace(y, Element(&cfg)).first;
            it->second.add(Term{x, t}, c);
        }
        invert_symmetrizer(cfg, parts, [&](const Word& m, const Element& cm) {
            Element cur = a;
            for (int x : m) cur = resolve_single_xi(quasi(cur, Element::letter(cfg, x)));
            out += quasi(cur, cm);
        });
        return out;
    }
    if (only_ef(a)) {
        // a = sum_x A_x * x, A_x in F-words * torus, x E-words
        std::map<Word, Element> parts;
        for (auto& [y, x, t, c] : split_triangular(a).parts) {
            long e = 0;
            for (int l : x) e -= cfg.chi_exp(t, l);
            auto it = parts.try_emplace(x, Element(&cfg)).first;
            it->second.add(Term{y, t}, c * Scalar::vpow(e));
        }
        invert_symmetrizer(cfg, parts, [&](const Word& m, const Element& dm) {
            Element cur = b;
            for (size_t k = m.size(); k-- > 0;) cur = resolve_single_xi(quasi(Element::letter(cfg, m[k]), cur));
            out += quasi(dm, cur);
        });
        return out;
    }
    throw DomainError("quotient product of two long operands that both carry an adjoined letter");
}

}  // namespace qsym
