#include "qsym/element.hpp"

#include <sstream>

namespace qsym {

Torus torus_add(const Torus& a, const Torus& b) {
    Torus r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Torus torus_neg(const Torus& a) {
    Torus r = a;
    for (auto& x : r) x = -x;
    return r;
}

Torus word_degree(const AlgebraConfig& cfg, const Word& w, size_t from, size_t to) {
    Torus r = cfg.unit();
    to = std::min(to, w.size());
    for (size_t k = from; k < to; ++k) {
        const Torus& d = cfg.letter(w[k]).degree;
        for (size_t i = 0; i < r.size(); ++i) r[i] += d[i];
    }
    return r;
}

Element Element::one(const AlgebraConfig& cfg) { return torus(cfg, cfg.unit()); }

Element Element::torus(const AlgebraConfig& cfg, const Torus& t) {
    Element e(&cfg);
    e.add(Term{{}, t}, Scalar(1));
    return e;
}

Element Element::word(const AlgebraConfig& cfg, const Word& w, const Torus& t) {
    Element e(&cfg);
    e.add(Term{w, t}, Scalar(1));
    return e;
}

Element Element::word(const AlgebraConfig& cfg, const Word& w) { return word(cfg, w, cfg.unit()); }
Element Element::letter(const AlgebraConfig& cfg, int id) { return word(cfg, Word{id}); }

int Element::max_length() const {
    int m = 0;
    for (auto& [t, c] : terms_) m = std::max(m, static_cast<int>(t.w.size()));
    return m;
}

bool Element::has_kind(LetterKind k) const {
    for (auto& [t, c] : terms_)
        for (int x : t.w)
            if (cfg_->letter(x).kind == k) return true;
    return false;
}

Scalar Element::coeff(const Term& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Scalar() : it->second;
}

void Element::add(const Term& t, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(t, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Element::add(Term&& t, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(std::move(t), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Element::check(const Element& o) const {
    if (cfg_ && o.cfg_ && cfg_ != o.cfg_) throw MixedConfigError("elements from different configurations");
}

void Element::add_scaled(const Element& o, const Scalar& c) {
    check(o);
    if (!cfg_) cfg_ = o.cfg_;
    if (c.is_zero()) return;
    for (auto& [t, x] : o.terms_) add(t, c.is_one() ? x : x * c);
}

Element Element::operator+(const Element& o) const {
    Element r = *this;
    r.add_scaled(o, Scalar(1));
    return r;
}

Element Element::operator-(const Element& o) const {
    Element r = *this;
    r.add_scaled(o, Scalar(-1));
    return r;
}

Element Element::operator-() const { return *this * Scalar(-1); }

Element Element::operator*(const Scalar& c) const {
    Element r(cfg_);
    if (c.is_zero()) return r;
    for (auto& [t, x] : terms_) r.terms_.emplace(t, x * c);
    return r;
}

Element& Element::operator+=(const Element& o) {
    add_scaled(o, Scalar(1));
    return *this;
}

Element& Element::operator-=(const Element& o) {
    add_scaled(o, Scalar(-1));
    return *this;
}

bool Element::operator==(const Element& o) const {
    check(o);
    return terms_ == o.terms_;
}

std::string term_str(const AlgebraConfig& cfg, const Term& t) {
    std::ostringstream os;
    os << "(";
    for (size_t k = 0; k < t.w.size(); ++k) os << (k ? "," : "") << cfg.letter(t.w[k]).name;
    os << ")[";
    for (size_t k = 0; k < t.t.size(); ++k) os << (k ? "," : "") << t.t[k];
    os << "]";
    return os.str();
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [t, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")" << term_str(*cfg_, t);
        first = false;
    }
    return os.str();
}

void Tensor::add(const Term& a, const Term& b, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(Key{a, b}, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Tensor::add_scaled(const Tensor& o, const Scalar& c) {
    if (!cfg_) cfg_ = o.cfg_;
    for (auto& [k, x] : o.terms_) add(k.first, k.second, x * c);
}

Tensor Tensor::operator-(const Tensor& o) const {
    Tensor r = *this;
    r.add_scaled(o, Scalar(-1));
    return r;
}

std::string Tensor::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")" << term_str(*cfg_, k.first) << "#" << term_str(*cfg_, k.second);
        first = false;
    }
    return os.str();
}

}  // namespace qsym
