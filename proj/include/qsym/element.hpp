#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsym/config.hpp"

namespace qsym {

using Word = std::vector<int>;

struct Term {
    Word w;
    Torus t;
    bool operator<(const Term& o) const { return w != o.w ? w < o.w : t < o.t; }
    bool operator==(const Term& o) const { return w == o.w && t == o.t; }
};

class Element {
public:
    using Map = std::map<Term, Scalar>;

    explicit Element(const AlgebraConfig* cfg = nullptr) : cfg_(cfg) {}
    static Element one(const AlgebraConfig& cfg);
    static Element torus(const AlgebraConfig& cfg, const Torus& t);
    static Element word(const AlgebraConfig& cfg, const Word& w, const Torus& t);
    static Element word(const AlgebraConfig& cfg, const Word& w);
    static Element letter(const AlgebraConfig& cfg, int id);

    const AlgebraConfig* config() const { return cfg_; }
    const AlgebraConfig& cfg() const { return *cfg_; }
    const Map& terms() const& { return terms_; }
    Map terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    int max_length() const;
    bool has_kind(LetterKind k) const;
    Scalar coeff(const Term& t) const;

    void add(const Term& t, const Scalar& c);
    void add(Term&& t, const Scalar& c);
    void add_scaled(const Element& o, const Scalar& c);

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator-() const;
    Element operator*(const Scalar& c) const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

    std::string str() const;

private:
    void check(const Element& o) const;
    const AlgebraConfig* cfg_;
    Map terms_;
};

struct MixedConfigError : std::logic_error {
    using std::logic_error::logic_error;
};

// sum of (left, right) pairs
class Tensor {
public:
    using Key = std::pair<Term, Term>;
    explicit Tensor(const AlgebraConfig* cfg = nullptr) : cfg_(cfg) {}
    const AlgebraConfig* config() const { return cfg_; }
    const std::map<Key, Scalar>& terms() const& { return terms_; }
    std::map<Key, Scalar> terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    void add(const Term& a, const Term& b, const Scalar& c);
    void add_scaled(const Tensor& o, const Scalar& c);
    Tensor operator-(const Tensor& o) const;
    bool operator==(const Tensor& o) const { return terms_ == o.terms_; }
    std::string str() const;

private:
    const AlgebraConfig* cfg_;
    std::map<Key, Scalar> terms_;
};

std::string term_str(const AlgebraConfig& cfg, const Term& t);
Torus torus_add(const Torus& a, const Torus& b);
Torus torus_neg(const Torus& a);
Torus word_degree(const AlgebraConfig& cfg, const Word& w, size_t from = 0, size_t to = SIZE_MAX);

}  // namespace qsym
