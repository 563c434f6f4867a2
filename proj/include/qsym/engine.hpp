#pragma once
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qsym/element.hpp"

namespace qsym {

enum class Mode { Shuffle, Quasi, Quotient, QuotientLiteral };

std::string mode_name(Mode m);
Mode parse_mode(const std::string& s);

struct AlphaEntry {
    int left, right, result;
    Scalar coeff;  // multiplied by the twist chi(left torus, right letter)
};

struct PairSpec {
    Mode mode = Mode::Quasi;
    std::vector<AlphaEntry> alpha;

    static PairSpec standard(const AlgebraConfig& cfg, Mode mode);
    const AlphaEntry* lookup(int left, int right) const;
};

// coproduct and counit
Tensor coproduct(const Element& x);
Scalar counit(const Element& x);
Element counit_left(const Tensor& t);   // (eps x id)
Element counit_right(const Tensor& t);  // (id x eps)
Tensor tensor_of(const Element& a, const Element& b);
Tensor coproduct_left(const Tensor& t);   // (Delta x id) as a sum of triples flattened into (a#b)#c
Tensor coproduct_right(const Tensor& t);

// triples for coassociativity
using Triple = std::map<std::tuple<Term, Term, Term>, Scalar>;
Triple delta_delta_left(const Element& x);
Triple delta_delta_right(const Element& x);

// interior torus factors routed to the right
struct Piece {
    int letter;  // -1 for a bare torus factor
    Torus t;
};
Element normalize_word(const AlgebraConfig& cfg, const std::vector<Piece>& parts);

Element multiply(const Element& a, const Element& b, const PairSpec& spec);
Tensor multiply(const Tensor& a, const Tensor& b, const PairSpec& spec);
Element braiding(const AlgebraConfig& cfg, int x, int y);

class Antipode {
public:
    Antipode(const AlgebraConfig& cfg, PairSpec spec) : cfg_(cfg), spec_(std::move(spec)) {}
    Element operator()(const Element& x);
    const PairSpec& spec() const { return spec_; }

private:
    Element pure(const Word& w);
    const AlgebraConfig& cfg_;
    PairSpec spec_;
    std::map<Word, Element> memo_;
    std::mutex mu_;
};

Element antipode(const Element& x, const PairSpec& spec);

// sum x_(1) S(p(x_(2))); keep selects the terms kept by p
Element project_coinvariants(const Element& x, Antipode& S,
                             const std::function<bool(const Term&)>& keep);
Element project_coinvariants(const Element& x, const PairSpec& spec);

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string witness;
};

std::vector<CheckResult> validate_pair(const AlgebraConfig& cfg, const PairSpec& spec);

// weighted shuffle oracle for pure words, no alpha
Element shuffle_oracle(const AlgebraConfig& cfg, const Word& u, const Word& w);

// quotient model
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
Element resolve_single_xi(const Element& x);
Element rewrite_xi_literal(const Element& x);
Element quotient_product(const Element& a, const Element& b, Mode mode);

}  // namespace qsym
