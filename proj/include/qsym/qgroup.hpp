#pragma once
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qsym/engine.hpp"

namespace qsym {

struct Relation {
    std::string name;
    bool pass = true;
    Element residual;
};

using RelationReport = std::vector<Relation>;

bool all_pass(const RelationReport& r);

class QuantumGroupModel {
public:
    QuantumGroupModel(const AlgebraConfig& cfg, Mode mode);
    const AlgebraConfig& cfg() const { return cfg_; }
    const PairSpec& spec() const { return spec_; }
    Mode mode() const { return spec_.mode; }

    Element e(int i) const { return Element::letter(cfg_, cfg_.E(i)); }
    Element f(int i) const { return Element::word(cfg_, Word{cfg_.F(i)}, cfg_.K(i, -1)); }
    Element t(int i, int p = 1) const { return Element::torus(cfg_, cfg_.K(i, p)); }
    Element one() const { return Element::one(cfg_); }
    Element mul(const Element& a, const Element& b) const { return multiply(a, b, spec_); }
    Element mul(std::initializer_list<Element> xs) const;

    // generator images e_i, f_i, t_i, t_i^{-1}
    std::vector<std::pair<std::string, Element>> generators() const;

private:
    const AlgebraConfig& cfg_;
    PairSpec spec_;
};

RelationReport relation_suite(const QuantumGroupModel& m);
Relation serre_check(const QuantumGroupModel& m, int i, int j, bool f_side);
RelationReport serre_suite(const QuantumGroupModel& m);
RelationReport xi_ideal_check(const AlgebraConfig& cfg);
Tensor coideal_residual(const Element& x, const Torus& g);

using Laurent = std::map<int, mpq_class>;  // exponent of K -> coefficient
Laurent parse_laurent(const std::string& s, char var = 'K');
bool substitution_admissibility(const Laurent& p);
bool in_scaled_family(const Laurent& p);  // lambda (K^2 - 1)

Element quotient_multiply(const Element& a, const Element& b);

// random linear combination of products of at most len generator images
Element random_generator_poly(const QuantumGroupModel& m, std::mt19937_64& rng, int len, int terms = 3);
// random element of the engine with words of length <= len
Element random_engine_element(const AlgebraConfig& cfg, std::mt19937_64& rng, int len, int terms = 3);

struct AssociativityReport {
    int generator_triples = 0;
    int random_triples = 0;
    int failures = 0;
    std::string first_failure;
};

AssociativityReport associativity_suite(const QuantumGroupModel& m, uint64_t seed, int random_count,
                                        bool generator_poly_inputs);

}  // namespace qsym
