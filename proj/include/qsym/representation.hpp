#pragma once
#include <map>
#include <string>
#include <vector>

#include "qsym/engine.hpp"
#include "qsym/linalg.hpp"
#include "qsym/qgroup.hpp"

namespace qsym {

Element adjoint_action(const Element& x, const Element& m, Antipode& S);
Element adjoint_action(const Element& x, const Element& m, Mode mode = Mode::Quotient);

struct ModuleBasis {
    const AlgebraConfig* cfg = nullptr;
    std::vector<Element> basis;
    std::map<std::string, Matrix> action;  // "e1", "f1", "t1", ...
    bool closed = false;
    bool coinvariant = true;  // every basis term has trivial torus part
    size_t dimension() const { return basis.size(); }
};

// closure of {start} under ad(e_i), ad(f_i)
ModuleBasis generate_module(const AlgebraConfig& cfg, const Element& start, size_t cap = 200,
                            Mode mode = Mode::Quotient);
ModuleBasis generate_module(const AlgebraConfig& cfg, size_t cap = 200, Mode mode = Mode::Quotient);

using Weight = std::vector<mpq_class>;  // in coroot units
using CharacterTable = std::map<Weight, int>;

Weight weight_of(const ModuleBasis& mb, size_t k);
CharacterTable weight_character(const ModuleBasis& mb);

struct HighestWeightReport {
    std::vector<CheckResult> checks;
    std::vector<long> vanishing_threshold;  // smallest n with ad(f_i)^n(v) = 0
    bool pass() const;
};

HighestWeightReport highest_weight_checks(const AlgebraConfig& cfg, Mode mode = Mode::Quotient);

// operator identities on the action matrices
std::vector<CheckResult> operator_relations(const ModuleBasis& mb);
bool highest_line_unique(const ModuleBasis& mb);

struct LineReport {
    int i = 0;
    int n = 0;
    std::string side;      // "E" or "F"
    std::string computed;  // rendered, the config is local to the check
    Scalar computed_coeff;
    Scalar expected;       // closed form coefficient
    Word expected_word;
    bool match = false;
    bool matches_displayed = false;  // coefficient equals the E-line product verbatim
};

struct DoubleModuleReport {
    std::vector<LineReport> lines;
    std::vector<long> e_vanishing;  // measured first n with ad(E_i)^n(w) = 0
    std::vector<long> f_vanishing;
    long closure_dimension = -1;    // A1 only
    long expected_closure = -1;
    std::vector<CheckResult> checks;
    bool pass() const;
};

// closed form of ad(E_i)^n(w_{2 lambda})
Scalar double_module_coefficient(const AlgebraConfig& cfg, int i, int n);
// F-side analogue with q inverted
Scalar double_module_coefficient_f(const AlgebraConfig& cfg, int i, int n);

DoubleModuleReport double_module_check(const CartanData& cd, const WeightData& lambda, int n_max,
                                       bool close_module, size_t cap = 200);

long weyl_dim_oracle(const CartanData& cd, const std::vector<long>& mu);
std::vector<std::vector<long>> positive_roots(const CartanData& cd);

// P(a v b) = eps(b) ad(a)(v) in the quasi-symmetric engine
CheckResult projector_consistency(const AlgebraConfig& cfg, uint64_t seed, int count);

}  // namespace qsym
