#pragma once
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsym/scalar.hpp"

namespace qsym {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using IntMatrix = std::vector<std::vector<int>>;
using Torus = std::vector<int>;

struct CartanData {
    IntMatrix C;
    std::vector<int> D;
    IntMatrix A;  // DC
    int rank() const { return static_cast<int>(C.size()); }
    bool finite_type() const;  // A positive definite
};

CartanData build_cartan_data(const IntMatrix& C, const std::vector<int>& D);

struct WeightData {
    std::vector<long> coroot;       // lambda_i = 2(lambda,alpha_i)/(alpha_i,alpha_i)
    std::vector<mpq_class> pairing; // (lambda, alpha_i)
    mpq_class self = 0;             // (lambda, lambda)
};

// lambda given by its coroot values, must be nonpositive
WeightData make_weight(const CartanData& cd, const std::vector<long>& coroot);
WeightData scale_weight(const CartanData& cd, const WeightData& w, long k);

enum class Variant { Standard, HighestWeight, Invariant };
enum class LetterKind { E, F, XI, HW, INV };

struct Letter {
    LetterKind kind;
    int index;               // 0-based generator index, -1 for v and w
    Torus degree;            // g(x)
    std::vector<long> row;   // v-exponent of K_a acting on x, per torus generator
    std::string name;
};

class AlgebraConfig {
public:
    AlgebraConfig(CartanData cd, Variant var, std::optional<WeightData> w = std::nullopt,
                  int root_order = 0);

    const CartanData& cartan() const { return cd_; }
    Variant variant() const { return variant_; }
    const std::optional<WeightData>& weight() const { return weight_; }
    const QField& field() const { return field_; }
    int rank() const { return cd_.rank(); }
    int lattice_dim() const { return m_; }
    int alphabet_size() const { return static_cast<int>(letters_.size()); }
    const Letter& letter(int id) const { return letters_[id]; }

    int E(int i) const { return i; }
    int F(int i) const { return rank() + i; }
    int XI(int i) const { return 2 * rank() + i; }
    int extra() const;  // v or w
    int letter_id(const std::string& name) const;

    Torus unit() const { return Torus(m_, 0); }
    Torus K(int i, int power = 1) const;

    long chi_exp(const Torus& a, int letter) const;
    Scalar chi(const Torus& a, int letter) const { return Scalar::vpow(chi_exp(a, letter)); }
    Scalar qi_diff(int i) const;  // q_i - q_i^{-1}

    // testing hook: replace the coaction degree of every xi_i by K_i^power
    AlgebraConfig with_xi_degree(int power) const;

private:
    CartanData cd_;
    Variant variant_;
    std::optional<WeightData> weight_;
    QField field_;
    int m_;
    std::vector<Letter> letters_;
};

Scalar bicharacter(const AlgebraConfig& cfg, const Torus& a, int letter);

int default_root_order(const std::optional<WeightData>& w);

}  // namespace qsym
