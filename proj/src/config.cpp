#include "qsym/config.hpp"

#include <numeric>

namespace qsym {

namespace {
std::string entry(int i, int j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

// solve A x = b exactly, nullopt if singular
std::optional<std::vector<mpq_class>> solve(std::vector<std::vector<mpq_class>> a,
                                            std::vector<mpq_class> b) {
    int n = static_cast<int>(a.size());
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && sgn(a[p][c]) == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (int r = 0; r < n; ++r) {
            if (r == c || sgn(a[r][c]) == 0) continue;
            mpq_class f = a[r][c] / a[c][c];
            for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    for (int c = 0; c < n; ++c) b[c] /= a[c][c];
    return b;
}
}  // namespace

bool CartanData::finite_type() const {
    // leading principal minors of A
    int n = rank();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = A[i][j];
    for (int c = 0; c < n; ++c) {
        if (sgn(a[c][c]) <= 0) return false;
        for (int r = c + 1; r < n; ++r) {
            mpq_class f = a[r][c] / a[c][c];
            for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return true;
}

CartanData build_cartan_data(const IntMatrix& C, const std::vector<int>& D) {
    int n = static_cast<int>(C.size());
    if (n == 0) throw ConfigError("empty Cartan matrix");
    for (auto& row : C)
        if (static_cast<int>(row.size()) != n) throw ConfigError("Cartan matrix is not square");
    if (static_cast<int>(D.size()) != n) throw ConfigError("symmetrizer length mismatch");
    for (int i = 0; i < n; ++i)
        if (D[i] <= 0) throw ConfigError("symmetrizer entry " + std::to_string(i + 1) + " not positive");
    for (int i = 0; i < n; ++i) {
        if (C[i][i] != 2) throw ConfigError("diagonal entry " + entry(i, i) + " is not 2");
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (C[i][j] > 0) throw ConfigError("positive off-diagonal entry " + entry(i, j));
            if ((C[i][j] == 0) != (C[j][i] == 0))
                throw ConfigError("zero pattern not symmetric at entry " + entry(i, j));
        }
    }
    CartanData cd{C, D, IntMatrix(n, std::vector<int>(n))};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cd.A[i][j] = D[i] * C[i][j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (cd.A[i][j] != cd.A[j][i]) throw ConfigError("DC not symmetric at entry " + entry(i, j));
    return cd;
}

WeightData make_weight(const CartanData& cd, const std::vector<long>& coroot) {
    int n = cd.rank();
    if (static_cast<int>(coroot.size()) != n) throw ConfigError("weight length mismatch");
    for (int i = 0; i < n; ++i)
        if (coroot[i] > 0) throw ConfigError("weight is not in -P+ (entry " + std::to_string(i + 1) + ")");
    WeightData w;
    w.coroot = coroot;
    for (int i = 0; i < n; ++i) w.pairing.push_back(mpq_class(coroot[i] * cd.D[i]));
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = cd.A[i][j];
    if (auto c = solve(a, w.pairing)) {
        for (int i = 0; i < n; ++i) w.self += (*c)[i] * w.pairing[i];
    }
    return w;
}

WeightData scale_weight(const CartanData& cd, const WeightData& w, long k) {
    std::vector<long> c = w.coroot;
    for (auto& x : c) x *= k;
    return make_weight(cd, c);
}

int default_root_order(const std::optional<WeightData>& w) {
    if (!w) return 1;
    long l = 1;
    auto take = [&](const mpq_class& x) { l = std::lcm(l, x.get_den().get_si()); };
    for (auto& p : w->pairing) take(p);
    take(w->self);
    return static_cast<int>(2 * l);
}

AlgebraConfig::AlgebraConfig(CartanData cd, Variant var, std::optional<WeightData> w, int root_order)
    : cd_(std::move(cd)),
      variant_(var),
      weight_(std::move(w)),
      field_(root_order > 0 ? root_order : default_root_order(weight_)) {
    int n = cd_.rank();
    if (var != Variant::Standard && !weight_) throw ConfigError("weight variant needs a weight");
    m_ = var == Variant::Standard ? n : n + 1;
    long L = field_.root_order();
    auto vexp = [&](const mpq_class& e) { return field_.v_exponent(e); };
    for (int i = 0; i < n; ++i) {
        Letter x{LetterKind::E, i, K(i), std::vector<long>(m_, 0), "E" + std::to_string(i + 1)};
        for (int a = 0; a < n; ++a) x.row[a] = cd_.A[a][i] * L;
        if (m_ > n) x.row[n] = vexp(weight_->pairing[i]);
        letters_.push_back(x);
    }
    for (int i = 0; i < n; ++i) {
        Letter x = letters_[i];
        x.kind = LetterKind::F;
        x.name = "F" + std::to_string(i + 1);
        for (auto& r : x.row) r = -r;
        letters_.push_back(x);
    }
    for (int i = 0; i < n; ++i)
        letters_.push_back({LetterKind::XI, i, K(i, 2), std::vector<long>(m_, 0), "x" + std::to_string(i + 1)});
    if (var == Variant::HighestWeight) {
        Letter x{LetterKind::HW, -1, unit(), std::vector<long>(m_, 0), "v"};
        x.degree[n] = 1;
        for (int a = 0; a < n; ++a) x.row[a] = -vexp(weight_->pairing[a]);
        x.row[n] = -vexp(weight_->self);
        letters_.push_back(x);
    } else if (var == Variant::Invariant) {
        Letter x{LetterKind::INV, -1, unit(), std::vector<long>(m_, 0), "w"};
        x.degree[n] = 1;
        letters_.push_back(x);
    }
}

int AlgebraConfig::extra() const {
    if (variant_ == Variant::Standard) throw ConfigError("standard alphabet has no adjoined letter");
    return 3 * rank();
}

int AlgebraConfig::letter_id(const std::string& name) const {
    for (int i = 0; i < alphabet_size(); ++i)
        if (letters_[i].name == name) return i;
    throw ConfigError("unknown letter " + name);
}

Torus AlgebraConfig::K(int i, int power) const {
    Torus t(m_, 0);
    t.at(i) = power;
    return t;
}

long AlgebraConfig::chi_exp(const Torus& a, int letter) const {
    const auto& row = letters_[letter].row;
    long e = 0;
    for (int k = 0; k < m_; ++k) e += a[k] * row[k];
    return e;
}

Scalar AlgebraConfig::qi_diff(int i) const {
    long e = static_cast<long>(cd_.D[i]) * field_.root_order();
    return Scalar::vpow(e) - Scalar::vpow(-e);
}

AlgebraConfig AlgebraConfig::with_xi_degree(int power) const {
    AlgebraConfig c = *this;
    for (int i = 0; i < rank(); ++i) c.letters_[XI(i)].degree = K(i, power);
    return c;
}

Scalar bicharacter(const AlgebraConfig& cfg, const Torus& a, int letter) { return cfg.chi(a, letter); }

}  // namespace qsym
