#pragma once
#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace qsym {

// dense polynomial in v, c[k] is the coefficient of v^k, no trailing zeros
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<mpq_class> c);
    static Poly constant(const mpq_class& a);
    static Poly monomial(const mpq_class& a, int k);

    bool zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    const mpq_class& lead() const { return c_.back(); }
    mpq_class at(int k) const;
    int low_order() const;  // smallest k with c[k] != 0
    Poly shifted_down(int k) const;
    Poly scaled(const mpq_class& a) const;
    mpq_class eval(const mpq_class& x) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    static void divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem);
    static Poly gcd(Poly a, Poly b);  // monic

private:
    void trim();
    std::vector<mpq_class> c_;
};

struct ScalarError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// v^shift * num / den, den monic, v divides neither, gcd(num, den) = 1
class Scalar {
public:
    Scalar() = default;
    Scalar(long n);
    Scalar(const mpq_class& a);
    static Scalar vpow(long k);
    static Scalar from_parts(int shift, Poly num, Poly den);

    bool is_zero() const { return num_.zero(); }
    bool is_one() const;
    bool is_laurent() const { return den_.degree() == 0; }
    int shift() const { return shift_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    Scalar inverse() const;
    Scalar pow(long e) const;

    // value at v = x; throws if the denominator vanishes there
    mpq_class eval(const mpq_class& x) const;
    std::string str() const;

private:
    void normalize();
    int shift_ = 0;
    Poly num_;
    Poly den_ = Poly::constant(1);
};

Scalar parse_scalar(const std::string& s);

// q = v^L
class QField {
public:
    explicit QField(int L = 1);
    int root_order() const { return L_; }
    Scalar q() const { return Scalar::vpow(L_); }
    Scalar q_power(const mpq_class& e) const;
    long v_exponent(const mpq_class& e) const;  // e*L, must be an integer
    Scalar q_int(long n, int d = 1) const;       // balanced [n]_{q^d}
    Scalar q_factorial(long n, int d = 1) const;
    Scalar q_binomial(long n, long k, int d = 1) const;

private:
    int L_;
};

}  // namespace qsym
