#include "qsym/scalar.hpp"

#include <cctype>
#include <sstream>

namespace qsym {

Poly::Poly(std::vector<mpq_class> c) : c_(std::move(c)) { trim(); }

Poly Poly::constant(const mpq_class& a) { return Poly(std::vector<mpq_class>{a}); }

Poly Poly::monomial(const mpq_class& a, int k) {
    std::vector<mpq_class> c(k + 1);
    c[k] = a;
    return Poly(std::move(c));
}

void Poly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

mpq_class Poly::at(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
}

int Poly::low_order() const {
    for (size_t k = 0; k < c_.size(); ++k)
        if (sgn(c_[k]) != 0) return static_cast<int>(k);
    return 0;
}

Poly Poly::shifted_down(int k) const {
    if (k <= 0) return *this;
    return Poly(std::vector<mpq_class>(c_.begin() + k, c_.end()));
}

Poly Poly::scaled(const mpq_class& a) const {
    if (sgn(a) == 0) return Poly();
    Poly r = *this;
    for (auto& x : r.c_) x *= a;
    return r;
}

mpq_class Poly::eval(const mpq_class& x) const {
    mpq_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<mpq_class> c(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-() const { return scaled(-1); }
Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (zero() || o.zero()) return Poly();
    std::vector<mpq_class> c(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(c));
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
    if (b.zero()) throw ScalarError("polynomial division by zero");
    std::vector<mpq_class> r = a.c_;
    int db = b.degree();
    int da = a.degree();
    std::vector<mpq_class> q(da >= db ? da - db + 1 : 0);
    for (int k = da; k >= db; --k) {
        if (sgn(r[k]) == 0) continue;
        mpq_class f = r[k] / b.lead();
        q[k - db] = f;
        for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.c_[j];
    }
    quo = Poly(std::move(q));
    rem = Poly(std::move(r));
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.zero()) {
        Poly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.zero()) return a;
    return a.scaled(1 / mpq_class(a.lead()));
}

Scalar::Scalar(long n) : num_(Poly::constant(n)) {}
Scalar::Scalar(const mpq_class& a) : num_(Poly::constant(a)) {}

Scalar Scalar::vpow(long k) {
    Scalar s(1);
    s.shift_ = static_cast<int>(k);
    return s;
}

Scalar Scalar::from_parts(int shift, Poly num, Poly den) {
    if (den.zero()) throw ScalarError("zero denominator");
    Scalar s;
    s.shift_ = shift;
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.normalize();
    return s;
}

void Scalar::normalize() {
    if (num_.zero()) {
        shift_ = 0;
        den_ = Poly::constant(1);
        return;
    }
    int a = num_.low_order(), b = den_.low_order();
    num_ = num_.shifted_down(a);
    den_ = den_.shifted_down(b);
    shift_ += a - b;
    if (den_.degree() > 0 && num_.degree() > 0) {
        Poly g = Poly::gcd(num_, den_);
        if (g.degree() > 0) {
            Poly q, r;
            Poly::divmod(num_, g, q, r);
            num_ = q;
            Poly::divmod(den_, g, q, r);
            den_ = q;
        }
    }
    if (den_.lead() != 1) {
        mpq_class l = den_.lead();
        num_ = num_.scaled(1 / l);
        den_ = den_.scaled(1 / l);
    }
}

bool Scalar::is_one() const {
    return shift_ == 0 && den_.degree() == 0 && num_.degree() == 0 && num_.lead() == 1;
}

namespace {
// a*v^sa + b*v^sb as a polynomial times v^min
void align(const Poly& a, int sa, const Poly& b, int sb, Poly& pa, Poly& pb, int& s) {
    s = std::min(sa, sb);
    pa = sa > s ? a * Poly::monomial(1, sa - s) : a;
    pb = sb > s ? b * Poly::monomial(1, sb - s) : b;
}
}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    Poly pa, pb;
    int s;
    if (den_ == o.den_) {
        align(num_, shift_, o.num_, o.shift_, pa, pb, s);
        return from_parts(s, pa + pb, den_);
    }
    align(num_ * o.den_, shift_, o.num_ * den_, o.shift_, pa, pb, s);
    return from_parts(s, pa + pb, den_ * o.den_);
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return Scalar();
    if (is_laurent() && o.is_laurent()) {
        Scalar r;
        r.shift_ = shift_ + o.shift_;
        r.num_ = num_ * o.num_;
        return r;
    }
    return from_parts(shift_ + o.shift_, num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ScalarError("division by zero");
    return from_parts(-shift_, den_, num_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
    return shift_ == o.shift_ && num_ == o.num_ && den_ == o.den_;
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r(1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

mpq_class Scalar::eval(const mpq_class& x) const {
    mpq_class d = den_.eval(x);
    if (sgn(d) == 0) throw ScalarError("pole at evaluation point");
    mpq_class r = num_.eval(x) / d;
    if (shift_ != 0) {
        if (sgn(x) == 0) throw ScalarError("pole at evaluation point");
        mpq_class p = 1;
        for (int i = 0; i < std::abs(shift_); ++i) p *= x;
        if (shift_ > 0) r *= p;
        else r /= p;
    }
    return r;
}

namespace {
std::string laurent_str(const Poly& p, int shift) {
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        mpq_class c = p.at(k);
        if (sgn(c) == 0) continue;
        int e = k + shift;
        if (!first) os << (sgn(c) < 0 ? "-" : "+");
        else if (sgn(c) < 0) os << "-";
        mpq_class a = abs(c);
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "v";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return first ? "0" : os.str();
}
}  // namespace

std::string Scalar::str() const {
    if (is_laurent()) return laurent_str(num_.scaled(1 / mpq_class(den_.lead())), shift_);
    return "(" + laurent_str(num_, shift_) + ")/(" + laurent_str(den_, 0) + ")";
}

namespace {
struct Parser {
    const std::string& s;
    size_t i = 0;
    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail() { throw ScalarError("cannot parse scalar: " + s); }
    long integer() {
        ws();
        bool neg = eat('-');
        ws();
        size_t st = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (st == i) fail();
        long v = std::stol(s.substr(st, i - st));
        return neg ? -v : v;
    }
    Scalar expr() {
        Scalar r;
        bool neg = eat('-');
        r = term();
        if (neg) r = -r;
        for (;;) {
            if (eat('+')) r += term();
            else if (eat('-')) r -= term();
            else return r;
        }
    }
    Scalar term() {
        Scalar r = factor();
        for (;;) {
            if (eat('*')) r *= factor();
            else if (eat('/')) r /= factor();
            else return r;
        }
    }
    Scalar factor() {
        Scalar b = atom();
        if (eat('^')) b = b.pow(integer());
        return b;
    }
    Scalar atom() {
        ws();
        if (eat('(')) {
            Scalar r = expr();
            if (!eat(')')) fail();
            return r;
        }
        if (eat('v')) return Scalar::vpow(1);
        size_t st = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (st == i) fail();
        return Scalar(mpq_class(s.substr(st, i - st)));
    }
};
}  // namespace

Scalar parse_scalar(const std::string& s) {
    Parser p{s};
    Scalar r = p.expr();
    p.ws();
    if (p.i != s.size()) p.fail();
    return r;
}

QField::QField(int L) : L_(L) {
    if (L < 1) throw ScalarError("root order must be positive");
}

long QField::v_exponent(const mpq_class& e) const {
    mpq_class x = e * L_;
    if (x.get_den() != 1)
        throw ScalarError("exponent " + e.get_str() + " not representable with root order " +
                          std::to_string(L_));
    return x.get_num().get_si();
}

Scalar QField::q_power(const mpq_class& e) const { return Scalar::vpow(v_exponent(e)); }

Scalar QField::q_int(long n, int d) const {
    // [n]_{q^d} = sum_{k=0}^{|n|-1} q^{d(|n|-1-2k)}, sign of n
    long a = std::abs(n);
    if (a == 0) return Scalar();
    long step = static_cast<long>(d) * L_;
    std::vector<mpq_class> c(step * 2 * (a - 1) + 1);
    for (long k = 0; k < a; ++k) c[step * 2 * k] = 1;
    Poly stretched(std::move(c));
    Scalar r = Scalar::from_parts(static_cast<int>(-step * (a - 1)), stretched, Poly::constant(1));
    return n < 0 ? -r : r;
}

Scalar QField::q_factorial(long n, int d) const {
    Scalar r(1);
    for (long k = 2; k <= n; ++k) r *= q_int(k, d);
    return r;
}

Scalar QField::q_binomial(long n, long k, int d) const {
    if (k < 0 || k > n) throw ScalarError("q-binomial out of range");
    return q_factorial(n, d) / (q_factorial(k, d) * q_factorial(n - k, d));
}

}  // namespace qsym
