#include "qforms/ratfunc.hpp"

#include <utility>

namespace qf {

Poly::Poly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monomial(const Int& coeff, int degree) {
    Poly p;
    if (coeff == 0) return p;
    p.coeffs_.assign(static_cast<size_t>(degree) + 1, Int(0));
    p.coeffs_[degree] = coeff;
    return p;
}

Int Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Int(0);
    return coeffs_[k];
}

const Int& Poly::leading() const {
    static const Int zero(0);
    return coeffs_.empty() ? zero : coeffs_.back();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = coeffs_[k];
    for (size_t k = 0; k < o.coeffs_.size(); ++k) r.coeffs_[k] += o.coeffs_[k];
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Poly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    r.trim();
    return r;
}

Int Poly::content() const {
    Int g(0);
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Poly Poly::primitive_part() const {
    if (is_zero()) return Poly();
    Int g = content();
    Poly r(*this);
    for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

Poly Poly::divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return Poly();
    int da = a.degree(), db = b.degree();
    if (da < db) throw StructureError("divexact: degree of divisor exceeds dividend");
    Poly rem(a);
    std::vector<Int> q(static_cast<size_t>(da - db) + 1, Int(0));
    for (int k = da - db; k >= 0; --k) {
        Int top = rem.coeff(db + k);
        if (top == 0) continue;
        Int c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), b.leading().get_mpz_t());
        q[k] = c;
        // rem -= c * z^k * b
        for (int j = 0; j <= db; ++j) {
            Int t = rem.coeff(j + k) - c * b.coeff(j);
            if (j + k >= static_cast<int>(rem.coeffs_.size()))
                rem.coeffs_.resize(j + k + 1, Int(0));
            rem.coeffs_[j + k] = t;
        }
        rem.trim();
    }
    if (!rem.is_zero()) throw StructureError("divexact: division was not exact");
    return Poly(std::move(q));
}

namespace {

// pseudo-remainder of lc(b)^(da-db+1) * a modulo b
Poly pseudo_rem(Poly a, const Poly& b) {
    int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        int k = a.degree() - db;
        Poly scaled = Poly::monomial(a.leading(), k) * b;
        a = a * Poly(b.leading()) - scaled;
    }
    return a;
}

} // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    if (a.is_zero()) return b.leading() < 0 ? -b : b;
    if (b.is_zero()) return a.leading() < 0 ? -a : a;
    Int ic;
    mpz_gcd(ic.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    // primitive PRS; contents are stripped each round to keep growth in check
    Poly u = a.primitive_part();
    Poly v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        Poly r = pseudo_rem(u, v);
        u = std::move(v);
        v = r.is_zero() ? Poly() : r.primitive_part();
    }
    if (u.leading() < 0) u = -u;
    return Poly(ic) * u;
}

Rat Poly::eval(const Rat& at) const {
    Rat acc(0);
    for (int k = degree(); k >= 0; --k) {
        acc = acc * at + Rat(coeffs_[k]);
    }
    acc.canonicalize();
    return acc;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Int c = coeff(k);
        if (c == 0) continue;
        const bool neg = c < 0;
        Int mag = neg ? Int(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (k == 0) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + "*";
            out += (k == 1) ? "z" : "z^" + std::to_string(k);
        }
    }
    return out;
}

RatFunc::RatFunc(const Rat& r)
    : num_(Poly(Int(r.get_num()))), den_(Poly(Int(r.get_den()))) {
    canonicalize();
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

void RatFunc::canonicalize() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = Poly::divexact(num_, g);
        den_ = Poly::divexact(den_, g);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RatFunc RatFunc::z_power(long e) {
    if (e >= 0) return RatFunc(Poly::monomial(1, static_cast<int>(e)), Poly(1));
    return RatFunc(Poly(1), Poly::monomial(1, static_cast<int>(-e)));
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    // cross-reduce first so the gcd after multiplication is trivial
    Poly g1 = Poly::gcd(num_, o.den_);
    Poly g2 = Poly::gcd(o.num_, den_);
    Poly n1 = g1.is_one() ? num_ : Poly::divexact(num_, g1);
    Poly d2 = g1.is_one() ? o.den_ : Poly::divexact(o.den_, g1);
    Poly n2 = g2.is_one() ? o.num_ : Poly::divexact(o.num_, g2);
    Poly d1 = g2.is_one() ? den_ : Poly::divexact(den_, g2);
    return RatFunc(n1 * n2, d1 * d2);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return *this * o.inverse();
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return RatFunc(den_, num_);
}

Rat RatFunc::eval_at(const Rat& at) const {
    Rat d = den_.eval(at);
    if (d == 0) throw PoleError(at);
    Rat r = num_.eval(at) / d;
    r.canonicalize();
    return r;
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc rf_pow(const RatFunc& base, long e) {
    if (e < 0) return rf_pow(base.inverse(), -e);
    RatFunc acc(1);
    RatFunc b = base;
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

RatFunc q_int(long n, const RatFunc& p) {
    if (p.is_zero() || p == RatFunc(1) || p == RatFunc(-1))
        throw DomainError("[n]_p undefined for p in {0, 1, -1}");
    if (n == 0) return RatFunc(0);
    RatFunc pn = rf_pow(p, n);
    return (pn - pn.inverse()) / (p - p.inverse());
}

} // namespace qf
