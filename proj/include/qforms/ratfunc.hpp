#pragma once

// Exact scalar arithmetic for everything in this project: dense polynomials
// over Z in one indeterminate z, and the field Q(z) of rational functions.
// Every matrix entry, pairing value and eigenvalue is a RatFunc. Negative
// powers of z are held as denominator factors, so Laurent expressions such as
// z - z^-1 normalize to (z^2 - 1)/(z).

#include <string>
#include <vector>

#include <gmpxx.h>

#include "qforms/error.hpp"

namespace qf {

using Int = mpz_class;
using Rat = mpq_class;

class Poly {
  public:
    Poly() = default;
    Poly(long c) { if (c != 0) coeffs_.push_back(Int(c)); }
    explicit Poly(const Int& c) { if (c != 0) coeffs_.push_back(c); }
    explicit Poly(std::vector<Int> coeffs);

    static Poly monomial(const Int& coeff, int degree);

    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    Int coeff(int k) const;
    const Int& leading() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // gcd of all coefficients, nonnegative; 0 for the zero polynomial
    Int content() const;
    Poly primitive_part() const;

    // quotient of an exact division; precondition: divisor divides *this
    static Poly divexact(const Poly& a, const Poly& b);
    // gcd in Z[z], normalized to positive leading coefficient; includes the
    // integer content gcd, so gcd(6z, 4) = 2
    static Poly gcd(const Poly& a, const Poly& b);

    Rat eval(const Rat& at) const;

    // descending powers, e.g. "2*z^3 - z + 1"; "0" for the zero polynomial
    std::string str() const;

  private:
    void trim();
    // coeffs_[k] is the coefficient of z^k; invariant: no trailing zeros
    std::vector<Int> coeffs_;
};

class RatFunc {
  public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long n) : num_(n), den_(1) {}
    explicit RatFunc(const Int& n) : num_(n), den_(1) {}
    explicit RatFunc(const Rat& r);
    RatFunc(Poly num, Poly den);  // canonicalizes; throws DivisionByZero

    // z^e for any integer e; negative exponents go to the denominator
    static RatFunc z_power(long e);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;  // throws DivisionByZero
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }

    RatFunc inverse() const;  // throws DivisionByZero on 0

    // canonical forms are unique, so equality is structural
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // exact evaluation; throws PoleError if the reduced denominator vanishes
    Rat eval_at(const Rat& at) const;

    // canonical text form "(<num>)/(<den>)"; a denominator of 1 is omitted
    // together with the parentheses
    std::string str() const;

  private:
    void canonicalize();
    Poly num_, den_;
};

RatFunc rf_pow(const RatFunc& base, long e);

// q-integer [n]_p = (p^n - p^-n)/(p - p^-1); defined for all integers n.
// Throws DomainError when p is 0, 1 or -1.
RatFunc q_int(long n, const RatFunc& p);

} // namespace qf
