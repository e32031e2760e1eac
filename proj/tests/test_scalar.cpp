#include <doctest.h>

#include "qforms/ratfunc.hpp"
#include "test_support.hpp"

using qf::Poly;
using qf::Rat;
using qf::RatFunc;

namespace {

RatFunc z() { return RatFunc::z_power(1); }
RatFunc zinv() { return RatFunc::z_power(-1); }

// independent oracle: [n]_p as the geometric sum p^{n-1} + p^{n-3} + ... + p^{1-n}
RatFunc q_int_by_sum(long n, const RatFunc& p) {
    if (n < 0) return -q_int_by_sum(-n, p);
    RatFunc acc(0);
    for (long t = 0; t < n; ++t) acc += qf::rf_pow(p, n - 1 - 2 * t);
    return acc;
}

} // namespace

TEST_CASE("ratfunc arithmetic on the worked examples") {
    CHECK(z() * z() == RatFunc::z_power(2));

    RatFunc a = z() - zinv();
    RatFunc b = z() + zinv();
    CHECK(a * b == RatFunc::z_power(2) - RatFunc::z_power(-2));

    RatFunc c = (RatFunc::z_power(2) - RatFunc(1)) * zinv();
    CHECK(c / c == RatFunc(1));

    CHECK_THROWS_AS(RatFunc(1) / RatFunc(0), qf::DivisionByZero);
    CHECK_THROWS_AS(RatFunc(0).inverse(), qf::DivisionByZero);
}

TEST_CASE("canonical form") {
    // (6z^2 - 6)/(4z - 4) reduces to (3z + 3)/(2)
    Poly num({qf::Int(-6), qf::Int(0), qf::Int(6)});
    Poly den({qf::Int(-4), qf::Int(4)});
    RatFunc r(num, den);
    CHECK(r.num() == Poly({qf::Int(3), qf::Int(3)}));
    CHECK(r.den() == Poly(2));

    // denominator sign is normalized to a positive leading coefficient
    RatFunc s(Poly(1), Poly(-2));
    CHECK(s.den().leading() > 0);
    CHECK(s == RatFunc(Poly(-1), Poly(2)));

    CHECK(RatFunc(Poly(0), Poly(7)).den().is_one());
    CHECK_THROWS_AS(RatFunc(Poly(1), Poly(0)), qf::DivisionByZero);
}

TEST_CASE("canonicalization is idempotent on random inputs") {
    qftest::Rng rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        RatFunc r = qftest::random_ratfunc(rng);
        // rebuilding from the stored canonical pair must not change anything
        RatFunc again(r.num(), r.den());
        CHECK(again == r);
        // and multiplying num and den by a common junk factor reduces back
        qf::Poly junk;
        do { junk = qftest::random_poly(rng, 3, 4); } while (junk.is_zero());
        RatFunc blown(r.num() * junk, r.den() * junk);
        CHECK(blown == r);
    }
}

TEST_CASE("field laws on random triples") {
    qftest::Rng rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        RatFunc a = qftest::random_ratfunc(rng, 3, 4);
        RatFunc b = qftest::random_ratfunc(rng, 3, 4);
        RatFunc c = qftest::random_ratfunc(rng, 3, 4);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == RatFunc(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == RatFunc(1));
    }
}

TEST_CASE("q-integers") {
    CHECK(qf::q_int(0, z()) == RatFunc(0));
    CHECK(qf::q_int(1, z()) == RatFunc(1));
    CHECK(qf::q_int(2, z()) == z() + zinv());
    CHECK(qf::q_int(3, z()) == RatFunc::z_power(2) + RatFunc(1) + RatFunc::z_power(-2));
    CHECK_THROWS_AS(qf::q_int(2, RatFunc(1)), qf::DomainError);
    CHECK_THROWS_AS(qf::q_int(2, RatFunc(-1)), qf::DomainError);
    CHECK_THROWS_AS(qf::q_int(2, RatFunc(0)), qf::DomainError);

    // symmetry properties and agreement with the geometric-sum oracle
    RatFunc q2 = RatFunc::z_power(2);
    for (long n = -6; n <= 6; ++n) {
        for (const RatFunc& p : {z(), q2}) {
            RatFunc v = qf::q_int(n, p);
            CHECK(v == q_int_by_sum(n, p));
            CHECK(v == qf::q_int(n, p.inverse()));
            CHECK(qf::q_int(-n, p) == -v);
        }
    }
}

TEST_CASE("exact evaluation") {
    RatFunc two = qf::q_int(2, z());
    CHECK(two.eval_at(Rat(2)) == Rat(5, 2));

    RatFunc pole = RatFunc(Poly(1), Poly({qf::Int(-1), qf::Int(1)}));  // 1/(z-1)
    CHECK_THROWS_AS(pole.eval_at(Rat(1)), qf::PoleError);
    try {
        pole.eval_at(Rat(1));
    } catch (const qf::PoleError& e) {
        CHECK(e.at == Rat(1));
    }

    // [3]_z / (z + z^-1)^2 at z = 1 is 3/4; the square cancels the Laurent
    // denominators so the reduced function has no pole at 1
    RatFunc f = qf::q_int(3, z()) / ((z() + zinv()) * (z() + zinv()));
    CHECK(f.eval_at(Rat(1)) == Rat(3, 4));
}

TEST_CASE("canonical text form") {
    CHECK(RatFunc(0).str() == "0");
    CHECK(RatFunc(5).str() == "5");
    CHECK(z().str() == "z");
    CHECK(RatFunc::z_power(-2).str() == "(1)/(z^2)");
    RatFunc r = (RatFunc::z_power(4) - RatFunc(1)) / RatFunc::z_power(2);
    CHECK(r.str() == "(z^4 - 1)/(z^2)");
    CHECK((z() - zinv()).str() == "(z^2 - 1)/(z)");
    CHECK((RatFunc(2) * RatFunc::z_power(3) - z()).str() == "2*z^3 - z");
}
