#include <doctest.h>

#include "qforms/rmatrix.hpp"

using qf::Arg;
using qf::BraidSign;
using qf::OpMatrix;
using qf::pair_index;
using qf::RatFunc;
using qf::RFormTable;

namespace {

RatFunc q(int N, long e = 1) { return qf::q_power(N, e); }

} // namespace

TEST_CASE("rhat entries for N = 2") {
    const int N = 2;
    OpMatrix r = qf::rhat(N, BraidSign::Plus);
    auto e = [&](int i, int j, int k, int l) { return r.get(pair_index(N, i, j), pair_index(N, k, l)); };
    CHECK(e(1, 1, 1, 1) == q(N));
    CHECK(e(2, 2, 2, 2) == q(N));
    CHECK(e(1, 2, 2, 1) == RatFunc(1));
    CHECK(e(2, 1, 1, 2) == RatFunc(1));
    CHECK(e(1, 2, 1, 2) == q(N) - q(N, -1));
    CHECK(r.nonzeros() == 5);
}

TEST_CASE("rhat at N = 1 is the 1x1 matrix [q]") {
    OpMatrix r = qf::rhat(1, BraidSign::Plus);
    CHECK(r.rows() == 1);
    CHECK(r.get(0, 0) == RatFunc::z_power(1));
}

TEST_CASE("rhat inverse and Hecke relation") {
    for (int N : {2, 3}) {
        OpMatrix r = qf::rhat(N, BraidSign::Plus);
        OpMatrix rinv = qf::rhat(N, BraidSign::Minus);
        CHECK(r * rinv == OpMatrix::identity(N * N));
        CHECK(rinv * r == OpMatrix::identity(N * N));

        OpMatrix id = OpMatrix::identity(N * N);
        OpMatrix hecke = (r - id.scaled(q(N))) * (r + id.scaled(q(N, -1)));
        CHECK(hecke.is_zero());
    }
}

TEST_CASE("rhat braid relation on three slots") {
    for (int N : {2, 3}) {
        OpMatrix r = qf::rhat(N, BraidSign::Plus);
        OpMatrix r12 = qf::slot_op(r, 3, 1, N);
        OpMatrix r23 = qf::slot_op(r, 3, 2, N);
        CHECK(r12 * r23 * r12 == r23 * r12 * r23);
    }
}

TEST_CASE("r-form table values") {
    RFormTable t2(2);
    // q = z^2, so r(u^1_1, u^1_1) = z^-1 q = z
    CHECK(t2.r_uu(1, 1, 1, 1) == RatFunc::z_power(1));

    RFormTable t1(1);
    // at N = 1 the inverse matrix is the single entry q^-1
    CHECK(t1.r_Su_u(1, 1, 1, 1) == RatFunc::z_power(1) * q(1, -1));
}

TEST_CASE("antipode duality as identity patterns") {
    for (int N : {2, 3}) {
        RFormTable t(N);
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j)
                for (int m = 1; m <= N; ++m)
                    for (int l = 1; l <= N; ++l) {
                        RatFunc lhs(0), rhs(0);
                        for (int k = 1; k <= N; ++k)
                            for (int c = 1; c <= N; ++c) {
                                lhs += t.r_uu(i, k, m, c) * t.r_Su_u(k, j, c, l);
                                rhs += t.r_Su_u(i, k, m, c) * t.r_uu(k, j, c, l);
                            }
                        RatFunc expect((i == j && m == l) ? 1 : 0);
                        CHECK(lhs == expect);
                        CHECK(rhs == expect);
                    }
    }
}

TEST_CASE("f functionals are diagonal with the expected monomials") {
    const int N = 2;
    auto ff = qf::f_functionals(RFormTable(N));
    const RatFunc z = RatFunc::z_power(1);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            if (i == j) continue;
            CHECK(ff.f.get(i - 1, j - 1).is_zero());
            CHECK(ff.f_bar.get(i - 1, j - 1).is_zero());
            CHECK(ff.f_S.get(i - 1, j - 1).is_zero());
        }
    // hand-computed diagonal values for N = 2
    CHECK(ff.f.get(0, 0) == z * q(N, -1));
    CHECK(ff.f.get(1, 1) == z * q(N, -3));
    CHECK(ff.f_bar.get(0, 0) == z.inverse() * q(N, 1));
    CHECK(ff.f_bar.get(1, 1) == z.inverse() * q(N, 3));
    CHECK(ff.f_S.get(0, 0) == z * q(N, -3));
    CHECK(ff.f_S.get(1, 1) == z * q(N, -1));
}

TEST_CASE("f_bar is the convolution inverse of f") {
    for (int N : {1, 2, 3}) {
        auto ff = qf::f_functionals(RFormTable(N));
        CHECK(ff.f * ff.f_bar == OpMatrix::identity(N));
        CHECK(ff.f_bar * ff.f == OpMatrix::identity(N));
    }
}

TEST_CASE("S^2 reduction in the general evaluator is consistent") {
    RFormTable t(2);
    // r(S^2 u, S^2 u) must agree with r(u, u) entrywise
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                for (int l = 1; l <= 2; ++l)
                    CHECK(t.eval(Arg::SSU, i, j, Arg::SSU, k, l) == t.r_uu(i, j, k, l));
}
