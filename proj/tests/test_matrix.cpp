#include <doctest.h>

#include "qforms/matrix.hpp"
#include "qforms/modular.hpp"
#include "test_support.hpp"

using qf::OpMatrix;
using qf::RatFunc;

namespace {

OpMatrix random_matrix(qftest::Rng& rng, int rows, int cols, int fill_percent) {
    OpMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (rng.below(100) < static_cast<uint64_t>(fill_percent))
                m.set(i, j, qftest::random_ratfunc(rng, 2, 3));
    return m;
}

OpMatrix diag(std::vector<RatFunc> entries) {
    OpMatrix m(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
    for (size_t i = 0; i < entries.size(); ++i) m.set(static_cast<int>(i), static_cast<int>(i), entries[i]);
    return m;
}

} // namespace

TEST_CASE("kronecker products") {
    auto z = RatFunc::z_power(1);
    CHECK(qf::kron(OpMatrix::identity(2), OpMatrix::identity(3)) == OpMatrix::identity(6));
    CHECK(qf::kron(diag({z, RatFunc(1)}), OpMatrix::identity(2)) ==
          diag({z, z, RatFunc(1), RatFunc(1)}));

    // entrywise against the direct index formula, on random sparse inputs
    qftest::Rng rng(5);
    OpMatrix a = random_matrix(rng, 3, 4, 40);
    OpMatrix b = random_matrix(rng, 2, 5, 40);
    OpMatrix k = qf::kron(a, b);
    for (int ia = 0; ia < 3; ++ia)
        for (int ja = 0; ja < 4; ++ja)
            for (int ib = 0; ib < 2; ++ib)
                for (int jb = 0; jb < 5; ++jb)
                    CHECK(k.get(ia * 2 + ib, ja * 5 + jb) == a.get(ia, ja) * b.get(ib, jb));
}

TEST_CASE("mixed product rule (A kron B)(C kron D) = AC kron BD") {
    qftest::Rng rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        OpMatrix a = random_matrix(rng, 3, 3, 50);
        OpMatrix b = random_matrix(rng, 2, 2, 50);
        OpMatrix c = random_matrix(rng, 3, 3, 50);
        OpMatrix d = random_matrix(rng, 2, 2, 50);
        CHECK(qf::kron(a, b) * qf::kron(c, d) == qf::kron(a * c, b * d));
    }
}

TEST_CASE("kron is associative under big-endian flattening") {
    qftest::Rng rng(13);
    OpMatrix a = random_matrix(rng, 2, 3, 50);
    OpMatrix b = random_matrix(rng, 3, 2, 50);
    OpMatrix c = random_matrix(rng, 2, 2, 50);
    CHECK(qf::kron(qf::kron(a, b), c) == qf::kron(a, qf::kron(b, c)));
}

TEST_CASE("exact rank") {
    CHECK(qf::rank_exact(OpMatrix(4, 4)) == 0);
    CHECK(qf::rank_exact(OpMatrix::identity(7)) == 7);

    // rank-1 outer product with rational-function entries
    auto z = RatFunc::z_power(1);
    OpMatrix m(3, 3);
    std::vector<RatFunc> u = {z, RatFunc(1), z.inverse()};
    std::vector<RatFunc> v = {RatFunc(2), z + RatFunc(1), z};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.set(i, j, u[i] * v[j]);
    CHECK(qf::rank_exact(m) == 1);
}

TEST_CASE("probabilistic rank agrees with exact rank") {
    CHECK(qf::rank_probabilistic(OpMatrix::identity(5), 42) == 5);
    CHECK(qf::rank_probabilistic(OpMatrix(6, 6), 42) == 0);
    qftest::Rng rng(321);
    for (int trial = 0; trial < 10; ++trial) {
        OpMatrix m = random_matrix(rng, 6, 6, 35);
        int exact = qf::rank_exact(m);
        CHECK(qf::rank_probabilistic(m, 1000 + trial) == exact);
    }
}

TEST_CASE("probabilistic rank resamples on denominator zeros") {
    // 1/(z - x) has a pole wherever the trial point lands; the sampler must
    // sidestep z = 0 and small fixed poles without failing
    OpMatrix m(1, 1);
    m.set(0, 0, RatFunc::z_power(-3));
    CHECK(qf::rank_probabilistic(m, 7) == 1);
}

TEST_CASE("kernel basis") {
    CHECK(qf::kernel_basis(OpMatrix::identity(4)).empty());
    CHECK(qf::kernel_basis(OpMatrix(2, 2)).size() == 2);

    qftest::Rng rng(99);
    for (int trial = 0; trial < 8; ++trial) {
        OpMatrix m = random_matrix(rng, 4, 6, 40);
        auto basis = qf::kernel_basis(m);
        CHECK(static_cast<int>(basis.size()) == 6 - qf::rank_exact(m));
        for (const auto& v : basis) {
            auto mv = m.apply(v);
            for (const auto& x : mv) CHECK(x.is_zero());
        }
    }
}

TEST_CASE("solve and inverse") {
    qftest::Rng rng(2024);
    for (int trial = 0; trial < 6; ++trial) {
        OpMatrix m = random_matrix(rng, 4, 4, 80);
        if (qf::rank_exact(m) < 4) continue;
        OpMatrix inv = qf::inverse(m);
        CHECK(m * inv == OpMatrix::identity(4));
        std::vector<RatFunc> b;
        for (int i = 0; i < 4; ++i) b.push_back(qftest::random_ratfunc(rng, 2, 3));
        auto x = qf::solve(m, b);
        auto mx = m.apply(x);
        for (int i = 0; i < 4; ++i) CHECK(mx[i] == b[i]);
    }
}

TEST_CASE("weighted partial trace") {
    const int N = 2;
    auto q = [&](long e) { return RatFunc::z_power(N * e); };  // q = z^N

    std::vector<RatFunc> ones = {RatFunc(1), RatFunc(1)};
    CHECK(qf::weighted_partial_trace(OpMatrix::identity(N * N), ones) ==
          OpMatrix::identity(N).scaled(RatFunc(2)));

    // weights q^{2k}, k = 1..N
    std::vector<RatFunc> w = {q(2), q(4)};
    CHECK(qf::weighted_partial_trace(OpMatrix::identity(N * N), w) ==
          OpMatrix::identity(N).scaled(q(2) + q(4)));

    OpMatrix bad(3, 3);
    CHECK_THROWS_AS(qf::weighted_partial_trace(bad, w), qf::DomainError);
}
