#include "qforms/rmatrix.hpp"

namespace qf {

OpMatrix rhat(int N, BraidSign sign) {
    if (N < 1) throw DomainError("rhat: N must be positive");
    const RatFunc q = q_power(N, 1);
    const RatFunc qdiff = q - q.inverse();
    OpMatrix m(N * N, N * N);
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            m.set(pair_index(N, i, j), pair_index(N, j, i), i == j ? q : RatFunc(1));
            if (i < j) m.add_to(pair_index(N, i, j), pair_index(N, i, j), qdiff);
        }
    }
    if (sign == BraidSign::Minus) {
        // Hecke relation (Rhat - q)(Rhat + q^-1) = 0 gives the inverse in closed form
        m = m - OpMatrix::identity(N * N).scaled(qdiff);
    }
    return m;
}

RFormTable::RFormTable(int N) : n_(N) {
    const OpMatrix r = rhat(N, BraidSign::Plus);
    const OpMatrix rinv = rhat(N, BraidSign::Minus);
    const RatFunc z = RatFunc::z_power(1);
    const RatFunc zinv = RatFunc::z_power(-1);
    const size_t total = static_cast<size_t>(N) * N * N * N;
    uu_.assign(total, RatFunc(0));
    u_su_.assign(total, RatFunc(0));
    su_u_.assign(total, RatFunc(0));
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            for (int k = 1; k <= N; ++k)
                for (int l = 1; l <= N; ++l) {
                    RatFunc fwd = r.get(pair_index(N, k, i), pair_index(N, j, l));
                    if (!fwd.is_zero()) uu_[idx(i, j, k, l)] = zinv * fwd;
                    RatFunc bwd = rinv.get(pair_index(N, i, k), pair_index(N, l, j));
                    if (!bwd.is_zero()) {
                        su_u_[idx(i, j, k, l)] = z * bwd;
                        u_su_[idx(i, j, k, l)] = z * q_power(N, 2 * (k - l)) * bwd;
                    }
                }
}

RatFunc RFormTable::eval(Arg first, int i, int j, Arg second, int k, int l) const {
    // peel S^2 factors off both sides, then cancel a common antipode
    RatFunc weight(1);
    if (first == Arg::SSU) {
        weight *= q_power(n_, 2 * (i - j));
        first = Arg::U;
    }
    if (second == Arg::SSU) {
        weight *= q_power(n_, 2 * (k - l));
        second = Arg::U;
    }
    if (first == Arg::SU && second == Arg::SU) {
        first = Arg::U;
        second = Arg::U;
    }
    if (first == Arg::U && second == Arg::U) return weight * r_uu(i, j, k, l);
    if (first == Arg::U) return weight * r_u_Su(i, j, k, l);
    return weight * r_Su_u(i, j, k, l);
}

FFunctionals f_functionals(const RFormTable& table) {
    const int N = table.N();
    FFunctionals out{OpMatrix(N, N), OpMatrix(N, N), OpMatrix(N, N)};
    for (int i = 1; i <= N; ++i) {
        for (int j = 1; j <= N; ++j) {
            RatFunc f(0), fbar(0), fs(0);
            for (int k = 1; k <= N; ++k) {
                f += table.r_u_Su(i, k, k, j);
                fbar += table.eval(Arg::SSU, i, k, Arg::U, k, j);
                // f(S(u^i_j)) = sum_k r(S(u^k_j), S^2(u^i_k)) = sum_k r(u^k_j, S(u^i_k))
                fs += table.r_u_Su(k, j, i, k);
            }
            out.f.set(i - 1, j - 1, f);
            out.f_bar.set(i - 1, j - 1, fbar);
            out.f_S.set(i - 1, j - 1, fs);
        }
    }
    return out;
}

} // namespace qf
