#pragma once

// The braid-form R-matrix of the A-series quantum group in dimension N, its
// exact inverse, and the universal r-form evaluated on generators, their
// antipodes and double antipodes. q is always the derived power z^N of the
// primitive scalar z, never an independent symbol.

#include <vector>

#include "qforms/matrix.hpp"

namespace qf {

// q^e = z^{N e}
inline RatFunc q_power(int N, long e) { return RatFunc::z_power(static_cast<long>(N) * e); }

// 1-based pair (i,j) -> flat index
inline int pair_index(int N, int i, int j) { return (i - 1) * N + (j - 1); }

// Rhat^{ij}_{kl} = q^{delta^i_j} delta^i_l delta^j_k + (i<j)(q - q^-1) delta^i_k delta^j_l,
// rows (i,j), columns (k,l). sign Minus returns the exact inverse
// Rhat - (q - q^-1) id, which the Hecke relation provides.
OpMatrix rhat(int N, BraidSign sign);

// Which Hopf-algebra element each argument of the r-form is.
enum class Arg : uint8_t { U, SU, SSU };  // u^i_j, S(u^i_j), S^2(u^i_j)

class RFormTable {
  public:
    explicit RFormTable(int N);

    int N() const { return n_; }

    // r(u^i_j, u^k_l) = z^-1 Rhat^{ki}_{jl}
    const RatFunc& r_uu(int i, int j, int k, int l) const { return uu_[idx(i, j, k, l)]; }
    // r(u^i_j, S(u^k_l)) = z q^{2k-2l} RhatInv^{ik}_{lj}
    const RatFunc& r_u_Su(int i, int j, int k, int l) const { return u_su_[idx(i, j, k, l)]; }
    // r(S(u^i_j), u^k_l) = z RhatInv^{ik}_{lj}
    const RatFunc& r_Su_u(int i, int j, int k, int l) const { return su_u_[idx(i, j, k, l)]; }

    // general evaluation; S^2 arguments reduce through S^2(u^i_j) = q^{2i-2j} u^i_j
    // and r(S(a), S(b)) = r(a, b)
    RatFunc eval(Arg first, int i, int j, Arg second, int k, int l) const;

  private:
    int idx(int i, int j, int k, int l) const {
        return pair_index(n_, i, j) * n_ * n_ + pair_index(n_, k, l);
    }
    int n_;
    std::vector<RatFunc> uu_, u_su_, su_u_;
};

struct FFunctionals {
    // all three are N x N matrices indexed by the generator (i,j)
    OpMatrix f;      // f(u^i_j) = r(u^i_j_(1), S(u^i_j_(2)))
    OpMatrix f_bar;  // convolution inverse, f_bar(u^i_j) = r(S^2(u^i_j_(1)), u^i_j_(2))
    OpMatrix f_S;    // f(S(u^i_j)); the coefficients of the biinvariant theta form
};

FFunctionals f_functionals(const RFormTable& table);

} // namespace qf
