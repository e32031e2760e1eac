#pragma once

// Antisymmetrizers of the braided exterior algebra. A_k is built from the
// left-factor recursion A_k = A_{k-1,1}(A_{k-1} (x) id); the partial
// operators A_{i,j} and B_{i,j} come from signed sums over (i,j)-shuffles
// and their inverses. Everything is generic over the scalar so the same
// construction runs over Q(z) and over the prime field used for seeded
// rank checks.

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "qforms/bimodule.hpp"
#include "qforms/matrix.hpp"
#include "qforms/modular.hpp"

namespace qf {

// adjacent transposition matrices sigma_{t,t+1}, t = 1..k-1, on k uniform
// slots of dimension d
template <class S>
std::vector<SMat<S>> adjacent_ops(const SMat<S>& sigma2, int k, long d) {
    std::vector<SMat<S>> out;
    for (int t = 1; t < k; ++t) out.push_back(slot_op(sigma2, k, t, d));
    return out;
}

// product adj[p_1] adj[p_2] ... adj[p_m], rightmost applied first
template <class S>
SMat<S> word_product(const std::vector<SMat<S>>& adj, const std::vector<int>& positions, long dim) {
    SMat<S> acc = SMat<S>::identity(static_cast<int>(dim));
    for (auto it = positions.rbegin(); it != positions.rend(); ++it)
        acc = adj[*it - 1] * acc;
    return acc;
}

// permutations in one-line notation (1-based destinations: p[t-1] is where
// the content of slot t ends up)
int inversions(const std::vector<int>& oneline);
std::vector<int> inverse_perm(const std::vector<int>& oneline);
// reduced word such that the operator lift is adj[w_1]...adj[w_m] with the
// rightmost factor applied first
std::vector<int> reduced_word(std::vector<int> oneline);
// all permutations of i+j letters increasing on the first i and last j slots
std::vector<std::vector<int>> shuffles(int i, int j);

enum class PartialKind { A, B };  // A_{i,j} sums shuffles, B_{i,j} their inverses

template <class S>
SMat<S> partial_antisym(const std::vector<SMat<S>>& adj, int i, int j, PartialKind kind, long dim) {
    SMat<S> acc(static_cast<int>(dim), static_cast<int>(dim));
    for (const auto& u : shuffles(i, j)) {
        std::vector<int> perm = (kind == PartialKind::A) ? u : inverse_perm(u);
        SMat<S> lift = word_product(adj, reduced_word(perm), dim);
        acc = (inversions(perm) % 2 == 0) ? acc + lift : acc - lift;
    }
    return acc;
}

// A_k from the recursion A_k = A_{k-1,1}(A_{k-1} (x) id); A_0 = A_1 = id
template <class S>
SMat<S> antisym_matrix(const SMat<S>& sigma2, int k, long d) {
    long dim = 1;
    SMat<S> acc = SMat<S>::identity(1);
    for (int m = 1; m <= k; ++m) {
        dim *= d;
        SMat<S> lifted = (m == 1) ? SMat<S>::identity(static_cast<int>(dim))
                                  : kron(acc, SMat<S>::identity(static_cast<int>(d)));
        if (m == 1) {
            acc = lifted;
            continue;
        }
        auto adj = adjacent_ops(sigma2, m, d);
        acc = partial_antisym(adj, m - 1, 1, PartialKind::A, dim) * lifted;
    }
    return acc;
}

// Memoized antisymmetrizer family for one space type and braid sign.
class ExteriorOps {
  public:
    ExteriorOps(const Calculus& calc, FormType tau, BraidSign sign)
        : calc_(&calc), tau_(tau), sign_(sign) {}

    const Calculus& calculus() const { return *calc_; }
    FormType tau() const { return tau_; }
    BraidSign sign() const { return sign_; }
    long dim(int k) const;

    const OpMatrix& antisym(int k) const;                     // A_k on (N^2)^k
    const OpMatrix& partial(PartialKind kind, int i, int j) const;  // A_{i,j} or B_{i,j}

  private:
    const OpMatrix& sigma2() const {
        return calc_->braiding(tau_, tau_, sign_);
    }
    const Calculus* calc_;
    FormType tau_;
    BraidSign sign_;
    mutable std::map<int, OpMatrix> antisym_cache_;
    mutable std::map<std::tuple<int, int, int>, OpMatrix> partial_cache_;
};

enum class RankMode { Exact, Probabilistic };

struct DimsResult {
    std::vector<int> dims;    // dims[k] = rank A_k = dim of the degree-k forms
    std::vector<bool> exact;  // whether dims[k] came from exact elimination
    bool truncated = false;   // the size cap ended the scan before max_k
};

// dims[k] for k = 0..max_k. Probabilistic mode uses exact elimination up to
// 64x64 and two seeded modular trials beyond; matrices larger than max_dim
// truncate the scan.
DimsResult lambda_dims(const Calculus& calc, FormType tau, int max_k, RankMode mode,
                       uint64_t seed, long max_dim);

// ker A^+_k = ker A^-_k, decided by ranks of the stacked matrix
bool kernel_equality_check(const Calculus& calc, int k, FormType tau);

struct TopForm {
    int n0 = 0;                // smallest degree with one-dimensional form space
    std::vector<RatFunc> vec;  // spanning vector of the image of A^+_{n0}
};

// Detects n0 by scanning ranks upward until rank A_k = 1, then confirms
// rank A_{k+1} = 0; throws StructureError if the scan contradicts the
// expected shape and ResourceLimit if the cap is hit first.
TopForm top_form(const Calculus& calc, FormType tau, uint64_t seed, long max_dim);

} // namespace qf
