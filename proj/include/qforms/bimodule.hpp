#pragma once

// The two N^2-dimensional bicovariant bimodules of the calculus and their
// braidings. Everything is materialized on left-invariant bases: basis slot
// (i,j) of the Plus space is omega_ij, of the Minus space theta_ij, with
// 1 <= i,j <= N and (i,j) flattened to (i-1)N + (j-1).

#include <vector>

#include "qforms/matrix.hpp"
#include "qforms/rmatrix.hpp"

namespace qf {

// Immutable per-N context: the r-form tables, all eight braiding matrices and
// the biinvariant 1-forms, built once and shared by the higher layers.
class Calculus {
  public:
    explicit Calculus(int N);

    int N() const { return n_; }
    long form_dim() const { return static_cast<long>(n_) * n_; }
    const RFormTable& rform() const { return rform_; }
    const FFunctionals& functionals() const { return functs_; }

    // sigma^sign : Gamma_left (x) Gamma_right -> Gamma_right (x) Gamma_left,
    // an N^4 x N^4 matrix between the flattened pair bases
    const OpMatrix& braiding(FormType left, FormType right, BraidSign sign) const {
        return braidings_[idx(left)][idx(right)][idx(sign)];
    }

    // coefficient vector of the biinvariant 1-form: omega = sum_i omega_ii on
    // the Plus side, theta = sum_ij f(S(u^i_j)) theta_ij on the Minus side
    const std::vector<RatFunc>& biinvariant_form(FormType tau) const {
        return tau == FormType::Plus ? omega_ : theta_;
    }

    // matrix of the right action (.) <| u^a_b on the left-invariant basis of
    // Gamma_tau (a, b are 1-based generator indices); degree-one words arise
    // by pairing these with the coproduct leg u^a_c externally
    OpMatrix right_action(FormType tau, int a, int b) const;

  private:
    static int idx(FormType t) { return t == FormType::Plus ? 0 : 1; }
    static int idx(BraidSign s) { return s == BraidSign::Plus ? 0 : 1; }
    OpMatrix build_braiding(FormType left, FormType right, BraidSign sign) const;

    int n_;
    RFormTable rform_;
    FFunctionals functs_;
    OpMatrix braidings_[2][2][2];
    std::vector<RatFunc> omega_, theta_;
};

// An operator together with its domain and codomain signatures; braid words
// permute slot types, so the codomain signature differs from the domain one.
struct SigOp {
    OpMatrix matrix;
    SpaceSignature domain;
    SpaceSignature codomain;
};

// sigma^sign on slots (pos, pos+1) of the given signature, identity elsewhere
SigOp sigma_adjacent(const Calculus& calc, const SpaceSignature& sig, int pos, BraidSign sign);

// product sigma_{p_1} sigma_{p_2} ... sigma_{p_m} (rightmost factor applied
// first), with the pairing at each step read off the evolving signature
SigOp compose_adjacent(const Calculus& calc, const SpaceSignature& sig,
                       const std::vector<int>& positions, BraidSign sign);

enum class WordKind {
    Rto,       // sigma_{j,j+1} sigma_{j+1,j+2} ... sigma_{k-1,k}
    Lto,       // sigma_{k-1,k} sigma_{k-2,k-1} ... sigma_{j,j+1}
    HalfTwist, // Lto(1,1) Lto(1,2) ... Lto(1,m), the half twist on m slots; pass m as j
    Block      // Rto(k,j+k) Rto(k-1,j+k-1) ... Rto(1,j+1), crossing a j-block past a k-block
};

std::vector<int> word_positions(WordKind kind, int j, int k);

SigOp sigma_word(const Calculus& calc, WordKind kind, int j, int k,
                 const SpaceSignature& sig, BraidSign sign);

} // namespace qf
