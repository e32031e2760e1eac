#include "qforms/bimodule.hpp"

namespace qf {

namespace {

struct Nonzero {
    int a1, a2, b1, b2;  // entry X^{a1 a2}_{b1 b2}
    RatFunc val;
};

std::vector<Nonzero> nonzero_list(const OpMatrix& x, int N) {
    std::vector<Nonzero> out;
    for (int r = 0; r < x.rows(); ++r) {
        for (const auto& [c, v] : x.row(r)) {
            out.push_back({r / N + 1, r % N + 1, c / N + 1, c % N + 1, v});
        }
    }
    return out;
}

// per-factor q-weight attached to an r-form argument carrying S^2
enum class Weight { None, Yn, Mx, Ti, Xk };

struct Factor {
    bool inverse;
    Weight weight;
};

struct BraidRecipe {
    Factor a, b, c, d;
};

// Each braiding is a sum over four r-form factors with the index patterns
//   A^{ry}_{nt}  B^{mt}_{ix}  C^{lz}_{sy}  D^{jx}_{kz}
// joined on t, y, x, z; the recipe records which of Rhat / RhatInv each
// factor uses and which S^2 weight it carries.
BraidRecipe recipe_for(FormType left, FormType right, BraidSign sign) {
    const bool l = left == FormType::Plus;
    const bool r = right == FormType::Plus;
    if (sign == BraidSign::Plus) {
        if (l && r) return {{true, Weight::Yn}, {false, Weight::None}, {true, Weight::None}, {false, Weight::None}};
        if (l && !r) return {{true, Weight::Yn}, {false, Weight::Mx}, {true, Weight::None}, {false, Weight::Xk}};
        if (!l && r) return {{false, Weight::None}, {true, Weight::Ti}, {false, Weight::None}, {true, Weight::None}};
        return {{false, Weight::None}, {true, Weight::None}, {false, Weight::None}, {true, Weight::Xk}};
    }
    if (l && r) return {{true, Weight::Yn}, {true, Weight::None}, {false, Weight::None}, {false, Weight::None}};
    if (l && !r) return {{false, Weight::Yn}, {false, Weight::Mx}, {true, Weight::None}, {true, Weight::Xk}};
    if (!l && r) return {{true, Weight::None}, {true, Weight::Ti}, {false, Weight::None}, {false, Weight::None}};
    return {{false, Weight::None}, {false, Weight::None}, {true, Weight::None}, {true, Weight::Xk}};
}

} // namespace

Calculus::Calculus(int N) : n_(N), rform_(N), functs_(f_functionals(rform_)) {
    for (FormType left : {FormType::Plus, FormType::Minus})
        for (FormType right : {FormType::Plus, FormType::Minus})
            for (BraidSign sign : {BraidSign::Plus, BraidSign::Minus})
                braidings_[idx(left)][idx(right)][idx(sign)] = build_braiding(left, right, sign);
    omega_.assign(form_dim(), RatFunc(0));
    theta_.assign(form_dim(), RatFunc(0));
    for (int i = 1; i <= N; ++i) {
        omega_[pair_index(N, i, i)] = RatFunc(1);
        for (int j = 1; j <= N; ++j)
            theta_[pair_index(N, i, j)] = functs_.f_S.get(i - 1, j - 1);
    }
}

OpMatrix Calculus::build_braiding(FormType left, FormType right, BraidSign sign) const {
    const int N = n_;
    const OpMatrix rf = rhat(N, BraidSign::Plus);
    const OpMatrix ri = rhat(N, BraidSign::Minus);
    const auto fwd = nonzero_list(rf, N);
    const auto inv = nonzero_list(ri, N);
    const BraidRecipe rec = recipe_for(left, right, sign);
    const auto& la = rec.a.inverse ? inv : fwd;
    const auto& lb = rec.b.inverse ? inv : fwd;
    const auto& lc = rec.c.inverse ? inv : fwd;
    const auto& ld = rec.d.inverse ? inv : fwd;

    auto weight_of = [&](Weight w, const Nonzero& nz) -> RatFunc {
        switch (w) {
            case Weight::Yn: return q_power(N, 2 * (nz.a2 - nz.b1));  // q^{2y-2n}
            case Weight::Mx: return q_power(N, 2 * (nz.a1 - nz.b2));  // q^{2m-2x}
            case Weight::Ti: return q_power(N, 2 * (nz.a2 - nz.b1));  // q^{2t-2i}
            case Weight::Xk: return q_power(N, 2 * (nz.a2 - nz.b1));  // q^{2x-2k}
            default: return RatFunc(1);
        }
    };

    const int d2 = N * N;
    OpMatrix out(d2 * d2, d2 * d2);
    for (const auto& A : la) {
        // A^{ry}_{nt}: r = a1, y = a2, n = b1, t = b2
        const RatFunc va = A.val * weight_of(rec.a.weight, A);
        for (const auto& B : lb) {
            // B^{mt}_{ix}: m = a1, t = a2, i = b1, x = b2
            if (B.a2 != A.b2) continue;
            const RatFunc vab = va * (B.val * weight_of(rec.b.weight, B));
            for (const auto& C : lc) {
                // C^{lz}_{sy}: l = a1, z = a2, s = b1, y = b2
                if (C.b2 != A.a2) continue;
                const RatFunc vabc = vab * C.val;
                for (const auto& D : ld) {
                    // D^{jx}_{kz}: j = a1, x = a2, k = b1, z = b2
                    if (D.a2 != B.b2 || D.b2 != C.a2) continue;
                    const RatFunc v = vabc * (D.val * weight_of(rec.d.weight, D));
                    const int row = pair_index(N, B.a1, A.b1) * d2 + pair_index(N, A.a1, C.b1);
                    const int col = pair_index(N, B.b1, D.a1) * d2 + pair_index(N, D.b1, C.a1);
                    out.add_to(row, col, v);
                }
            }
        }
    }
    return out;
}

OpMatrix Calculus::right_action(FormType tau, int a, int b) const {
    const int N = n_;
    if (a < 1 || a > N || b < 1 || b > N)
        throw DomainError("right_action: generator indices out of range");
    OpMatrix m(N * N, N * N);
    if (tau == FormType::Plus) {
        // omega_ij <| u^a_b = r(u^k_i, u^a_d) r(u^d_b, u^j_l) omega_kl
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j)
                for (int k = 1; k <= N; ++k)
                    for (int l = 1; l <= N; ++l) {
                        RatFunc acc(0);
                        for (int d = 1; d <= N; ++d)
                            acc += rform_.r_uu(k, i, a, d) * rform_.r_uu(d, b, j, l);
                        m.set(pair_index(N, k, l), pair_index(N, i, j), acc);
                    }
    } else {
        // theta_ij <| u^a_b = r(u^a_d, S(u^k_i)) r(S(u^j_l), u^d_b) theta_kl
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j)
                for (int k = 1; k <= N; ++k)
                    for (int l = 1; l <= N; ++l) {
                        RatFunc acc(0);
                        for (int d = 1; d <= N; ++d)
                            acc += rform_.r_u_Su(a, d, k, i) * rform_.r_Su_u(j, l, d, b);
                        m.set(pair_index(N, k, l), pair_index(N, i, j), acc);
                    }
    }
    return m;
}

SigOp sigma_adjacent(const Calculus& calc, const SpaceSignature& sig, int pos, BraidSign sign) {
    if (pos < 1 || pos >= sig.length())
        throw DomainError("sigma_adjacent: transposition position out of range");
    const OpMatrix& b = calc.braiding(sig.slots[pos - 1], sig.slots[pos], sign);
    OpMatrix m = slot_op(b, sig.length(), pos, sig.slot_dim());
    SpaceSignature out = sig;
    std::swap(out.slots[pos - 1], out.slots[pos]);
    m.signature = out;
    return {std::move(m), sig, std::move(out)};
}

SigOp compose_adjacent(const Calculus& calc, const SpaceSignature& sig,
                       const std::vector<int>& positions, BraidSign sign) {
    SpaceSignature cur = sig;
    OpMatrix acc = OpMatrix::identity(static_cast<int>(sig.dim()));
    for (auto it = positions.rbegin(); it != positions.rend(); ++it) {
        SigOp step = sigma_adjacent(calc, cur, *it, sign);
        acc = step.matrix * acc;
        cur = step.codomain;
    }
    acc.signature = cur;
    return {std::move(acc), sig, std::move(cur)};
}

std::vector<int> word_positions(WordKind kind, int j, int k) {
    std::vector<int> pos;
    switch (kind) {
        case WordKind::Rto:
            for (int t = j; t < k; ++t) pos.push_back(t);
            break;
        case WordKind::Lto:
            for (int t = k - 1; t >= j; --t) pos.push_back(t);
            break;
        case WordKind::HalfTwist:
            // sigma_(m) with m = j
            for (int t = 1; t <= j; ++t) {
                auto part = word_positions(WordKind::Lto, 1, t);
                pos.insert(pos.end(), part.begin(), part.end());
            }
            break;
        case WordKind::Block:
            for (int t = k; t >= 1; --t) {
                auto part = word_positions(WordKind::Rto, t, j + t);
                pos.insert(pos.end(), part.begin(), part.end());
            }
            break;
    }
    return pos;
}

SigOp sigma_word(const Calculus& calc, WordKind kind, int j, int k,
                 const SpaceSignature& sig, BraidSign sign) {
    if (j < 0 || k < 0 || (kind == WordKind::Block && j + k != sig.length()))
        throw DomainError("sigma_word: malformed word indices");
    auto pos = word_positions(kind, j, k);
    for (int p : pos)
        if (p < 1 || p >= sig.length())
            throw DomainError("sigma_word: word leaves the signature range");
    return compose_adjacent(calc, sig, pos, sign);
}

} // namespace qf
