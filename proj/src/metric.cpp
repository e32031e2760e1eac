#include "qforms/metric.hpp"

namespace qf {

namespace {

void digits_of(long idx, int k, long d, int* out) {
    for (int t = k - 1; t >= 0; --t) {
        out[t] = static_cast<int>(idx % d);
        idx /= d;
    }
}

RatFunc bilinear(const std::vector<RatFunc>& u, const OpMatrix& m, const std::vector<RatFunc>& v) {
    std::vector<RatFunc> mv = m.apply(v);
    RatFunc acc(0);
    for (size_t i = 0; i < u.size(); ++i)
        if (!u[i].is_zero() && !mv[i].is_zero()) acc += u[i] * mv[i];
    return acc;
}

std::vector<RatFunc> unit_vector(long dim, long at) {
    std::vector<RatFunc> v(dim, RatFunc(0));
    v[at] = RatFunc(1);
    return v;
}

} // namespace

MetricData metric_data(const Calculus& calc) {
    const int N = calc.N();
    MetricData md;
    md.N = N;
    for (int i = 1; i <= N; ++i) {
        // F1 = z^-1 q^{N-2i}, F2 = q^{2i}, G1 = z^-1 q^N, G2 = 1 on the diagonal
        md.F1.push_back(RatFunc::z_power(static_cast<long>(N) * (N - 2 * i) - 1));
        md.F2.push_back(q_power(N, 2 * i));
        md.G1.push_back(RatFunc::z_power(static_cast<long>(N) * N - 1));
        md.G2.push_back(RatFunc(1));
    }
    md.g_pm = OpMatrix(N * N, N * N);
    md.g_mp = OpMatrix(N * N, N * N);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            md.g_pm.set(pair_index(N, i, j), pair_index(N, j, i), md.F1[j - 1] * md.F2[i - 1]);
            md.g_mp.set(pair_index(N, i, j), pair_index(N, j, i), md.G1[j - 1] * md.G2[i - 1]);
        }
    return md;
}

MetricData metric_data_perturbed(const Calculus& calc) {
    MetricData md = metric_data(calc);
    if (md.N < 2) throw DomainError("perturbed metric needs N >= 2");
    std::swap(md.F2[0], md.F2[1]);
    const int N = md.N;
    md.g_pm = OpMatrix(N * N, N * N);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            md.g_pm.set(pair_index(N, i, j), pair_index(N, j, i), md.F1[j - 1] * md.F2[i - 1]);
    return md;
}

MetricOps::MetricOps(const Calculus& calc, MetricData data)
    : calc_(&calc), data_(std::move(data)) {
    for (FormType tau : {FormType::Plus, FormType::Minus})
        for (BraidSign s : {BraidSign::Plus, BraidSign::Minus})
            ext_.emplace_back(calc, tau, s);
}

OpMatrix MetricOps::pairing_row(FormType tau) const {
    const long d = calc_->form_dim();
    OpMatrix row(1, static_cast<int>(d * d));
    const OpMatrix& g = tau == FormType::Plus ? data_.g_pm : data_.g_mp;
    for (int x = 0; x < d; ++x)
        for (const auto& [y, v] : g.row(x)) row.set(0, static_cast<int>(x * d + y), v);
    return row;
}

std::vector<RatFunc> MetricOps::gtilde_apply(FormType tau, int k, int l,
                                             const std::vector<RatFunc>& xi,
                                             const std::vector<RatFunc>& zeta) const {
    const long d = calc_->form_dim();
    const int m = std::min(k, l);
    long out_dim = 1;
    for (int t = 0; t < (k > l ? k - l : l - k); ++t) out_dim *= d;
    std::vector<RatFunc> out(out_dim, RatFunc(0));
    std::vector<int> x(std::max(k, 1)), y(std::max(l, 1));
    for (long xi_idx = 0; xi_idx < static_cast<long>(xi.size()); ++xi_idx) {
        if (xi[xi_idx].is_zero()) continue;
        digits_of(xi_idx, k, d, x.data());
        for (long z_idx = 0; z_idx < static_cast<long>(zeta.size()); ++z_idx) {
            if (zeta[z_idx].is_zero()) continue;
            digits_of(z_idx, l, d, y.data());
            RatFunc c = xi[xi_idx] * zeta[z_idx];
            for (int t = 1; t <= m && !c.is_zero(); ++t)
                c *= pairing(tau, x[k - t], y[t - 1]);
            if (c.is_zero()) continue;
            long out_idx = 0;
            if (k >= l) {
                for (int t = 0; t < k - l; ++t) out_idx = out_idx * d + x[t];
            } else {
                for (int t = k; t < l; ++t) out_idx = out_idx * d + y[t];
            }
            out[out_idx] += c;
        }
    }
    return out;
}

OpMatrix MetricOps::gtilde_matrix(FormType tau, int k, int l) const {
    if (k != l) throw DomainError("gtilde_matrix: only the scalar-valued square case is materialized");
    const long d = calc_->form_dim();
    long dk = 1;
    for (int t = 0; t < k; ++t) dk *= d;
    OpMatrix row(1, static_cast<int>(dk * dk));
    std::vector<int> x(std::max(k, 1)), y(std::max(l, 1));
    for (long xi = 0; xi < dk; ++xi) {
        digits_of(xi, k, d, x.data());
        for (long zi = 0; zi < dk; ++zi) {
            digits_of(zi, l, d, y.data());
            RatFunc c(1);
            for (int t = 1; t <= k && !c.is_zero(); ++t) c *= pairing(tau, x[k - t], y[t - 1]);
            if (!c.is_zero()) row.set(0, static_cast<int>(xi * dk + zi), c);
        }
    }
    return row;
}

std::vector<RatFunc> MetricOps::contract(FormType tau, BraidSign sign, int k, int l,
                                         const std::vector<RatFunc>& xi,
                                         const std::vector<RatFunc>& zeta) const {
    const ExteriorOps& first = exterior(tau, sign);
    const ExteriorOps& second = exterior(opposite(tau), sign);
    if (k >= l) {
        std::vector<RatFunc> bxi = (k == 0) ? xi : first.partial(PartialKind::B, k - l, l).apply(xi);
        std::vector<RatFunc> azeta = (l == 0) ? zeta : second.antisym(l).apply(zeta);
        return gtilde_apply(tau, k, l, bxi, azeta);
    }
    std::vector<RatFunc> axi = (k == 0) ? xi : first.antisym(k).apply(xi);
    std::vector<RatFunc> bzeta = second.partial(PartialKind::B, k, l - k).apply(zeta);
    return gtilde_apply(tau, k, l, axi, bzeta);
}

VerifyReport MetricOps::verify() const {
    VerifyReport rep;
    const int N = calc_->N();
    const long d = calc_->form_dim();

    // (a) both pairing matrices invertible
    bool inv_ok = rank_exact(data_.g_pm) == d && rank_exact(data_.g_mp) == d;
    rep.checks.push_back({"pairing_invertible", inv_ok});

    // (b) sigma-symmetry g(sigma(.)) = g(.) in both orderings, both braid signs
    {
        OpMatrix row_pm = pairing_row(FormType::Plus);
        OpMatrix row_mp = pairing_row(FormType::Minus);
        bool ok = true;
        for (BraidSign s : {BraidSign::Plus, BraidSign::Minus}) {
            ok = ok && (row_mp * calc_->braiding(FormType::Plus, FormType::Minus, s) == row_pm);
            ok = ok && (row_pm * calc_->braiding(FormType::Minus, FormType::Plus, s) == row_mp);
        }
        rep.checks.push_back({"sigma_symmetric", ok});
    }

    // (c) exchange of the pairing past an adjacent braiding on three slots
    {
        bool ok = true;
        const OpMatrix id_d = OpMatrix::identity(static_cast<int>(d));
        for (FormType tau : {FormType::Plus, FormType::Minus})
            for (FormType tau2 : {FormType::Plus, FormType::Minus})
                for (BraidSign s : {BraidSign::Plus, BraidSign::Minus}) {
                    SpaceSignature sig(N, {tau, tau2, opposite(tau)});
                    OpMatrix lhs = kron(pairing_row(tau), id_d) *
                                   sigma_adjacent(*calc_, sig, 2, s).matrix;
                    OpMatrix rhs = kron(id_d, pairing_row(tau)) *
                                   sigma_adjacent(*calc_, sig, 1, opposite(s)).matrix;
                    ok = ok && (lhs == rhs);
                }
        rep.checks.push_back({"pairing_exchange", ok});
    }

    // (d) the scalar relations tying the metric diagonals to the dual functionals
    {
        const FFunctionals& ff = calc_->functionals();
        bool ok = true;
        RatFunc z_c = ff.f_S.get(0, 0) / ff.f_bar.get(0, 0);
        ok = ok && (ff.f_S == ff.f_bar.scaled(z_c));
        RatFunc c = data_.F1[0] / (data_.G2[0] * ff.f.get(0, 0));
        for (int i = 0; i < N; ++i) {
            ok = ok && (data_.F1[i] == c * data_.G2[i] * ff.f.get(i, i));
            ok = ok && (data_.F2[i] == c.inverse() * ff.f_bar.get(i, i) * data_.G1[i]);
        }
        rep.checks.push_back({"scalar_relations", ok});
    }

    // (e) the pairing commutes with the right action
    {
        bool ok = true;
        for (int a = 1; a <= N; ++a)
            for (int b = 1; b <= N; ++b) {
                OpMatrix acc_pm(static_cast<int>(d), static_cast<int>(d));
                OpMatrix acc_mp(static_cast<int>(d), static_cast<int>(d));
                for (int c = 1; c <= N; ++c) {
                    acc_pm = acc_pm + calc_->right_action(FormType::Plus, a, c).transposed() *
                                          data_.g_pm * calc_->right_action(FormType::Minus, c, b);
                    acc_mp = acc_mp + calc_->right_action(FormType::Minus, a, c).transposed() *
                                          data_.g_mp * calc_->right_action(FormType::Plus, c, b);
                }
                if (a == b) {
                    ok = ok && (acc_pm == data_.g_pm) && (acc_mp == data_.g_mp);
                } else {
                    ok = ok && acc_pm.is_zero() && acc_mp.is_zero();
                }
            }
        rep.checks.push_back({"action_compatible", ok});
    }

    return rep;
}

HodgeContext::HodgeContext(const MetricOps& ops, uint64_t seed, long max_dim) : ops_(&ops) {
    const Calculus& calc = ops.calculus();
    TopForm plus = top_form(calc, FormType::Plus, seed, max_dim);
    TopForm minus = top_form(calc, FormType::Minus, seed, max_dim);
    if (plus.n0 != minus.n0)
        throw StructureError("top degrees of the two form families disagree");
    n0_ = plus.n0;
    top_plus_ = std::move(plus.vec);
    top_minus_ = std::move(minus.vec);
    // scale the minus-side form so that every mutual contraction equals 1
    RatFunc s = ops.contract(FormType::Plus, BraidSign::Plus, n0_, n0_, top_plus_, top_minus_)[0];
    if (s.is_zero())
        throw StructureError("top forms pair to zero; normalization impossible");
    RatFunc inv = s.inverse();
    for (auto& v : top_minus_) v *= inv;
}

const LambdaBasis& HodgeContext::basis(FormType tau, int k) const {
    auto key = std::make_pair(tau == FormType::Plus ? 0 : 1, k);
    auto it = bases_.find(key);
    if (it != bases_.end()) return it->second;
    const OpMatrix& a = ops_->exterior(tau, BraidSign::Plus).antisym(k);
    LambdaBasis lb;
    lb.k = k;
    lb.tau = tau;
    rank_exact(a, &lb.pivot_cols);
    lb.image = OpMatrix(a.rows(), static_cast<int>(lb.pivot_cols.size()));
    for (size_t j = 0; j < lb.pivot_cols.size(); ++j) {
        auto col = a.column(lb.pivot_cols[j]);
        for (int i = 0; i < a.rows(); ++i)
            if (!col[i].is_zero()) lb.image.set(i, static_cast<int>(j), col[i]);
    }
    return bases_.emplace(key, std::move(lb)).first->second;
}

std::vector<RatFunc> HodgeContext::project(FormType tau, int k, const std::vector<RatFunc>& v) const {
    const LambdaBasis& lb = basis(tau, k);
    const OpMatrix& a = ops_->exterior(tau, BraidSign::Plus).antisym(k);
    return solve_in_span(lb.image, a.apply(v));
}

OpMatrix HodgeContext::hodge(FormType tau, int k, HodgeSide side, BraidSign sign) const {
    const LambdaBasis& lb = basis(tau, k);
    const LambdaBasis& target = basis(opposite(tau), n0_ - k);
    OpMatrix out(static_cast<int>(target.pivot_cols.size()),
                 static_cast<int>(lb.pivot_cols.size()));
    const long dim_k = ops_->exterior(tau, BraidSign::Plus).dim(k);
    const auto& top = top_vec(opposite(tau));
    // the expensive half (the top-form side of the contraction) is shared by
    // every basis column, so apply it once up front
    const ExteriorOps& arg_side = ops_->exterior(tau, sign);
    const ExteriorOps& top_side = ops_->exterior(opposite(tau), sign);
    std::vector<RatFunc> top_half;
    if (side == HodgeSide::Left) {
        top_half = (k == n0_) ? top_side.antisym(n0_).apply(top)
                              : top_side.partial(PartialKind::B, k, n0_ - k).apply(top);
    } else {
        top_half = top_side.partial(PartialKind::B, n0_ - k, k).apply(top);
    }
    for (size_t j = 0; j < lb.pivot_cols.size(); ++j) {
        std::vector<RatFunc> rep = unit_vector(dim_k, lb.pivot_cols[j]);
        std::vector<RatFunc> w;
        if (side == HodgeSide::Left) {
            std::vector<RatFunc> arg =
                (k == 0 || k == n0_) ? rep : arg_side.antisym(k).apply(rep);
            w = ops_->gtilde_apply(tau, k, n0_, arg, top_half);
        } else {
            std::vector<RatFunc> arg = (k == 0) ? rep : arg_side.antisym(k).apply(rep);
            w = ops_->gtilde_apply(opposite(tau), n0_, k, top_half, arg);
        }
        auto coords = project(opposite(tau), n0_ - k, w);
        for (size_t i = 0; i < coords.size(); ++i)
            if (!coords[i].is_zero()) out.set(static_cast<int>(i), static_cast<int>(j), coords[i]);
    }
    return out;
}

OpMatrix HodgeContext::codifferential(FormType tau, int k, BraidSign sign) const {
    if (k == 0) return OpMatrix(0, 1);
    const LambdaBasis& lb = basis(tau, k);
    const LambdaBasis& target = basis(tau, k - 1);
    const auto& eta = ops_->calculus().biinvariant_form(opposite(tau));
    OpMatrix out(static_cast<int>(target.pivot_cols.size()),
                 static_cast<int>(lb.pivot_cols.size()));
    const long dim_k = ops_->exterior(tau, BraidSign::Plus).dim(k);
    for (size_t j = 0; j < lb.pivot_cols.size(); ++j) {
        std::vector<RatFunc> rep = unit_vector(dim_k, lb.pivot_cols[j]);
        std::vector<RatFunc> t1 = ops_->contract(tau, sign, k, 1, rep, eta);
        std::vector<RatFunc> t2 = ops_->contract(opposite(tau), sign, 1, k, eta, rep);
        for (size_t i = 0; i < t1.size(); ++i)
            t1[i] = (k % 2 == 0) ? t1[i] + t2[i] : t1[i] - t2[i];
        auto coords = project(tau, k - 1, t1);
        for (size_t i = 0; i < coords.size(); ++i)
            if (!coords[i].is_zero()) out.set(static_cast<int>(i), static_cast<int>(j), coords[i]);
    }
    return out;
}

OpMatrix HodgeContext::lambda_pairing(FormType tau, BraidSign sign, int k) const {
    const LambdaBasis& lb = basis(tau, k);
    const LambdaBasis& rb = basis(opposite(tau), k);
    const long dim_k = ops_->exterior(tau, BraidSign::Plus).dim(k);
    OpMatrix out(static_cast<int>(lb.pivot_cols.size()), static_cast<int>(rb.pivot_cols.size()));
    for (size_t i = 0; i < lb.pivot_cols.size(); ++i) {
        std::vector<RatFunc> left = unit_vector(dim_k, lb.pivot_cols[i]);
        for (size_t j = 0; j < rb.pivot_cols.size(); ++j) {
            std::vector<RatFunc> right = unit_vector(dim_k, rb.pivot_cols[j]);
            RatFunc v = ops_->contract(tau, sign, k, k, left, right)[0];
            if (!v.is_zero()) out.set(static_cast<int>(i), static_cast<int>(j), v);
        }
    }
    return out;
}

OpMatrix MetricOps::laplace_on_generators() const {
    const Calculus& calc = *calc_;
    const int N = calc.N();
    const auto& omega = calc.biinvariant_form(FormType::Plus);
    const auto& theta = calc.biinvariant_form(FormType::Minus);
    const OpMatrix& g_pm = data_.g_pm;
    const OpMatrix& g_mp = data_.g_mp;
    const RatFunc base = bilinear(omega, g_pm, theta);
    OpMatrix l(N, N);
    for (int c = 1; c <= N; ++c)
        for (int b = 1; b <= N; ++b) {
            RatFunc m1 = bilinear(calc.right_action(FormType::Plus, c, b).apply(omega), g_pm, theta);
            RatFunc m2 = bilinear(calc.right_action(FormType::Minus, c, b).apply(theta), g_mp, omega);
            RatFunc v = m1 + m2;
            if (c == b) v -= RatFunc(2) * base;
            l.set(c - 1, b - 1, v);
        }
    return kron(OpMatrix::identity(N), l);
}

} // namespace qf
