#include "qforms/exterior.hpp"

#include <algorithm>

namespace qf {

int inversions(const std::vector<int>& oneline) {
    int count = 0;
    for (size_t a = 0; a < oneline.size(); ++a)
        for (size_t b = a + 1; b < oneline.size(); ++b)
            if (oneline[a] > oneline[b]) ++count;
    return count;
}

std::vector<int> inverse_perm(const std::vector<int>& oneline) {
    std::vector<int> inv(oneline.size());
    for (size_t t = 0; t < oneline.size(); ++t) inv[oneline[t] - 1] = static_cast<int>(t) + 1;
    return inv;
}

std::vector<int> reduced_word(std::vector<int> oneline) {
    // bubble-sort the one-line form; the swaps read in reverse are a reduced
    // word in the composition order used by word_product
    std::vector<int> swaps;
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t t = 0; t + 1 < oneline.size(); ++t) {
            if (oneline[t] > oneline[t + 1]) {
                std::swap(oneline[t], oneline[t + 1]);
                swaps.push_back(static_cast<int>(t) + 1);
                moved = true;
            }
        }
    }
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

std::vector<std::vector<int>> shuffles(int i, int j) {
    const int m = i + j;
    std::vector<std::vector<int>> out;
    std::vector<bool> chosen(m + 1, false);
    // choose, in lexicographic order, the i values placed increasing on the
    // first block; the rest fill the second block increasing
    std::vector<int> idx(i);
    for (int t = 0; t < i; ++t) idx[t] = t + 1;
    while (true) {
        std::vector<int> perm;
        std::fill(chosen.begin(), chosen.end(), false);
        for (int t = 0; t < i; ++t) {
            perm.push_back(idx[t]);
            chosen[idx[t]] = true;
        }
        for (int v = 1; v <= m; ++v)
            if (!chosen[v]) perm.push_back(v);
        out.push_back(std::move(perm));
        if (i == 0) break;
        int t = i - 1;
        while (t >= 0 && idx[t] == m - (i - 1 - t)) --t;
        if (t < 0) break;
        ++idx[t];
        for (int s = t + 1; s < i; ++s) idx[s] = idx[s - 1] + 1;
    }
    return out;
}

long ExteriorOps::dim(int k) const {
    long d = 1;
    for (int t = 0; t < k; ++t) d *= calc_->form_dim();
    return d;
}

const OpMatrix& ExteriorOps::antisym(int k) const {
    auto it = antisym_cache_.find(k);
    if (it != antisym_cache_.end()) return it->second;
    OpMatrix a = antisym_matrix(sigma2(), k, calc_->form_dim());
    return antisym_cache_.emplace(k, std::move(a)).first->second;
}

const OpMatrix& ExteriorOps::partial(PartialKind kind, int i, int j) const {
    auto key = std::make_tuple(kind == PartialKind::A ? 0 : 1, i, j);
    auto it = partial_cache_.find(key);
    if (it != partial_cache_.end()) return it->second;
    long d = dim(i + j);
    auto adj = adjacent_ops(sigma2(), i + j, calc_->form_dim());
    return partial_cache_.emplace(key, partial_antisym(adj, i, j, kind, d)).first->second;
}

namespace {

// two-trial modular rank of A_k built entirely over the prime field
int modular_antisym_rank(const Calculus& calc, FormType tau, int k, uint64_t seed) {
    const OpMatrix& sigma = calc.braiding(tau, tau, BraidSign::Plus);
    SplitMix64 rng(seed);
    int best = 0;
    for (int trial = 0; trial < 2; ++trial) {
        ModMatrix msigma;
        while (true) {
            Zp x = random_point(rng);
            if (try_eval_mod(sigma, x, msigma)) break;
        }
        ModMatrix a = antisym_matrix(msigma, k, calc.form_dim());
        best = std::max(best, rank_mod(a));
    }
    return best;
}

constexpr long kExactSizeCeiling = 64;

} // namespace

DimsResult lambda_dims(const Calculus& calc, FormType tau, int max_k, RankMode mode,
                       uint64_t seed, long max_dim) {
    DimsResult out;
    ExteriorOps ops(calc, tau, BraidSign::Plus);
    for (int k = 0; k <= max_k; ++k) {
        long d = ops.dim(k);
        if (d > max_dim) {
            out.truncated = true;
            break;
        }
        bool exact = (mode == RankMode::Exact) || d <= kExactSizeCeiling;
        int rank = exact ? rank_exact(ops.antisym(k))
                         : modular_antisym_rank(calc, tau, k, seed + static_cast<uint64_t>(k));
        out.dims.push_back(rank);
        out.exact.push_back(exact);
    }
    return out;
}

namespace {

OpMatrix stack_rows(const OpMatrix& a, const OpMatrix& b) {
    OpMatrix m(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (const auto& [j, v] : a.row(i)) m.set(i, j, v);
    for (int i = 0; i < b.rows(); ++i)
        for (const auto& [j, v] : b.row(i)) m.set(a.rows() + i, j, v);
    return m;
}

} // namespace

bool kernel_equality_check(const Calculus& calc, int k, FormType tau) {
    ExteriorOps plus(calc, tau, BraidSign::Plus);
    ExteriorOps minus(calc, tau, BraidSign::Minus);
    const OpMatrix& ap = plus.antisym(k);
    const OpMatrix& am = minus.antisym(k);
    int rp = rank_exact(ap);
    int rm = rank_exact(am);
    if (rp != rm) return false;
    // equal kernels iff stacking adds no rank
    return rank_exact(stack_rows(ap, am)) == rp;
}

TopForm top_form(const Calculus& calc, FormType tau, uint64_t seed, long max_dim) {
    ExteriorOps ops(calc, tau, BraidSign::Plus);
    for (int k = 1;; ++k) {
        long d = ops.dim(k);
        if (d > max_dim)
            throw ResourceLimit("top form: no degree of dimension one within the size cap");
        int rank = d <= kExactSizeCeiling
                       ? rank_exact(ops.antisym(k))
                       : modular_antisym_rank(calc, tau, k, seed + static_cast<uint64_t>(k));
        if (rank == 0)
            throw StructureError("top form: form spaces vanished before reaching dimension one");
        if (rank != 1) continue;
        // confirm the next degree dies
        if (ops.dim(k + 1) <= max_dim) {
            int next = ops.dim(k + 1) <= kExactSizeCeiling
                           ? rank_exact(ops.antisym(k + 1))
                           : modular_antisym_rank(calc, tau, k + 1, seed + k + 1);
            if (next != 0)
                throw StructureError("top form: degree above the candidate top degree persists");
        }
        const OpMatrix& a = ops.antisym(k);
        for (int c = 0; c < a.cols(); ++c) {
            auto col = a.column(c);
            for (const auto& v : col)
                if (!v.is_zero()) return {k, std::move(col)};
        }
        throw StructureError("top form: antisymmetrizer of rank one has no nonzero column");
    }
}

} // namespace qf
