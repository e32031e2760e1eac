#include "qforms/modular.hpp"

namespace qf {

namespace {

Zp pow_mod(Zp base, uint64_t e) {
    Zp acc(1);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

} // namespace

Zp Zp::inverse() const {
    if (v == 0) throw DivisionByZero();
    return pow_mod(*this, P - 2);
}

uint64_t SplitMix64::next() {
    uint64_t x = (state += 0x9e3779b97f4a7c15ULL);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Zp eval_mod(const Poly& p, Zp x) {
    Zp acc(0);
    for (int k = p.degree(); k >= 0; --k) {
        Int c = p.coeff(k);
        uint64_t r = mpz_fdiv_ui(c.get_mpz_t(), Zp::P);
        acc = acc * x + Zp::raw(r);
    }
    return acc;
}

Zp eval_mod(const RatFunc& f, Zp x) {
    Zp d = eval_mod(f.den(), x);
    if (d.is_zero()) throw StructureError("modular evaluation hit a denominator zero");
    return eval_mod(f.num(), x) * d.inverse();
}

bool try_eval_mod(const OpMatrix& m, Zp x, ModMatrix& out) {
    ModMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (const auto& [j, v] : m.row(i)) {
            Zp d = eval_mod(v.den(), x);
            if (d.is_zero()) return false;
            Zp val = eval_mod(v.num(), x) * d.inverse();
            if (!val.is_zero()) r.set(i, j, val);
        }
    }
    out = std::move(r);
    return true;
}

int rank_mod(const ModMatrix& m) {
    // dense elimination; rank-deficient inputs terminate early
    std::vector<std::vector<uint64_t>> a(m.rows(), std::vector<uint64_t>(m.cols(), 0));
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& [j, v] : m.row(i)) a[i][j] = v.v;
    int r = 0;
    const int n = m.rows(), cols = m.cols();
    for (int c = 0; c < cols && r < n; ++c) {
        int pivot = -1;
        for (int i = r; i < n; ++i) {
            if (a[i][c] != 0) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        std::swap(a[r], a[pivot]);
        Zp inv = Zp::raw(a[r][c]).inverse();
        for (int i = r + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            Zp f = Zp::raw(a[i][c]) * inv;
            a[i][c] = 0;
            for (int j = c + 1; j < cols; ++j) {
                if (a[r][j] == 0) continue;
                a[i][j] = (Zp::raw(a[i][j]) - f * Zp::raw(a[r][j])).v;
            }
        }
        ++r;
    }
    return r;
}

Zp random_point(SplitMix64& rng) {
    while (true) {
        Zp x = Zp::raw(rng.next());
        if (!x.is_zero() && x.v != 1 && x.v != Zp::P - 1) return x;
    }
}

int rank_probabilistic(const OpMatrix& m, uint64_t seed) {
    SplitMix64 rng(seed);
    int best = 0;
    for (int trial = 0; trial < 2; ++trial) {
        ModMatrix em;
        while (true) {
            Zp x = random_point(rng);
            if (try_eval_mod(m, x, em)) break;
        }
        best = std::max(best, rank_mod(em));
    }
    return best;
}

} // namespace qf
