#include "qforms/matrix.hpp"

namespace qf {

namespace {

// dense Z[z] copy of the matrix with each row scaled by a common denominator
std::vector<std::vector<Poly>> cleared_rows(const OpMatrix& m) {
    std::vector<std::vector<Poly>> out(m.rows(), std::vector<Poly>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        Poly lcm(1);
        for (const auto& [j, v] : m.row(i)) {
            Poly g = Poly::gcd(lcm, v.den());
            lcm = lcm * Poly::divexact(v.den(), g);
        }
        for (const auto& [j, v] : m.row(i)) {
            out[i][j] = v.num() * Poly::divexact(lcm, v.den());
        }
    }
    return out;
}

} // namespace

int rank_exact(const OpMatrix& m, std::vector<int>* pivot_cols) {
    auto a = cleared_rows(m);
    const int n = m.rows(), cols = m.cols();
    Poly prev(1);
    int r = 0;
    for (int c = 0; c < cols && r < n; ++c) {
        // pivot of least degree keeps the minors small
        int pivot = -1;
        for (int i = r; i < n; ++i) {
            if (a[i][c].is_zero()) continue;
            if (pivot < 0 || a[i][c].degree() < a[pivot][c].degree()) pivot = i;
        }
        if (pivot < 0) continue;
        if (pivot_cols) pivot_cols->push_back(c);
        std::swap(a[r], a[pivot]);
        for (int i = r + 1; i < n; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                Poly t = a[i][j] * a[r][c] - a[i][c] * a[r][j];
                a[i][j] = t.is_zero() ? Poly() : Poly::divexact(t, prev);
            }
            a[i][c] = Poly();
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

namespace {

// reduced row echelon form over Q(z); returns pivot columns
std::vector<int> rref(std::vector<std::vector<RatFunc>>& a) {
    const int n = static_cast<int>(a.size());
    const int cols = n == 0 ? 0 : static_cast<int>(a[0].size());
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < n; ++c) {
        int pivot = -1;
        for (int i = r; i < n; ++i) {
            if (!a[i][c].is_zero()) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        std::swap(a[r], a[pivot]);
        RatFunc inv = a[r][c].inverse();
        for (int j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
        for (int i = 0; i < n; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            RatFunc f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<RatFunc>> dense_copy(const OpMatrix& m) {
    std::vector<std::vector<RatFunc>> a(m.rows(), std::vector<RatFunc>(m.cols(), RatFunc(0)));
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& [j, v] : m.row(i)) a[i][j] = v;
    return a;
}

} // namespace

std::vector<std::vector<RatFunc>> kernel_basis(const OpMatrix& m) {
    auto a = dense_copy(m);
    std::vector<int> pivots = rref(a);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<RatFunc>> basis;
    for (int f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<RatFunc> v(m.cols(), RatFunc(0));
        v[f] = RatFunc(1);
        for (size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -a[p][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<RatFunc> solve(const OpMatrix& a, const std::vector<RatFunc>& b) {
    if (a.rows() != static_cast<int>(b.size()))
        throw StructureError("solve: dimension mismatch");
    auto aug = dense_copy(a);
    for (int i = 0; i < a.rows(); ++i) aug[i].push_back(b[i]);
    std::vector<int> pivots = rref(aug);
    // consistency and uniqueness: every solution column must be a pivot
    std::vector<RatFunc> x(a.cols(), RatFunc(0));
    for (size_t p = 0; p < pivots.size(); ++p) {
        if (pivots[p] == a.cols())
            throw StructureError("solve: inconsistent system");
        x[pivots[p]] = aug[p][a.cols()];
    }
    if (static_cast<int>(pivots.size()) < a.cols())
        throw StructureError("solve: singular system");
    return x;
}

std::vector<RatFunc> solve_in_span(const OpMatrix& w, const std::vector<RatFunc>& t) {
    if (w.rows() != static_cast<int>(t.size()))
        throw StructureError("solve_in_span: dimension mismatch");
    auto aug = dense_copy(w);
    for (int i = 0; i < w.rows(); ++i) aug[i].push_back(t[i]);
    std::vector<int> pivots = rref(aug);
    std::vector<RatFunc> x(w.cols(), RatFunc(0));
    for (size_t p = 0; p < pivots.size(); ++p) {
        if (pivots[p] == w.cols())
            throw StructureError("solve_in_span: target outside the column span");
        x[pivots[p]] = aug[p][w.cols()];
    }
    if (static_cast<int>(pivots.size()) < w.cols())
        throw StructureError("solve_in_span: columns are dependent");
    return x;
}

OpMatrix inverse(const OpMatrix& a) {
    if (a.rows() != a.cols()) throw StructureError("inverse: matrix not square");
    const int n = a.rows();
    auto aug = dense_copy(a);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i].push_back(RatFunc(i == j ? 1 : 0));
    }
    std::vector<int> pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
        throw StructureError("inverse: matrix is singular");
    OpMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.set(i, j, aug[i][n + j]);
    return out;
}

OpMatrix weighted_partial_trace(const OpMatrix& m, const std::vector<RatFunc>& weights) {
    const int d = static_cast<int>(weights.size());
    if (d <= 0) throw DomainError("weighted_partial_trace: empty weights");
    if (m.rows() != m.cols() || m.rows() % d != 0)
        throw DomainError("weighted_partial_trace: slot dimension does not divide matrix size");
    const int n = m.rows() / d;
    OpMatrix out(n, n);
    for (int r = 0; r < m.rows(); ++r) {
        const int k = r % d;
        for (const auto& [c, v] : m.row(r)) {
            if (c % d != k) continue;
            out.add_to(r / d, c / d, weights[k] * v);
        }
    }
    return out;
}

} // namespace qf
