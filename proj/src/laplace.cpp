#include "qforms/laplace.hpp"

#include <algorithm>

#include "qforms/rmatrix.hpp"

namespace qf {

YoungDiagram::YoungDiagram(std::vector<int> r) : rows(std::move(r)) {
    for (size_t t = 0; t + 1 < rows.size(); ++t)
        if (rows[t] < rows[t + 1])
            throw DomainError("young diagram rows must be weakly decreasing");
    for (int v : rows)
        if (v < 0) throw DomainError("young diagram rows must be nonnegative");
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
}

int YoungDiagram::boxes() const {
    int m = 0;
    for (int v : rows) m += v;
    return m;
}

int YoungDiagram::nonzero_rows() const { return static_cast<int>(rows.size()); }

YoungDiagram YoungDiagram::strip_full_column(int N) const {
    if (nonzero_rows() < N || row(N) < 1)
        throw DomainError("strip_full_column: no full column to remove");
    std::vector<int> r = rows;
    for (int t = 0; t < N; ++t) --r[t];
    return YoungDiagram(std::move(r));
}

bool YoungDiagram::operator==(const YoungDiagram& o) const { return rows == o.rows; }

std::string YoungDiagram::str() const {
    std::string s = "[";
    for (size_t t = 0; t < rows.size(); ++t) {
        if (t) s += ",";
        s += std::to_string(rows[t]);
    }
    return s + "]";
}

namespace {

void partitions_rec(int remaining, int max_part, int max_parts, std::vector<int>& acc,
                    std::vector<YoungDiagram>& out) {
    if (remaining == 0) {
        out.push_back(YoungDiagram(acc));
        return;
    }
    if (max_parts == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        partitions_rec(remaining - p, p, max_parts - 1, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<YoungDiagram> reduced_diagrams(int N, int max_boxes) {
    std::vector<YoungDiagram> out;
    out.push_back(YoungDiagram{});
    for (int b = 1; b <= max_boxes; ++b) {
        std::vector<int> acc;
        partitions_rec(b, b, N - 1, acc, out);
    }
    return out;
}

RatFunc eigenvalue(const YoungDiagram& lambda, int N) {
    if (lambda.nonzero_rows() > N)
        throw DomainError("eigenvalue: diagram has more rows than the rank allows");
    const RatFunc z = RatFunc::z_power(1);
    const int m = lambda.boxes();
    if (m == 0) return RatFunc(0);
    RatFunc cell_sum(0);
    for (int i = 1; i <= lambda.nonzero_rows(); ++i)
        for (int j = 1; j <= lambda.row(i); ++j)
            cell_sum += q_int(static_cast<long>(N) * N - 2 * m + 2 * N * (j - i), z);
    RatFunc m_z = q_int(m, z);
    RatFunc inner = m_z * m_z * q_int(N, q_power(N, 1)) + q_int(N, z) * cell_sum;
    RatFunc diff = z - z.inverse();
    return diff * diff * inner;
}

Rat classical_eigenvalue(const YoungDiagram& lambda, int N) {
    if (lambda.nonzero_rows() > N)
        throw DomainError("classical_eigenvalue: diagram has more rows than the rank allows");
    Rat total(0);
    for (int i = 1; i <= N - 1; ++i) {
        long mi = lambda.columns_of_length(i);
        if (mi == 0) continue;
        Rat factor(static_cast<long>(N - i) * mi, N);
        factor.canonicalize();
        long inner = static_cast<long>(i) * (mi + N);
        for (int j = 1; j < i; ++j) inner += 2L * j * lambda.columns_of_length(j);
        total += factor * Rat(inner);
    }
    total.canonicalize();
    return total;
}

OpMatrix jucys_murphy(int m, int n, BraidSign sign, int N) {
    if (n < 1 || n > m + 1) throw DomainError("jucys_murphy: index out of range");
    const int slots = m + 1;
    long dim = 1;
    for (int t = 0; t < slots; ++t) dim *= N;
    if (n == 1) return OpMatrix::identity(static_cast<int>(dim));
    const OpMatrix r = rhat(N, sign);
    OpMatrix acc = OpMatrix::identity(static_cast<int>(dim));
    // descending tail Rhat_{n-1,n} ... Rhat_{23}
    for (int p = n - 1; p >= 2; --p) acc = acc * slot_op(r, slots, p, N);
    const OpMatrix r12 = slot_op(r, slots, 1, N);
    acc = acc * r12 * r12;
    for (int p = 2; p <= n - 1; ++p) acc = acc * slot_op(r, slots, p, N);
    return acc;
}

OpMatrix word_laplace(int m, int N) {
    if (m < 1) throw DomainError("word_laplace: word length must be positive");
    long dim = 1;
    for (int t = 0; t < m + 1; ++t) dim *= N;
    OpMatrix core = jucys_murphy(m, m + 1, BraidSign::Plus, N)
                        .scaled(RatFunc::z_power(-2L * m)) +
                    jucys_murphy(m, m + 1, BraidSign::Minus, N)
                        .scaled(RatFunc::z_power(2L * m)) -
                    OpMatrix::identity(static_cast<int>(dim)).scaled(RatFunc(2));
    std::vector<RatFunc> weights;
    for (int k = 1; k <= N; ++k) weights.push_back(q_power(N, 2 * k));
    return weighted_partial_trace(core, weights).scaled(q_power(N, -(N + 1)));
}

MinPositive min_positive(int N, int max_boxes, const Rat& at) {
    if (at == 0 || at == 1 || at == -1)
        throw DomainError("min_positive: the evaluation point must avoid 0 and +-1");
    bool found = false;
    MinPositive best;
    for (const auto& lambda : reduced_diagrams(N, max_boxes)) {
        Rat v = eigenvalue(lambda, N).eval_at(at);  // PoleError asks for another z
        if (v <= 0) continue;
        if (!found || v < best.value) {
            best = {lambda, v};
            found = true;
        }
    }
    if (!found) throw StructureError("min_positive: no positive eigenvalue found");
    for (int r : best.diagram.rows)
        if (r != 1)
            throw StructureError("min_positive: minimizer is not a single column");
    return best;
}

} // namespace qf
