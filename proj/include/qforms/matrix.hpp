#pragma once

// Sparse matrices over an exact scalar, with the tensor-product structure the
// operator calculus needs. The same template serves Q(z) (the default) and
// the prime field used by probabilistic rank checks. Entries equal to zero
// are never stored, so structural equality is semantic equality for scalars
// with canonical forms.

#include <algorithm>
#include <string>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qforms/error.hpp"
#include "qforms/ratfunc.hpp"
#include "qforms/types.hpp"

namespace qf {

template <class S>
class SMat {
  public:
    using Row = std::vector<std::pair<int, S>>;  // sorted by column

    SMat() = default;
    SMat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

    static SMat identity(int n) {
        SMat m(n, n);
        for (int i = 0; i < n; ++i) m.data_[i].emplace_back(i, S(1));
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Row& row(int r) const { return data_[r]; }

    void set(int r, int c, S v) {
        Row& row = data_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, int col) { return e.first < col; });
        if (it != row.end() && it->first == c) {
            if (v.is_zero()) row.erase(it);
            else it->second = std::move(v);
        } else if (!v.is_zero()) {
            row.insert(it, {c, std::move(v)});
        }
    }

    void add_to(int r, int c, const S& v) {
        if (v.is_zero()) return;
        Row& row = data_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, int col) { return e.first < col; });
        if (it != row.end() && it->first == c) {
            S s = it->second + v;
            if (s.is_zero()) row.erase(it);
            else it->second = std::move(s);
        } else {
            row.insert(it, {c, v});
        }
    }

    S get(int r, int c) const {
        const Row& row = data_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, int col) { return e.first < col; });
        if (it != row.end() && it->first == c) return it->second;
        return S(0);
    }

    bool is_zero() const {
        for (const auto& r : data_)
            if (!r.empty()) return false;
        return true;
    }

    long nonzeros() const {
        long n = 0;
        for (const auto& r : data_) n += static_cast<long>(r.size());
        return n;
    }

    bool operator==(const SMat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const SMat& o) const { return !(*this == o); }

    SMat operator+(const SMat& o) const {
        require_shape(o.rows_, o.cols_, "add");
        SMat r(rows_, cols_);
        for (int i = 0; i < rows_; ++i) r.data_[i] = merge_rows(data_[i], o.data_[i], false);
        return r;
    }

    SMat operator-(const SMat& o) const {
        require_shape(o.rows_, o.cols_, "subtract");
        SMat r(rows_, cols_);
        for (int i = 0; i < rows_; ++i) r.data_[i] = merge_rows(data_[i], o.data_[i], true);
        return r;
    }

    SMat operator*(const SMat& o) const {
        if (cols_ != o.rows_) throw StructureError("matrix multiply: inner dimensions differ");
        SMat r(rows_, o.cols_);
        std::map<int, S> acc;
        for (int i = 0; i < rows_; ++i) {
            acc.clear();
            for (const auto& [k, a] : data_[i]) {
                for (const auto& [j, b] : o.data_[k]) {
                    auto it = acc.find(j);
                    if (it == acc.end()) acc.emplace(j, a * b);
                    else it->second = it->second + a * b;
                }
            }
            Row& row = r.data_[i];
            row.reserve(acc.size());
            for (auto& [j, v] : acc)
                if (!v.is_zero()) row.emplace_back(j, std::move(v));
        }
        return r;
    }

    SMat scaled(const S& c) const {
        SMat r(rows_, cols_);
        if (c.is_zero()) return r;
        for (int i = 0; i < rows_; ++i) {
            r.data_[i].reserve(data_[i].size());
            for (const auto& [j, v] : data_[i]) {
                S p = v * c;
                if (!p.is_zero()) r.data_[i].emplace_back(j, std::move(p));
            }
        }
        return r;
    }

    SMat transposed() const {
        SMat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (const auto& [j, v] : data_[i]) r.data_[j].emplace_back(i, v);
        return r;
    }

    std::vector<S> apply(const std::vector<S>& v) const {
        std::vector<S> out(rows_, S(0));
        for (int i = 0; i < rows_; ++i) {
            S acc(0);
            for (const auto& [j, a] : data_[i])
                if (!v[j].is_zero()) acc = acc + a * v[j];
            out[i] = std::move(acc);
        }
        return out;
    }

    std::vector<S> column(int c) const {
        std::vector<S> out(rows_, S(0));
        for (int i = 0; i < rows_; ++i) out[i] = get(i, c);
        return out;
    }

    // Attached when the matrix acts on a tensor product of form spaces.
    std::optional<SpaceSignature> signature;

  private:
    void require_shape(int r, int c, const char* what) const {
        if (rows_ != r || cols_ != c)
            throw StructureError(std::string("matrix ") + what + ": shapes differ");
    }

    static Row merge_rows(const Row& a, const Row& b, bool subtract) {
        Row out;
        out.reserve(a.size() + b.size());
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
                ++j;
            } else {
                S v = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
                if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        return out;
    }

    int rows_ = 0, cols_ = 0;
    std::vector<Row> data_;
};

using OpMatrix = SMat<RatFunc>;

template <class S>
SMat<S> kron(const SMat<S>& a, const SMat<S>& b) {
    SMat<S> r(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ia = 0; ia < a.rows(); ++ia) {
        for (const auto& [ja, va] : a.row(ia)) {
            for (int ib = 0; ib < b.rows(); ++ib) {
                for (const auto& [jb, vb] : b.row(ib)) {
                    S v = va * vb;
                    if (!v.is_zero())
                        r.set(ia * b.rows() + ib, ja * b.cols() + jb, std::move(v));
                }
            }
        }
    }
    return r;
}

// id^{(pos-1)} (x) op (x) id^{(k-pos-1)} on k slots of dimension d, where op
// acts on two adjacent slots and pos is 1-based.
template <class S>
SMat<S> slot_op(const SMat<S>& op, int slot_count, int pos, long d) {
    long left = 1, right = 1;
    for (int t = 1; t < pos; ++t) left *= d;
    for (int t = pos + 1; t < slot_count; ++t) right *= d;
    SMat<S> m = kron(SMat<S>::identity(static_cast<int>(left)), op);
    if (right > 1) m = kron(m, SMat<S>::identity(static_cast<int>(right)));
    return m;
}

// Rank over Q(z) by fraction-free (Bareiss) elimination: denominators are
// cleared per row, then every update divides exactly by the previous pivot.
// When pivot_cols is supplied it receives the lexicographically first
// independent column set (a column basis of the image).
int rank_exact(const OpMatrix& m, std::vector<int>* pivot_cols = nullptr);

// Basis of the right kernel; kernel dimension is cols - rank.
std::vector<std::vector<RatFunc>> kernel_basis(const OpMatrix& m);

// Solve A x = b for square invertible A; throws StructureError if singular.
std::vector<RatFunc> solve(const OpMatrix& a, const std::vector<RatFunc>& b);

// Solve W x = t where W has full column rank and t lies in its column span;
// throws StructureError otherwise.
std::vector<RatFunc> solve_in_span(const OpMatrix& w, const std::vector<RatFunc>& t);

OpMatrix inverse(const OpMatrix& a);

// Contracts the last tensor slot diagonally against the given weights:
// out[I,J] = sum_k weights[k] m[(I,k),(J,k)]. The slot dimension equals
// weights.size() and must divide the matrix dimensions.
OpMatrix weighted_partial_trace(const OpMatrix& m, const std::vector<RatFunc>& weights);

} // namespace qf
