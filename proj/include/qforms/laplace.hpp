#pragma once

// The spectrum of the Laplace operator on the coordinate algebra: closed-form
// eigenvalues indexed by Young diagrams, their classical limits, and the
// word-level operator built from Jucys-Murphy elements that cross-checks the
// closed form on small tensor powers.

#include <string>
#include <vector>

#include "qforms/matrix.hpp"
#include "qforms/ratfunc.hpp"

namespace qf {

struct YoungDiagram {
    // weakly decreasing nonnegative row lengths; trailing zeros allowed
    std::vector<int> rows;

    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> r);

    int boxes() const;
    int row(int i) const {  // 1-based, 0 beyond the stored rows
        return (i >= 1 && i <= static_cast<int>(rows.size())) ? rows[i - 1] : 0;
    }
    int nonzero_rows() const;
    // number of columns of length exactly i (1-based)
    int columns_of_length(int i) const { return row(i) - row(i + 1); }
    // the diagram with one full height-N column removed
    YoungDiagram strip_full_column(int N) const;

    bool operator==(const YoungDiagram& o) const;
    std::string str() const;  // e.g. "[2,1]"; "[]" when empty
};

// All diagrams with at most max_boxes boxes and fewer than N nonzero rows
// (the labels of the irreducible corepresentations), empty diagram first,
// then by box count, and within a box count by descending first rows.
std::vector<YoungDiagram> reduced_diagrams(int N, int max_boxes);

// E_lambda = (z - z^-1)^2 ([m]_z^2 [N]_q + [N]_z sum_{(i,j)} [N^2 - 2m + 2N(j-i)]_z)
RatFunc eigenvalue(const YoungDiagram& lambda, int N);

// the classical (q -> 1) eigenvalue, an exact rational
Rat classical_eigenvalue(const YoungDiagram& lambda, int N);

// D^sign_n on (C^N)^{(x)(m+1)}; D_1 = id, and for n >= 2 the sandwich
// word Rhat_{n-1,n} ... Rhat_{23} Rhat_{12}^2 Rhat_{23} ... Rhat_{n-1,n}
OpMatrix jucys_murphy(int m, int n, BraidSign sign, int N);

// the Laplace operator restricted to degree-m generator words, as the
// weighted partial trace of z^{-2m} D^+_{m+1} + z^{2m} D^-_{m+1} - 2 id
// over the last slot with weights q^{2k}, scaled by q^{-N-1}
OpMatrix word_laplace(int m, int N);

struct MinPositive {
    YoungDiagram diagram;
    Rat value;
};

// Enumerates the reduced diagrams with at most max_boxes boxes, evaluates
// every eigenvalue at the given rational point and returns the smallest
// positive one. Throws PoleError if the point hits a denominator (pick
// another z) and StructureError if the minimizer is not a single column.
MinPositive min_positive(int N, int max_boxes, const Rat& at);

} // namespace qf
