#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "diffgal/polynomial.hpp"
#include "diffgal/rational.hpp"

namespace Eigen {
template <>
struct NumTraits<diffgal::Rat> : GenericNumTraits<diffgal::Rat> {
    typedef diffgal::Rat Real;
    typedef diffgal::Rat NonInteger;
    typedef diffgal::Rat Nested;
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 60
    };
};
}  // namespace Eigen

namespace diffgal {

template <class S>
using DMat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using DVec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using RatMat = DMat<Rat>;
using RatVec = DVec<Rat>;

// In-place reduced row echelon form with deterministic first-nonzero
// pivoting.  Divisions happen only on nonzero entries, so matrices that are
// already (block-)diagonal never trigger scalar inversions besides their
// pivots.  Returns pivot columns.
template <class S>
std::vector<int> exact_rref(DMat<S>& m) {
    std::vector<int> pivots;
    int rows = (int)m.rows(), cols = (int)m.cols();
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int p = -1;
        for (int i = r; i < rows; ++i) {
            if (!(m(i, col) == S(0))) { p = i; break; }
        }
        if (p < 0) continue;
        if (p != r) m.row(p).swap(m.row(r));
        S inv = S(1) / m(r, col);
        for (int j = col; j < cols; ++j) {
            if (!(m(r, j) == S(0))) m(r, j) = m(r, j) * inv;
        }
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            S f = m(i, col);
            if (f == S(0)) continue;
            for (int j = col; j < cols; ++j) {
                if (!(m(r, j) == S(0))) m(i, j) = m(i, j) - f * m(r, j);
            }
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

template <class S>
int exact_rank(DMat<S> m) {
    return (int)exact_rref(m).size();
}

// Basis of the right kernel, one column per free variable, in ascending
// free-column order.
template <class S>
DMat<S> exact_kernel(DMat<S> m) {
    int cols = (int)m.cols();
    auto pivots = exact_rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    int nfree = cols - (int)pivots.size();
    DMat<S> k(cols, nfree);
    k.setConstant(S(0));
    int kc = 0;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        k(c, kc) = S(1);
        for (size_t r = 0; r < pivots.size(); ++r) {
            k(pivots[r], kc) = S(0) - m((int)r, c);
        }
        ++kc;
    }
    return k;
}

// Particular solution of A x = b with free variables set to zero; nullopt if
// inconsistent.
template <class S>
std::optional<DVec<S>> exact_solve(const DMat<S>& a, const DVec<S>& b) {
    int rows = (int)a.rows(), cols = (int)a.cols();
    DMat<S> m(rows, cols + 1);
    m.block(0, 0, rows, cols) = a;
    m.col(cols) = b;
    auto pivots = exact_rref(m);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    DVec<S> x(cols);
    x.setConstant(S(0));
    for (size_t r = 0; r < pivots.size(); ++r) x(pivots[r]) = m((int)r, cols);
    return x;
}

template <class S>
std::optional<DMat<S>> exact_inverse(const DMat<S>& a) {
    int n = (int)a.rows();
    DMat<S> m(n, 2 * n);
    m.block(0, 0, n, n) = a;
    m.block(0, n, n, n).setConstant(S(0));
    for (int i = 0; i < n; ++i) m(i, n + i) = S(1);
    auto pivots = exact_rref(m);
    if ((int)pivots.size() < n) return std::nullopt;
    return DMat<S>(m.block(0, n, n, n));
}

// Characteristic polynomial det(x I - A) by the Faddeev-LeVerrier recursion
// (exact in characteristic zero).
template <class S>
Poly<S> charpoly(const DMat<S>& a) {
    int n = (int)a.rows();
    Poly<S> p;
    p.c.assign(n + 1, S(0));
    p.c[n] = S(1);
    DMat<S> m = DMat<S>::Constant(n, n, S(0));
    S c = S(1);
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i) m(i, i) = m(i, i) + c;
        m = (a * m).eval();
        S tr(0);
        for (int i = 0; i < n; ++i) tr = tr + m(i, i);
        c = S(0) - tr / S(k);
        p.c[n - k] = c;
    }
    return p;
}

}  // namespace diffgal
