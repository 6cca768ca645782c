#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace critmon {

using Int = mpz_class;

/// Dense matrix over the integers, exact arithmetic throughout.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("IntMatrix: dimensions must be >= 1");
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows) {
        if (rows.empty() || rows.front().empty())
            throw std::invalid_argument("IntMatrix: dimensions must be >= 1");
        IntMatrix m(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols())
                throw std::invalid_argument("IntMatrix: ragged row data");
            for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::vector<Int> row(std::size_t i) const {
        std::vector<Int> r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
        return r;
    }

    std::vector<Int> col(std::size_t j) const {
        std::vector<Int> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
        return c;
    }

    IntMatrix operator*(const IntMatrix& other) const {
        if (cols_ != other.rows_)
            throw std::invalid_argument("IntMatrix: dimension mismatch in product");
        IntMatrix p(rows_, other.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = at(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < other.cols_; ++j)
                    p.at(i, j) += a * other.at(k, j);
            }
        return p;
    }

    bool operator==(const IntMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
    }

    /// Submatrix dropping one row and one column.
    IntMatrix minor_matrix(std::size_t drop_row, std::size_t drop_col) const {
        if (rows_ < 2 || cols_ < 2)
            throw std::invalid_argument("IntMatrix: minor of a 1-dimensional matrix");
        IntMatrix m(rows_ - 1, cols_ - 1);
        for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
            if (i == drop_row) continue;
            for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
                if (j == drop_col) continue;
                m.at(mi, mj) = at(i, j);
                ++mj;
            }
            ++mi;
        }
        return m;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> entries_;
};

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...,
/// nonzero factors positive, zero factors trailing.
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix V;
    IntMatrix V_inverse;
    IntMatrix D;
    std::vector<Int> invariant_factors;

    std::size_t rank() const {
        std::size_t r = 0;
        for (const Int& d : invariant_factors)
            if (d != 0) ++r;
        return r;
    }
};

namespace detail {

inline void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

inline void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[a] += q * row[b]
inline void add_row(IntMatrix& m, std::size_t a, std::size_t b, const Int& q) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) += q * m.at(b, j);
}

// col[a] += q * col[b]
inline void add_col(IntMatrix& m, std::size_t a, std::size_t b, const Int& q) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) += q * m.at(i, b);
}

inline void negate_row(IntMatrix& m, std::size_t a) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

inline void negate_col(IntMatrix& m, std::size_t a) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, a) = -m.at(i, a);
}

}  // namespace detail

/// Smith normal form with transformation matrices. Pivot selection takes the
/// entry of minimal absolute value in the remaining submatrix, which keeps
/// intermediate entries small in practice.
inline SmithDecomposition smith_normal_form(const IntMatrix& M) {
    const std::size_t r = M.rows(), c = M.cols();
    SmithDecomposition s{IntMatrix::identity(r), IntMatrix::identity(c),
                         IntMatrix::identity(c), M, {}};
    IntMatrix& W = s.D;

    const std::size_t steps = r < c ? r : c;
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // minimal-absolute-value pivot in W[t.., t..]
            std::size_t pi = t, pj = t;
            bool found = false;
            for (std::size_t i = t; i < r; ++i)
                for (std::size_t j = t; j < c; ++j) {
                    const Int& e = W.at(i, j);
                    if (e == 0) continue;
                    if (!found || mpz_cmpabs(e.get_mpz_t(), W.at(pi, pj).get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            if (!found) {
                // remaining submatrix is zero; trailing factors are 0
                for (std::size_t k = t; k < steps; ++k) s.invariant_factors.push_back(0);
                goto done;
            }
            detail::swap_rows(W, t, pi);
            detail::swap_rows(s.U, t, pi);
            detail::swap_cols(W, t, pj);
            detail::swap_cols(s.V, t, pj);
            detail::swap_rows(s.V_inverse, t, pj);

            bool dirty = false;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (W.at(i, t) == 0) continue;
                Int q = W.at(i, t) / W.at(t, t);  // truncated division
                if (q != 0) {
                    detail::add_row(W, i, t, -q);
                    detail::add_row(s.U, i, t, -q);
                }
                if (W.at(i, t) != 0) dirty = true;  // nonzero remainder, smaller pivot exists
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (W.at(t, j) == 0) continue;
                Int q = W.at(t, j) / W.at(t, t);
                if (q != 0) {
                    detail::add_col(W, j, t, -q);
                    detail::add_col(s.V, j, t, -q);
                    detail::add_row(s.V_inverse, t, j, q);
                }
                if (W.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            // pivot must divide every entry of the trailing block for the chain
            bool chain_ok = true;
            for (std::size_t i = t + 1; i < r && chain_ok; ++i)
                for (std::size_t j = t + 1; j < c; ++j)
                    if (W.at(i, j) % W.at(t, t) != 0) {
                        detail::add_row(W, t, i, 1);
                        detail::add_row(s.U, t, i, 1);
                        chain_ok = false;
                        break;
                    }
            if (chain_ok) break;
        }
        if (W.at(t, t) < 0) {
            detail::negate_col(W, t);
            detail::negate_col(s.V, t);
            detail::negate_row(s.V_inverse, t);
        }
        s.invariant_factors.push_back(W.at(t, t));
    }
done:
    return s;
}

/// True iff v is an integer combination of the rows of M.
inline bool row_lattice_contains(const SmithDecomposition& snf, const std::vector<Int>& v) {
    const std::size_t c = snf.V.rows();
    if (v.size() != c)
        throw std::invalid_argument("row_lattice_contains: vector length != matrix columns");
    // v lies in the row lattice iff (v * V)_i is a multiple of d_i for all i,
    // where d_i = 0 past min(rows, cols).
    for (std::size_t j = 0; j < c; ++j) {
        Int w = 0;
        for (std::size_t k = 0; k < c; ++k) w += v[k] * snf.V.at(k, j);
        const Int d = j < snf.invariant_factors.size() ? snf.invariant_factors[j] : Int(0);
        if (d == 0) {
            if (w != 0) return false;
        } else if (w % d != 0) {
            return false;
        }
    }
    return true;
}

inline bool row_lattice_contains(const IntMatrix& M, const std::vector<Int>& v) {
    return row_lattice_contains(smith_normal_form(M), v);
}

inline std::size_t rank(const IntMatrix& M) { return smith_normal_form(M).rank(); }

/// Exact determinant, Bareiss fraction-free elimination.
inline Int determinant(const IntMatrix& M) {
    if (M.rows() != M.cols())
        throw std::invalid_argument("determinant: matrix must be square");
    const std::size_t n = M.rows();
    IntMatrix W = M;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (W.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && W.at(p, k) == 0) ++p;
            if (p == n) return 0;
            detail::swap_rows(W, k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                W.at(i, j) = W.at(i, j) * W.at(k, k) - W.at(i, k) * W.at(k, j);
                W.at(i, j) /= prev;  // exact by Bareiss
            }
        prev = W.at(k, k);
    }
    return sign > 0 ? W.at(n - 1, n - 1) : Int(-W.at(n - 1, n - 1));
}

}  // namespace critmon
