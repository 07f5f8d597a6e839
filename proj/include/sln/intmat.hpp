#pragma once

// Exact linear algebra over the integers: dense matrices with
// arbitrary-precision entries, Hermite and Smith normal forms, kernel
// lattices and exact triangular solves.  Everything here is deterministic;
// pivoting strategies are explicit so callers can cross-check basis
// independence.

#include <gmpxx.h>

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sln {

using Int = mpz_class;

class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("IntMatrix: negative dimension");
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int r, int c) {
        assert(0 <= r && r < rows_ && 0 <= c && c < cols_);
        return a_[static_cast<size_t>(r) * cols_ + c];
    }
    const Int& operator()(int r, int c) const {
        assert(0 <= r && r < rows_ && 0 <= c && c < cols_);
        return a_[static_cast<size_t>(r) * cols_ + c];
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const Int& x : a_)
            if (x != 0) return false;
        return true;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
        IntMatrix p(rows_, o.cols_);
        for (int r = 0; r < rows_; ++r)
            for (int k = 0; k < cols_; ++k) {
                const Int& x = (*this)(r, k);
                if (x == 0) continue;
                for (int c = 0; c < o.cols_; ++c) p(r, c) += x * o(k, c);
            }
        return p;
    }

    IntMatrix operator+(const IntMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("IntMatrix: dimension mismatch in sum");
        IntMatrix s(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + o.a_[i];
        return s;
    }

    IntMatrix operator-(const IntMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("IntMatrix: dimension mismatch in difference");
        IntMatrix s(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - o.a_[i];
        return s;
    }

    IntMatrix operator-() const {
        IntMatrix s(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = -a_[i];
        return s;
    }

    IntMatrix scaled(const Int& k) const {
        IntMatrix s(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) s.a_[i] = k * a_[i];
        return s;
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols_; ++c)
            std::swap((*this)(i, c), (*this)(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < rows_; ++r)
            std::swap((*this)(r, i), (*this)(r, j));
    }
    // row i += k * row j
    void add_row(int i, int j, const Int& k) {
        if (k == 0) return;
        for (int c = 0; c < cols_; ++c) (*this)(i, c) += k * (*this)(j, c);
    }
    // col i += k * col j
    void add_col(int i, int j, const Int& k) {
        if (k == 0) return;
        for (int r = 0; r < rows_; ++r) (*this)(r, i) += k * (*this)(r, j);
    }
    void negate_row(int i) {
        for (int c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
    }
    void negate_col(int i) {
        for (int r = 0; r < rows_; ++r) (*this)(r, i) = -(*this)(r, i);
    }

    std::string to_string() const {
        std::string s;
        for (int r = 0; r < rows_; ++r) {
            s += r == 0 ? "[" : " ";
            for (int c = 0; c < cols_; ++c) {
                s += (*this)(r, c).get_str();
                if (c + 1 < cols_) s += " ";
            }
            s += r + 1 < rows_ ? ";\n" : "]";
        }
        return s;
    }

  private:
    int rows_, cols_;
    std::vector<Int> a_;
};

enum class Pivot { MinAbs, FirstNonzero };

// Fraction-free determinant (Bareiss).  Used by the normal-form
// verification hooks; matrices there are small.
inline Int determinant(IntMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
    const int n = m.rows();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (m(r, k) != 0) { p = r; break; }
            if (p < 0) return 0;
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

struct HnfResult {
    IntMatrix h;                  // row-style Hermite normal form, u * m = h
    IntMatrix u;                  // unimodular row transform
    int rank = 0;
    std::vector<int> pivot_cols;  // pivot column of row i, i < rank
};

namespace detail {

// unimodular 2x2 row step on (a, b) with a at the pivot row: sends the
// pair to (gcd, 0); applied simultaneously to a companion matrix
inline void gcd_rows(IntMatrix& m, IntMatrix& u, int pivot_row, int other_row, int col) {
    const Int& a = m(pivot_row, col);
    const Int& b = m(other_row, col);
    if (b == 0) return;
    if (a != 0 && b % a == 0) {
        Int q = b / a;
        m.add_row(other_row, pivot_row, -q);
        u.add_row(other_row, pivot_row, -q);
        return;
    }
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Int af = a / g, bf = b / g;
    for (int c = 0; c < m.cols(); ++c) {
        Int x = m(pivot_row, c), y = m(other_row, c);
        m(pivot_row, c) = s * x + t * y;
        m(other_row, c) = af * y - bf * x;
    }
    for (int c = 0; c < u.cols(); ++c) {
        Int x = u(pivot_row, c), y = u(other_row, c);
        u(pivot_row, c) = s * x + t * y;
        u(other_row, c) = af * y - bf * x;
    }
}

// column version: sends (m(row, pivot_col), m(row, other_col)) to (gcd, 0)
inline void gcd_cols(IntMatrix& m, IntMatrix& v, int pivot_col, int other_col, int row) {
    const Int& a = m(row, pivot_col);
    const Int& b = m(row, other_col);
    if (b == 0) return;
    if (a != 0 && b % a == 0) {
        Int q = b / a;
        m.add_col(other_col, pivot_col, -q);
        v.add_col(other_col, pivot_col, -q);
        return;
    }
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Int af = a / g, bf = b / g;
    for (int r = 0; r < m.rows(); ++r) {
        Int x = m(r, pivot_col), y = m(r, other_col);
        m(r, pivot_col) = s * x + t * y;
        m(r, other_col) = af * y - bf * x;
    }
    for (int r = 0; r < v.rows(); ++r) {
        Int x = v(r, pivot_col), y = v(r, other_col);
        v(r, pivot_col) = s * x + t * y;
        v(r, other_col) = af * y - bf * x;
    }
}

}  // namespace detail

// Row-style HNF: pivots positive, entries above a pivot reduced into
// [0, pivot).  `strategy` picks which row supplies the next pivot among
// candidates; both choices give the same h (HNF is canonical) but a
// different u, which the basis-independence tests exploit.
inline HnfResult hermite_normal_form(const IntMatrix& m, Pivot strategy = Pivot::MinAbs) {
    HnfResult res;
    res.h = m;
    res.u = IntMatrix::identity(m.rows());
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        if (strategy == Pivot::MinAbs) {
            for (int r = row; r < m.rows(); ++r) {
                if (h(r, col) == 0) continue;
                if (p < 0 || mpz_cmpabs(h(r, col).get_mpz_t(), h(p, col).get_mpz_t()) < 0) p = r;
            }
        } else {
            for (int r = row; r < m.rows(); ++r)
                if (h(r, col) != 0) { p = r; break; }
        }
        if (p < 0) continue;  // column is zero below `row`
        h.swap_rows(row, p);
        u.swap_rows(row, p);
        for (int r = row + 1; r < m.rows(); ++r) detail::gcd_rows(h, u, row, r, col);
        if (h(row, col) == 0) continue;
        if (h(row, col) < 0) {
            h.negate_row(row);
            u.negate_row(row);
        }
        // reduce entries above the pivot into [0, pivot)
        for (int r = 0; r < row; ++r) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h(r, col).get_mpz_t(), h(row, col).get_mpz_t());
            h.add_row(r, row, -q);
            u.add_row(r, row, -q);
        }
        res.pivot_cols.push_back(col);
        ++row;
    }
    res.rank = row;
    return res;
}

struct SnfResult {
    IntMatrix u, d, v;          // u * m * v = d
    int rank = 0;
    std::vector<Int> divisors;  // nonzero diagonal entries, d1 | d2 | ...
};

// Smith normal form with minimal-absolute-value pivoting.  u and v are
// unimodular, d is diagonal with a divisibility chain.
inline SnfResult smith_normal_form(const IntMatrix& m) {
    SnfResult res;
    res.d = m;
    res.u = IntMatrix::identity(m.rows());
    res.v = IntMatrix::identity(m.cols());
    IntMatrix& d = res.d;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;
    const int n = std::min(m.rows(), m.cols());
    int t = 0;
    for (; t < n; ++t) {
        // find minimal-absolute nonzero entry in the trailing block
        int pr = -1, pc = -1;
        for (int r = t; r < m.rows(); ++r)
            for (int c = t; c < m.cols(); ++c) {
                if (d(r, c) == 0) continue;
                if (pr < 0 || mpz_cmpabs(d(r, c).get_mpz_t(), d(pr, pc).get_mpz_t()) < 0) {
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0) break;  // trailing block is zero
        d.swap_rows(t, pr);
        u.swap_rows(t, pr);
        d.swap_cols(t, pc);
        v.swap_cols(t, pc);
        // alternate gcd-based row and column clearing; |pivot| weakly
        // decreases across passes, so this terminates
        while (true) {
            for (int r = t + 1; r < m.rows(); ++r) detail::gcd_rows(d, u, t, r, t);
            bool dirty = false;
            for (int c = t + 1; c < m.cols(); ++c) {
                detail::gcd_cols(d, v, t, c, t);
                for (int r = t + 1; r < m.rows(); ++r)
                    if (d(r, t) != 0) dirty = true;
            }
            if (!dirty) break;
        }
        if (d(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    res.rank = t;
    // enforce the divisibility chain on the diagonal: for a pair (a, b)
    // with a not dividing b, fold column j into column i and redo a 2x2
    // gcd step, turning the pair into (gcd, +-lcm)
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i + 1 < t; ++i)
            for (int j = i + 1; j < t; ++j) {
                if (d(j, j) % d(i, i) == 0) continue;
                d.add_col(i, j, 1);
                v.add_col(i, j, 1);
                detail::gcd_rows(d, u, i, j, i);
                detail::gcd_cols(d, v, i, j, i);
                // the row step may have left a stray entry at (i, j)
                while (d(i, j) != 0 || d(j, i) != 0) {
                    detail::gcd_rows(d, u, i, j, i);
                    detail::gcd_cols(d, v, i, j, i);
                }
                if (d(i, i) < 0) { d.negate_row(i); u.negate_row(i); }
                if (d(j, j) < 0) { d.negate_row(j); u.negate_row(j); }
                changed = true;
            }
    }
    for (int i = 0; i < t; ++i) res.divisors.push_back(d(i, i));
    return res;
}

// Debug-mode contract of smith_normal_form: u m v = d, unimodularity,
// divisibility chain.
inline bool snf_verify(const IntMatrix& m, const SnfResult& s) {
    if (s.u * m * s.v != s.d) return false;
    Int du = determinant(s.u), dv = determinant(s.v);
    if (du != 1 && du != -1) return false;
    if (dv != 1 && dv != -1) return false;
    for (int r = 0; r < s.d.rows(); ++r)
        for (int c = 0; c < s.d.cols(); ++c)
            if (r != c && s.d(r, c) != 0) return false;
    for (size_t i = 0; i + 1 < s.divisors.size(); ++i) {
        if (s.divisors[i] <= 0) return false;
        if (s.divisors[i + 1] % s.divisors[i] != 0) return false;
    }
    return true;
}

inline SnfResult smith_normal_form_checked(const IntMatrix& m) {
    SnfResult s = smith_normal_form(m);
#ifndef NDEBUG
    assert(snf_verify(m, s));
#endif
    return s;
}

// Basis of the kernel lattice { x : m x = 0 }, returned as matrix columns.
// The rows of u beyond rank(h) in u * m^T = h are exactly a basis of the
// left kernel of m^T, i.e. of ker m; the lattice they span is saturated.
inline IntMatrix kernel_basis(const IntMatrix& m) {
    HnfResult hn = hermite_normal_form(m.transpose());
    const int n = m.cols();
    const int k = n - hn.rank;
    IntMatrix ker(n, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) ker(i, j) = hn.u(hn.rank + j, i);
    return ker;
}

// Exact solve k x = b for a matrix k with full column rank whose columns
// span a saturated lattice containing the columns of b.  Throws if b is
// not in the column span.
inline IntMatrix solve_in_lattice(const IntMatrix& k, const IntMatrix& b) {
    if (k.rows() != b.rows()) throw std::invalid_argument("solve_in_lattice: dimension mismatch");
    HnfResult hn = hermite_normal_form(k);
    if (hn.rank != k.cols()) throw std::invalid_argument("solve_in_lattice: columns not independent");
    IntMatrix ub = hn.u * b;
    for (int r = hn.rank; r < ub.rows(); ++r)
        for (int c = 0; c < ub.cols(); ++c)
            if (ub(r, c) != 0) throw std::invalid_argument("solve_in_lattice: rhs outside column span");
    // back substitution against the upper-triangular top block of h
    IntMatrix x(k.cols(), b.cols());
    for (int c = 0; c < b.cols(); ++c)
        for (int r = hn.rank - 1; r >= 0; --r) {
            Int acc = ub(r, c);
            for (int j = r + 1; j < hn.rank; ++j) acc -= hn.h(r, hn.pivot_cols[j]) * x(j, c);
            int pc = hn.pivot_cols[r];
            if (acc % hn.h(r, pc) != 0)
                throw std::invalid_argument("solve_in_lattice: non-integral solution");
            x(r, c) = acc / hn.h(r, pc);
        }
    return x;
}

inline int rank_of(const IntMatrix& m) { return hermite_normal_form(m).rank; }

}  // namespace sln
