#pragma once

#include <map>
#include <vector>

#include "pathhom/errors.hpp"
#include "pathhom/matrix.hpp"
#include "pathhom/ring.hpp"

namespace pathhom {

// ---------------------------------------------------------------------------
// Integer (Z) linear algebra.
//
// Everything is built on a column Hermite normal form computed by unimodular
// column operations: a * u == h, where u is unimodular and h is in column
// echelon form with positive pivots. Because u is unimodular, the columns of u
// that map to zero columns of h are a basis of the full integer kernel
// lattice, which is automatically saturated (a direct summand of Z^n).
// ---------------------------------------------------------------------------

struct ColumnEchelon {
    Matrix<Int> h;                 // column echelon form, a * u == h
    Matrix<Int> u;                 // unimodular transform
    std::vector<long> pivot_rows;  // pivot of column i sits at (pivot_rows[i], i)
    long rank = 0;                 // number of pivot columns
};

// Column Hermite normal form. Pivot selection: smallest absolute value in the
// active row, ties broken by smallest column index. Pivots are normalized
// positive and entries left of a pivot are reduced into [0, pivot).
ColumnEchelon column_hermite(const Matrix<Int>& a);

// Basis of {x in Z^n : a x = 0} as matrix columns; saturated by construction.
Matrix<Int> kernel_basis_int(const Matrix<Int>& a);

long rank_int(const Matrix<Int>& a);

// All nonzero invariant factors d_1 | d_2 | ... | d_r of a (so r = rank),
// each >= 1, computed by Smith diagonalization plus a gcd/lcm divisibility
// sweep on the diagonal.
std::vector<Int> smith_invariant_factors(const Matrix<Int>& a);

// Solve basis * x = target exactly over Z. Throws NotInSpan if the target is
// not an integer combination of the basis columns.
std::vector<Int> solve_in_span_int(const Matrix<Int>& basis, const std::vector<Int>& target);

// Same solve against a fixed basis, factored once and reused across targets.
class SpanSolverInt {
  public:
    explicit SpanSolverInt(const Matrix<Int>& basis);
    std::vector<Int> solve(const std::vector<Int>& target) const;

  private:
    ColumnEchelon e_;
    long rows_ = 0;
};

// ---------------------------------------------------------------------------
// Field linear algebra (Q and Z_p), same contracts via Gaussian elimination.
// The multiplicative identity is passed explicitly so Fp knows its modulus.
// ---------------------------------------------------------------------------

template <class F>
struct ColumnEchelonF {
    Matrix<F> h;
    Matrix<F> u;
    std::vector<long> pivot_rows;
    long rank = 0;
};

template <class F>
ColumnEchelonF<F> column_echelon_field(const Matrix<F>& a, const F& one) {
    ColumnEchelonF<F> e{a, Matrix<F>::identity(a.cols(), one), {}, 0};
    long c = 0;
    for (long r = 0; r < a.rows() && c < a.cols(); ++r) {
        long piv = -1;
        for (long j = c; j < e.h.cols(); ++j) {
            if (!scalar_is_zero(e.h(r, j))) {
                piv = j;
                break;
            }
        }
        if (piv < 0) continue;
        e.h.swap_cols(c, piv);
        e.u.swap_cols(c, piv);
        for (long j = c + 1; j < e.h.cols(); ++j) {
            if (scalar_is_zero(e.h(r, j))) continue;
            F coef = e.h(r, j) / e.h(r, c);
            for (long i = r; i < e.h.rows(); ++i) e.h(i, j) -= coef * e.h(i, c);
            for (long i = 0; i < e.u.rows(); ++i) e.u(i, j) -= coef * e.u(i, c);
        }
        e.pivot_rows.push_back(r);
        ++c;
    }
    e.rank = c;
    return e;
}

template <class F>
long rank_field(const Matrix<F>& a, const F& one) {
    return column_echelon_field(a, one).rank;
}

template <class F>
Matrix<F> kernel_basis_field(const Matrix<F>& a, const F& one) {
    ColumnEchelonF<F> e = column_echelon_field(a, one);
    Matrix<F> k(a.cols(), a.cols() - e.rank);
    for (long j = e.rank; j < a.cols(); ++j)
        for (long i = 0; i < a.cols(); ++i) k(i, j - e.rank) = e.u(i, j);
    return k;
}

// Fixed-basis solver over a field; factors once, solves many targets.
template <class F>
class SpanSolverField {
  public:
    SpanSolverField(const Matrix<F>& basis, const F& one)
        : e_(column_echelon_field(basis, one)), rows_(basis.rows()) {}

    std::vector<F> solve(const std::vector<F>& target) const {
        if (static_cast<long>(target.size()) != rows_)
            throw InternalInconsistency("solve_in_span_field: dimension mismatch");
        std::vector<F> y(static_cast<std::size_t>(e_.h.cols()));
        std::vector<F> resid = target;
        for (long i = 0; i < e_.rank; ++i) {
            long r = e_.pivot_rows[static_cast<std::size_t>(i)];
            if (scalar_is_zero(resid[static_cast<std::size_t>(r)])) continue;
            F q = resid[static_cast<std::size_t>(r)] / e_.h(r, i);
            y[static_cast<std::size_t>(i)] = q;
            for (long k = 0; k < rows_; ++k) resid[static_cast<std::size_t>(k)] -= q * e_.h(k, i);
        }
        for (const F& v : resid)
            if (!scalar_is_zero(v)) throw NotInSpan("solve_in_span_field: target not in span");
        return matvec(e_.u, y);
    }

  private:
    ColumnEchelonF<F> e_;
    long rows_ = 0;
};

template <class F>
std::vector<F> solve_in_span_field(const Matrix<F>& basis, const std::vector<F>& target,
                                   const F& one) {
    return SpanSolverField<F>(basis, one).solve(target);
}

// ---------------------------------------------------------------------------
// Ring-generic dispatch used by the templated chain-complex builders.
// The primary template covers fields; Int is specialized to the exact lattice
// routines above.
// ---------------------------------------------------------------------------

template <class S>
struct LinAlgOps {
    using Solver = SpanSolverField<S>;
    static Matrix<S> kernel_basis(const Matrix<S>& a, const RingSpec& ring) {
        return kernel_basis_field(a, scalar_one<S>(ring));
    }
    static std::vector<S> solve_in_span(const Matrix<S>& basis, const std::vector<S>& target,
                                        const RingSpec& ring) {
        return solve_in_span_field(basis, target, scalar_one<S>(ring));
    }
    static Solver make_solver(const Matrix<S>& basis, const RingSpec& ring) {
        return Solver(basis, scalar_one<S>(ring));
    }
    static long rank(const Matrix<S>& a, const RingSpec& ring) {
        return rank_field(a, scalar_one<S>(ring));
    }
};

template <>
struct LinAlgOps<Int> {
    using Solver = SpanSolverInt;
    static Matrix<Int> kernel_basis(const Matrix<Int>& a, const RingSpec&) {
        return kernel_basis_int(a);
    }
    static std::vector<Int> solve_in_span(const Matrix<Int>& basis, const std::vector<Int>& target,
                                          const RingSpec&) {
        return solve_in_span_int(basis, target);
    }
    static Solver make_solver(const Matrix<Int>& basis, const RingSpec&) {
        return SpanSolverInt(basis);
    }
    static long rank(const Matrix<Int>& a, const RingSpec&) { return rank_int(a); }
};

// ---------------------------------------------------------------------------
// Incremental sparse echelon over a field: rank of a large sparse matrix by
// inserting one sparse vector at a time. Rows are keyed by pivot index and
// normalized to leading coefficient 1.
// ---------------------------------------------------------------------------

inline Rat field_inverse(const Rat& x) { return Rat(1) / x; }
inline Fp field_inverse(const Fp& x) { return x.inverse(); }

template <class F>
class SparseEchelon {
  public:
    // Returns true if the vector was independent of the rows seen so far.
    bool insert(SparseVec<F> v) {
        while (!v.empty()) {
            const long piv = v.front().first;
            auto it = rows_.find(piv);
            if (it == rows_.end()) {
                F inv = field_inverse(v.front().second);
                for (auto& e : v) e.second = e.second * inv;
                rows_.emplace(piv, std::move(v));
                return true;
            }
            F neg_lead = -v.front().second;
            v = sparse_axpy(v, neg_lead, it->second);
        }
        return false;
    }

    long rank() const { return static_cast<long>(rows_.size()); }

  private:
    std::map<long, SparseVec<F>> rows_;
};

template <class F>
long sparse_rank(const std::vector<SparseVec<F>>& vectors) {
    SparseEchelon<F> ech;
    long r = 0;
    for (const auto& v : vectors)
        if (ech.insert(v)) ++r;
    return r;
}

}  // namespace pathhom
