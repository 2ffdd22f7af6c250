#include "pathhom/linalg.hpp"

namespace pathhom {

namespace {

Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Floor quotient, used only to normalize already-pivoted rows into [0, pivot).
Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void add_col_multiple(Matrix<Int>& m, long dst, long src, const Int& c) {
    if (sgn(c) == 0) return;
    for (long i = 0; i < m.rows(); ++i) m(i, dst) += c * m(i, src);
}

void negate_col(Matrix<Int>& m, long j) {
    for (long i = 0; i < m.rows(); ++i) m(i, j) = -m(i, j);
}

}  // namespace

ColumnEchelon column_hermite(const Matrix<Int>& a) {
    ColumnEchelon e{a, Matrix<Int>::identity(a.cols(), Int(1)), {}, 0};
    Matrix<Int>& h = e.h;
    Matrix<Int>& u = e.u;
    const long n = a.cols();
    long c = 0;
    for (long r = 0; r < a.rows() && c < n; ++r) {
        // Euclid descent across the active columns of row r.
        while (true) {
            long best = -1;
            for (long j = c; j < n; ++j) {
                if (sgn(h(r, j)) == 0) continue;
                if (best < 0 || abs(h(r, j)) < abs(h(r, best))) best = j;
            }
            if (best < 0) break;  // row has no pivot among active columns
            h.swap_cols(c, best);
            u.swap_cols(c, best);
            bool residue = false;
            for (long j = c + 1; j < n; ++j) {
                if (sgn(h(r, j)) == 0) continue;
                Int q = h(r, j) / h(r, c);  // truncated division
                add_col_multiple(h, j, c, -q);
                add_col_multiple(u, j, c, -q);
                if (sgn(h(r, j)) != 0) residue = true;
            }
            if (!residue) break;
        }
        if (c < n && sgn(h(r, c)) != 0) {
            if (sgn(h(r, c)) < 0) {
                negate_col(h, c);
                negate_col(u, c);
            }
            // Normalize earlier columns of this pivot row into [0, pivot).
            for (long j = 0; j < c; ++j) {
                if (sgn(h(r, j)) == 0) continue;
                Int q = floor_div(h(r, j), h(r, c));
                add_col_multiple(h, j, c, -q);
                add_col_multiple(u, j, c, -q);
            }
            e.pivot_rows.push_back(r);
            ++c;
        }
    }
    e.rank = c;
    return e;
}

Matrix<Int> kernel_basis_int(const Matrix<Int>& a) {
    ColumnEchelon e = column_hermite(a);
    Matrix<Int> k(a.cols(), a.cols() - e.rank);
    for (long j = e.rank; j < a.cols(); ++j)
        for (long i = 0; i < a.cols(); ++i) k(i, j - e.rank) = e.u(i, j);
    return k;
}

long rank_int(const Matrix<Int>& a) { return column_hermite(a).rank; }

std::vector<Int> smith_invariant_factors(const Matrix<Int>& a_in) {
    Matrix<Int> a = a_in;
    const long m = a.rows(), n = a.cols();
    long t = 0;
    while (t < m && t < n) {
        // Global smallest-magnitude pivot in the trailing submatrix.
        long bi = -1, bj = -1;
        for (long i = t; i < m; ++i)
            for (long j = t; j < n; ++j) {
                if (sgn(a(i, j)) == 0) continue;
                if (bi < 0 || abs(a(i, j)) < abs(a(bi, bj))) {
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) break;  // trailing submatrix is zero
        a.swap_rows(t, bi);
        a.swap_cols(t, bj);
        while (true) {
            // Clear column t below the pivot with row operations.
            bool col_clear = false;
            while (!col_clear) {
                long best = t;
                for (long i = t + 1; i < m; ++i)
                    if (sgn(a(i, t)) != 0 &&
                        (sgn(a(best, t)) == 0 || abs(a(i, t)) < abs(a(best, t))))
                        best = i;
                a.swap_rows(t, best);
                col_clear = true;
                for (long i = t + 1; i < m; ++i) {
                    if (sgn(a(i, t)) == 0) continue;
                    Int q = a(i, t) / a(t, t);
                    for (long j = t; j < n; ++j) a(i, j) -= q * a(t, j);
                    if (sgn(a(i, t)) != 0) col_clear = false;
                }
            }
            // Clear row t right of the pivot with column operations.
            bool row_clear = false;
            while (!row_clear) {
                long best = t;
                for (long j = t + 1; j < n; ++j)
                    if (sgn(a(t, j)) != 0 &&
                        (sgn(a(t, best)) == 0 || abs(a(t, j)) < abs(a(t, best))))
                        best = j;
                a.swap_cols(t, best);
                row_clear = true;
                for (long j = t + 1; j < n; ++j) {
                    if (sgn(a(t, j)) == 0) continue;
                    Int q = a(t, j) / a(t, t);
                    for (long i = t; i < m; ++i) a(i, j) -= q * a(i, t);
                    if (sgn(a(t, j)) != 0) row_clear = false;
                }
            }
            // Column swaps during row clearing may have re-dirtied column t.
            bool dirty = false;
            for (long i = t + 1; i < m; ++i)
                if (sgn(a(i, t)) != 0) dirty = true;
            if (!dirty) break;
        }
        ++t;
    }
    std::vector<Int> d;
    for (long i = 0; i < t; ++i)
        if (sgn(a(i, i)) != 0) d.push_back(abs(a(i, i)));
    // Enforce the divisibility chain d_1 | d_2 | ... by pairwise gcd/lcm.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < d.size(); ++i)
            for (std::size_t j = i + 1; j < d.size(); ++j) {
                if (d[j] % d[i] == 0) continue;
                Int g = int_gcd(d[i], d[j]);
                Int l = d[i] / g * d[j];
                d[i] = g;
                d[j] = l;
                changed = true;
            }
    }
    return d;
}

SpanSolverInt::SpanSolverInt(const Matrix<Int>& basis)
    : e_(column_hermite(basis)), rows_(basis.rows()) {}

std::vector<Int> SpanSolverInt::solve(const std::vector<Int>& target) const {
    if (static_cast<long>(target.size()) != rows_)
        throw InternalInconsistency("solve_in_span_int: dimension mismatch");
    std::vector<Int> y(static_cast<std::size_t>(e_.h.cols()));
    std::vector<Int> resid = target;
    for (long i = 0; i < e_.rank; ++i) {
        const long r = e_.pivot_rows[i];
        if (sgn(resid[r]) == 0) continue;
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), resid[r].get_mpz_t(), e_.h(r, i).get_mpz_t());
        if (sgn(rem) != 0) throw NotInSpan("solve_in_span_int: non-integral coordinate");
        y[i] = q;
        for (long k = 0; k < rows_; ++k) resid[k] -= q * e_.h(k, i);
    }
    for (const Int& v : resid)
        if (sgn(v) != 0) throw NotInSpan("solve_in_span_int: target not in span");
    return matvec(e_.u, y);
}

std::vector<Int> solve_in_span_int(const Matrix<Int>& basis, const std::vector<Int>& target) {
    return SpanSolverInt(basis).solve(target);
}

}  // namespace pathhom
