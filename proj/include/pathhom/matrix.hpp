#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pathhom/errors.hpp"
#include "pathhom/ring.hpp"

namespace pathhom {

// Dense matrix over an exact scalar type (Int, Rat, or Fp). The boundary and
// basis matrices this library manipulates are small (at most a few thousand
// entries per side), so a dense representation keeps the normal-form algorithms
// simple; the genuinely large Hochschild matrices use the sparse row type below.
template <class S>
class Matrix {
  public:
    Matrix() = default;
    Matrix(long rows, long cols)
        : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    long rows() const { return r_; }
    long cols() const { return c_; }

    S& operator()(long i, long j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const S& operator()(long i, long j) const {
        return a_[static_cast<std::size_t>(i) * c_ + j];
    }

    static Matrix identity(long n, const S& one) {
        Matrix m(n, n);
        for (long i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    Matrix transposed() const {
        Matrix t(c_, r_);
        for (long i = 0; i < r_; ++i)
            for (long j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        for (const S& x : a_)
            if (!scalar_is_zero(x)) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
    }

    void swap_rows(long i, long j) {
        if (i == j) return;
        for (long k = 0; k < c_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(long i, long j) {
        if (i == j) return;
        for (long k = 0; k < r_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }

    std::vector<S> column(long j) const {
        std::vector<S> v(r_);
        for (long i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }

  private:
    long r_ = 0, c_ = 0;
    std::vector<S> a_;
};

template <class S>
Matrix<S> matmul(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.cols() != b.rows())
        throw InternalInconsistency("matmul: inner dimensions disagree");
    Matrix<S> c(a.rows(), b.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long k = 0; k < a.cols(); ++k) {
            const S& aik = a(i, k);
            if (scalar_is_zero(aik)) continue;
            for (long j = 0; j < b.cols(); ++j) {
                const S& bkj = b(k, j);
                if (!scalar_is_zero(bkj)) c(i, j) += aik * bkj;
            }
        }
    return c;
}

template <class S>
std::vector<S> matvec(const Matrix<S>& a, const std::vector<S>& x) {
    if (a.cols() != static_cast<long>(x.size()))
        throw InternalInconsistency("matvec: dimension mismatch");
    std::vector<S> y(a.rows());
    for (long j = 0; j < a.cols(); ++j) {
        if (scalar_is_zero(x[j])) continue;
        for (long i = 0; i < a.rows(); ++i) {
            const S& aij = a(i, j);
            if (!scalar_is_zero(aij)) y[i] += aij * x[j];
        }
    }
    return y;
}

// Coefficient-wise image of an integer matrix in another ring.
template <class S>
Matrix<S> matrix_from_int(const Matrix<Int>& m, const RingSpec& ring) {
    Matrix<S> out(m.rows(), m.cols());
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j)
            if (!scalar_is_zero(m(i, j)))
                out(i, j) = scalar_from_int<S>(m(i, j), ring);
    return out;
}

// Sparse vector: sorted (index, nonzero coefficient) pairs. Used for the
// Hochschild complexes, whose modules are far too large to hold densely.
template <class S>
using SparseVec = std::vector<std::pair<long, S>>;

// c1*u + c2*v for sorted sparse vectors, dropping cancellations.
template <class S>
SparseVec<S> sparse_axpy(const SparseVec<S>& u, const S& c2, const SparseVec<S>& v) {
    SparseVec<S> out;
    out.reserve(u.size() + v.size());
    std::size_t i = 0, j = 0;
    while (i < u.size() || j < v.size()) {
        if (j >= v.size() || (i < u.size() && u[i].first < v[j].first)) {
            out.push_back(u[i++]);
        } else if (i >= u.size() || v[j].first < u[i].first) {
            S val = c2 * v[j].second;
            if (!scalar_is_zero(val)) out.emplace_back(v[j].first, std::move(val));
            ++j;
        } else {
            S val = u[i].second + c2 * v[j].second;
            if (!scalar_is_zero(val)) out.emplace_back(u[i].first, std::move(val));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace pathhom
