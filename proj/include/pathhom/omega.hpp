#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "pathhom/errors.hpp"
#include "pathhom/linalg.hpp"
#include "pathhom/matrix.hpp"
#include "pathhom/model.hpp"
#include "pathhom/ring.hpp"

namespace pathhom {

// A formal linear combination of same-dimension paths.
template <class S>
using FormalSum = std::map<Path, S>;

// Boundary with every non-regular face term deleted. Keys of the result are
// regular (n-1)-paths, not necessarily allowed ones.
template <class S>
FormalSum<S> regular_boundary(const FormalSum<S>& chain) {
    FormalSum<S> out;
    for (const auto& [p, coef] : chain) {
        if (!path_is_regular(p)) throw InvalidInput("regular_boundary: non-regular key");
        if (path_dim(p) == 0) continue;  // d_0 = 0 (non-reduced convention)
        for (const Face& f : boundary_faces(p)) {
            if (!path_is_regular(f.path)) continue;
            if (f.sign > 0)
                out[f.path] += coef;
            else
                out[f.path] -= coef;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = scalar_is_zero(it->second) ? out.erase(it) : std::next(it);
    return out;
}

// The chain complex Omega_*(P; R) in explicit bases:
//   omega_basis[n] : |P_n| x rank expresses the Omega_n basis in P_n coordinates
//   boundary[n]    : rank Omega_{n-1} x rank Omega_n is D_n in those bases
//   admissible[n]  : indices of the P_n paths appearing in some Omega_n element
template <class S>
struct OmegaComplex {
    RingSpec ring;
    PathComplex complex;
    long top_dim = 0;  // highest n with Omega_n computed
    std::vector<Matrix<S>> omega_basis;
    std::vector<Matrix<S>> boundary;
    std::vector<std::vector<long>> admissible;
    // True when Omega_{top_dim+1} is not known to vanish, so boundaries into
    // degree top_dim may be missing from any homology read off this complex.
    bool truncated = false;

    long rank(long n) const {
        return (n >= 0 && n <= top_dim) ? omega_basis[static_cast<std::size_t>(n)].cols() : 0;
    }
};

namespace detail {
template <class S>
inline void check_scalar_matches(const RingSpec&) = delete;
template <>
inline void check_scalar_matches<Int>(const RingSpec& r) {
    if (r.kind != RingKind::Integers)
        throw InternalInconsistency("scalar type Int requires the ring Z");
}
template <>
inline void check_scalar_matches<Rat>(const RingSpec& r) {
    if (r.kind != RingKind::Rationals)
        throw InternalInconsistency("scalar type Rat requires the ring Q");
}
template <>
inline void check_scalar_matches<Fp>(const RingSpec& r) {
    if (r.kind != RingKind::PrimeField)
        throw InternalInconsistency("scalar type Fp requires a prime-field ring");
}
}  // namespace detail

// Builds Omega_n for 0 <= n <= min(top_dim, stored dimensions):
//   - collect the regular faces of all n-paths and split them into allowed
//     (present in P_{n-1}) and forbidden;
//   - Omega_n is the kernel of the forbidden-block boundary matrix
//     (Omega_0 is free on P_0, and at n = 1 the forbidden block is empty);
//   - D_n pushes each basis column through the regular boundary and rewrites
//     it in the Omega_{n-1} basis.
// Verifies D_n D_{n+1} = 0 exactly and that boundaries of basis columns never
// touch a forbidden face; violations are internal-consistency failures.
template <class S>
OmegaComplex<S> build_omega(const PathComplex& pc, const RingSpec& ring, long requested_top) {
    detail::check_scalar_matches<S>(ring);
    if (requested_top < 0) throw InvalidInput("top_dim must be >= 0");
    require_valid(pc);
    if (!pc.regular)
        throw InvalidInput("path homology is defined here only for regular path complexes");

    OmegaComplex<S> oc;
    oc.ring = ring;
    oc.complex = pc;
    const long N = std::min(requested_top, pc.top_dim());
    oc.top_dim = N;
    oc.truncated = (N < pc.top_dim()) || !pc.exhaustive;

    const S one = scalar_one<S>(ring);
    oc.omega_basis.push_back(Matrix<S>::identity(pc.count(0), one));
    oc.boundary.emplace_back(0, pc.count(0));

    for (long n = 1; n <= N; ++n) {
        const auto& level = pc.paths[static_cast<std::size_t>(n)];
        const long an = static_cast<long>(level.size());

        std::set<Path> forbidden_set;
        for (const Path& p : level)
            for (const Face& f : boundary_faces(p))
                if (path_is_regular(f.path) && !pc.contains(n - 1, f.path))
                    forbidden_set.insert(f.path);
        const std::vector<Path> forbidden(forbidden_set.begin(), forbidden_set.end());
        auto forbidden_index = [&forbidden](const Path& p) {
            return static_cast<long>(
                std::lower_bound(forbidden.begin(), forbidden.end(), p) - forbidden.begin());
        };

        Matrix<S> mf(static_cast<long>(forbidden.size()), an);
        for (long j = 0; j < an; ++j)
            for (const Face& f : boundary_faces(level[static_cast<std::size_t>(j)])) {
                if (!path_is_regular(f.path)) continue;
                if (pc.contains(n - 1, f.path)) continue;
                if (f.sign > 0)
                    mf(forbidden_index(f.path), j) += one;
                else
                    mf(forbidden_index(f.path), j) -= one;
            }

        Matrix<S> kern = LinAlgOps<S>::kernel_basis(mf, ring);

        auto solver =
            LinAlgOps<S>::make_solver(oc.omega_basis[static_cast<std::size_t>(n - 1)], ring);
        Matrix<S> d(oc.omega_basis[static_cast<std::size_t>(n - 1)].cols(), kern.cols());
        for (long c = 0; c < kern.cols(); ++c) {
            std::vector<S> allowed_part(static_cast<std::size_t>(pc.count(n - 1)));
            std::vector<S> forbidden_part(forbidden.size());
            for (long j = 0; j < an; ++j) {
                const S& coef = kern(j, c);
                if (scalar_is_zero(coef)) continue;
                for (const Face& f : boundary_faces(level[static_cast<std::size_t>(j)])) {
                    if (!path_is_regular(f.path)) continue;
                    const long idx = pc.index_of(n - 1, f.path);
                    S term = (f.sign > 0) ? coef : S(-coef);
                    if (idx >= 0)
                        allowed_part[static_cast<std::size_t>(idx)] += term;
                    else
                        forbidden_part[static_cast<std::size_t>(forbidden_index(f.path))] += term;
                }
            }
            for (const S& v : forbidden_part)
                if (!scalar_is_zero(v))
                    throw InternalInconsistency(
                        "a kernel element's boundary touched a forbidden face");
            std::vector<S> coords = solver.solve(allowed_part);
            for (long i = 0; i < d.rows(); ++i) d(i, c) = coords[static_cast<std::size_t>(i)];
        }
        oc.omega_basis.push_back(std::move(kern));
        oc.boundary.push_back(std::move(d));
    }

    for (long n = 0; n <= N; ++n) {
        std::vector<long> adm;
        const Matrix<S>& b = oc.omega_basis[static_cast<std::size_t>(n)];
        for (long i = 0; i < b.rows(); ++i)
            for (long j = 0; j < b.cols(); ++j)
                if (!scalar_is_zero(b(i, j))) {
                    adm.push_back(i);
                    break;
                }
        oc.admissible.push_back(std::move(adm));
    }

    for (long n = 1; n + 1 <= N; ++n)
        if (!matmul(oc.boundary[static_cast<std::size_t>(n)],
                    oc.boundary[static_cast<std::size_t>(n + 1)])
                 .is_zero())
            throw ComplexNotExact("D_" + std::to_string(n) + " * D_" + std::to_string(n + 1) +
                                  " != 0");

    return oc;
}

// The admissible n-paths themselves (Def-style view over the index set).
template <class S>
std::vector<Path> admissible_paths(const OmegaComplex<S>& oc, long n) {
    std::vector<Path> out;
    if (n < 0 || n > oc.top_dim) return out;
    for (long i : oc.admissible[static_cast<std::size_t>(n)])
        out.push_back(oc.complex.path_at(n, i));
    return out;
}

}  // namespace pathhom
