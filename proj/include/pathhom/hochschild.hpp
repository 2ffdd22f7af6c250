#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pathhom/homology.hpp"
#include "pathhom/model.hpp"
#include "pathhom/ring.hpp"

namespace pathhom {

// ---------------------------------------------------------------------------
// Cubical digraph of a simplicial complex: one vertex per simplex, labeled by
// the simplex's vertex labels joined with '|', and an edge s -> t exactly when
// s contains t with dim(s) = dim(t) + 1.
// ---------------------------------------------------------------------------
Digraph cubical_digraph(const SimplicialComplex& sc);

// ---------------------------------------------------------------------------
// Incidence algebra of the face poset: basis elements are the pairs (s, t) of
// simplices with s >= t (reflexive pairs included so the algebra is unital;
// the unit is the sum of all (s, s)), multiplied by composition:
//   (s1, t1) * (s2, t2) = (s1, t2) if t1 == s2, else 0.
// Every structure constant is 0 or 1, so products of basis elements are
// returned as a basis index or -1 for zero.
// ---------------------------------------------------------------------------
struct IncidenceAlgebra {
    SimplicialComplex complex;

    // Flat simplex ids enumerate dimensions ascending, index ascending.
    std::vector<std::pair<long, long>> flat;  // flat id -> (dim, index)
    long flat_count = 0;

    std::vector<std::pair<long, long>> basis;  // basis idx -> (upper, lower) flat ids
    std::vector<long> unit_terms;              // basis indices of the reflexive pairs

    long dim() const { return static_cast<long>(basis.size()); }

    // Basis index of the pair (upper, lower), or -1 when lower is not a face
    // of upper.
    long pair_index(long upper, long lower) const {
        return pair_table_[static_cast<std::size_t>(upper * flat_count + lower)];
    }

    // Basis index of e_i * e_j, or -1 for the zero product.
    long multiply(long i, long j) const;

    std::string basis_label(long i) const;  // "(s|t, u)" for diagnostics

    std::vector<long> pair_table_;  // flat_count^2, filled by incidence_algebra
};

IncidenceAlgebra incidence_algebra(const SimplicialComplex& sc);

// Coefficient bimodule for the Hochschild complexes. Only these two fixed
// modes exist:
//   Regular: M = A, both actions by multiplication in A.
//   Dual:    M = A^* with (a.f)(x) = f(xa) and (f.a)(x) = f(ax); on dual basis
//            vectors both actions again send basis to basis-or-zero.
enum class HHCoefficients { Regular, Dual };

// ---------------------------------------------------------------------------
// Truncated-degree Hochschild homology of the bar-type complex
//   C_n = M (x) A^{(x)n},
//   d_n(m (x) a_1 ... a_n) = m.a_1 (x) a_2 ... a_n
//       + sum_{i=1}^{n-1} (-1)^i m (x) a_1 ... (a_i a_{i+1}) ... a_n
//       + (-1)^n a_n.m (x) a_1 ... a_{n-1},
// and of the cochain complex C^n = Hom(A^{(x)n}, M) with the standard unital
// coboundary. Matrices are assembled sparsely and ranks taken over the field;
// d.d = 0 (resp. delta.delta = 0) is verified exactly on every assembled
// level. Degrees 0..max_deg-1 are exact; degree max_deg is reported from the
// available differentials only and flagged truncated.
//
// ring must be a field (Q or Z_p); UnsupportedRing otherwise. The chain space
// sizes are pre-checked: dim(A)^(max_deg+1) <= budget or BudgetExceeded.
// ---------------------------------------------------------------------------
HomologyResult hochschild_homology(const IncidenceAlgebra& alg, const RingSpec& ring,
                                   long max_deg, HHCoefficients coef, long long budget);
HomologyResult hochschild_cohomology(const IncidenceAlgebra& alg, const RingSpec& ring,
                                     long max_deg, HHCoefficients coef, long long budget);

// Independent degree-0 cross-checks (field ring required):
// dimension of the center {x : xb = bx for every basis b} ...
long center_dimension(const IncidenceAlgebra& alg, const RingSpec& ring);
// ... and of the commutator quotient A/[A,A].
long commutator_quotient_dimension(const IncidenceAlgebra& alg, const RingSpec& ring);

// ---------------------------------------------------------------------------
// Three-pipeline comparison for a simplicial complex S over a field:
//   homology rows:   simplicial H_n(S)  vs path H_n(P(G_S))  vs HH_n(A_S, A*)
//   cohomology rows: simplicial H^n(S)  vs path H^n(P(G_S))  vs HH^n(A_S, A)
// Degrees 0..max_deg-1 (the Hochschild-exact range) are compared.
// ---------------------------------------------------------------------------
struct HochschildDegree {
    long degree = 0;
    std::string simplicial, path, hochschild;
    bool equal = false;
};

struct HochschildReport {
    RingSpec ring;
    long algebra_dim = 0;
    std::vector<HochschildDegree> homology;
    std::vector<HochschildDegree> cohomology;
    std::vector<std::string> notes;

    bool all_equal() const {
        for (const auto& r : homology)
            if (!r.equal) return false;
        for (const auto& r : cohomology)
            if (!r.equal) return false;
        return true;
    }
};

HochschildReport verify_hochschild_comparison(const SimplicialComplex& sc, const RingSpec& ring,
                                              long max_deg, long long budget);

}  // namespace pathhom
