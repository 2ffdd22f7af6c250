#pragma once

#include <string>
#include <vector>

#include "pathhom/fg_group.hpp"
#include "pathhom/linalg.hpp"
#include "pathhom/matrix.hpp"
#include "pathhom/model.hpp"
#include "pathhom/ring.hpp"

namespace pathhom {

// Homology (or cohomology) groups per degree. Over a field each group is a
// dimension (rank field of FgAbelianGroup, empty torsion).
struct HomologyResult {
    RingSpec ring;
    std::vector<FgAbelianGroup> groups;  // degree n = 0 .. top_dim
    // Degree whose group may be under-reported because boundaries from one
    // dimension higher were not computed (complex truncation); -1 if none.
    long truncated_at = -1;

    long top_dim() const { return static_cast<long>(groups.size()) - 1; }
    const FgAbelianGroup& group(long n) const { return groups[static_cast<std::size_t>(n)]; }
    std::string group_string(long n) const { return fg_to_string(group(n), ring); }
};

// Homology of a complex of free Z-modules given by boundary matrices
// (d[n] maps degree n to degree n-1; d[0] must have zero rows), with
// coefficients taken in `ring` by mapping the matrices in. Verifies
// d[n] * d[n+1] = 0 and throws ComplexNotExact otherwise.
//   over Z:      rank H_n = nullity(d_n) - rank(d_{n+1}),
//                torsion H_n = invariant factors > 1 of d_{n+1}
//   over fields: dim H_n = dim ker d_n - rank d_{n+1}
HomologyResult homology_of_int_complex(const std::vector<Matrix<Int>>& d, const RingSpec& ring,
                                       long truncated_at);

// Same contract for a complex already over a field.
template <class F>
HomologyResult homology_of_field_complex(const std::vector<Matrix<F>>& d, const RingSpec& ring,
                                         long truncated_at);

// Cohomology of the Z-complex with coefficients in `ring`: the transposed
// matrices are mapped into the ring and homology of the cochain complex is
// taken. Over Z the result is cross-checked against universal coefficients
// H^n = Hom(H_n, Z) + Ext(H_{n-1}, Z); a mismatch is an internal error.
HomologyResult cohomology_of_int_complex(const std::vector<Matrix<Int>>& d, const RingSpec& ring,
                                         long truncated_at);

// Path homology/cohomology of a regular path complex. Homology over a field
// builds Omega over that field; cohomology always dualizes the Z-built Omega.
HomologyResult path_homology(const PathComplex& pc, const RingSpec& ring, long top_dim);
HomologyResult path_cohomology(const PathComplex& pc, const RingSpec& ring, long top_dim);

// Simplicial chain complex (ordered-simplex boundary with alternating signs)
// and its (co)homology, used as the independent comparison pipeline.
std::vector<Matrix<Int>> simplicial_boundary_matrices(const SimplicialComplex& sc);
HomologyResult simplicial_homology(const SimplicialComplex& sc, const RingSpec& ring);
HomologyResult simplicial_cohomology(const SimplicialComplex& sc, const RingSpec& ring);

// Multi-line rendering "H_0 = Z^2", one degree per line, with a truncation
// marker on the affected degree. `symbol` is "H" or "HH"; superscript mode
// prints H^n instead of H_n.
std::string render_homology(const HomologyResult& h, const std::string& symbol, bool super);

}  // namespace pathhom
