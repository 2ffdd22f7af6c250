#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathhom/homology.hpp"
#include "pathhom/matrix.hpp"
#include "pathhom/model.hpp"
#include "pathhom/omega.hpp"

namespace pathhom {

// An order-preserving surjection {0..source_dim} -> {0..target_dim}, stored as
// the list of preimage blocks (blocks[k] = positions mapped to k, consecutive
// and increasing). Records how a non-regular face collapses onto its reduction.
struct DegeneracyRecord {
    long source_dim = 0;
    long target_dim = 0;
    std::vector<std::vector<long>> blocks;

    bool is_identity() const { return source_dim == target_dim; }
};

// Deletes the left member of the leftmost equal adjacent pair, repeatedly,
// until the path is regular; the record composes all collapses.
std::pair<Path, DegeneracyRecord> reduce_path(const Path& p);

struct FaceAttachment {
    long target = -1;  // cell id
    // Present exactly when the face path was non-regular; the target then has
    // dimension < dim-1 and the record describes the vertex collapse.
    std::optional<DegeneracyRecord> degeneracy;
};

struct Cell {
    long id = -1;
    long dim = 0;
    long index_in_dim = 0;  // position within its dimension's cell list
    Path path;              // the (regular) path this cell realizes
    bool closure = false;   // added to close the complex, not admissible
    std::vector<FaceAttachment> faces;  // q = 0..dim (empty when dim = 0)
};

// The singular Delta-complex S(P): one cell per admissible path, plus any
// cells required to close the face structure (each such addition is recorded
// as a diagnostic — their existence on an input is data worth surfacing).
struct CellComplex {
    VertexTable vertices;
    std::vector<Cell> cells;                // by id (creation order)
    std::vector<std::vector<long>> by_dim;  // dimension -> cell ids
    std::vector<std::string> diagnostics;
    long closure_cell_count = 0;

    long dim() const { return static_cast<long>(by_dim.size()) - 1; }
    long count(long d) const {
        return (d >= 0 && d <= dim()) ? static_cast<long>(by_dim[static_cast<std::size_t>(d)].size())
                                      : 0;
    }
    long find_cell(const Path& p) const;  // -1 when absent

    std::map<Path, long> id_of_path;  // populated by build_realization
};

// Builds S(P) from a Z-built Omega complex (cell selection is Z-admissibility).
CellComplex build_realization(const PathComplex& pc, const OmegaComplex<Int>& oc);

// Cellular boundary over Z: for each cell, the signed sum of its non-degenerate
// faces; degenerate attachments contribute zero. d[0] has zero rows.
std::vector<Matrix<Int>> cellular_boundary_matrices(const CellComplex& cc);

// The chain map F_Delta in matrix form: J[n] has one row per n-cell and one
// column per Omega_n basis element, carrying the P_n coordinates of that basis
// element into cell coordinates.
std::vector<Matrix<Int>> inclusion_matrices(const CellComplex& cc, const OmegaComplex<Int>& oc);

struct DegreeComparison {
    long degree = 0;
    std::string path_group;
    std::string cell_group;
    bool equal = false;
};

struct ComparisonReport {
    RingSpec ring;
    std::vector<DegreeComparison> homology;
    std::vector<DegreeComparison> cohomology;
    bool chain_map_ok = false;   // cell-boundary . J == J . omega-boundary, over Z
    bool injective_ok = false;   // every J[n] has full column rank over the ring
    long closure_cells = 0;
    bool truncated = false;  // results are invariants of the stored truncation
    std::vector<std::string> notes;

    bool all_equal() const {
        for (const auto& d : homology)
            if (!d.equal) return false;
        for (const auto& d : cohomology)
            if (!d.equal) return false;
        return chain_map_ok && injective_ok;
    }
};

// Computes H_* and H^* through both pipelines (path side via Omega, cell side
// via the realization) and compares degree by degree; also checks the chain
// map identity and injectivity of F_Delta.
ComparisonReport verify_realization_isomorphism(const PathComplex& pc, const RingSpec& ring,
                                                long top_dim);

}  // namespace pathhom
