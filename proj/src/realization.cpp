#include "pathhom/realization.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace pathhom {

std::pair<Path, DegeneracyRecord> reduce_path(const Path& p) {
    if (p.empty()) throw InvalidInput("reduce_path: empty path");
    Path cur = p;
    // blocks[k] = original positions currently mapped onto cur[k]
    std::vector<std::vector<long>> blocks(cur.size());
    for (std::size_t i = 0; i < cur.size(); ++i) blocks[i] = {static_cast<long>(i)};

    for (;;) {
        std::size_t k = 0;
        while (k + 1 < cur.size() && cur[k] != cur[k + 1]) ++k;
        if (k + 1 >= cur.size()) break;  // regular
        // Delete the left member of the pair; its positions now land on the
        // surviving right member.
        std::vector<long> merged = std::move(blocks[k]);
        merged.insert(merged.end(), blocks[k + 1].begin(), blocks[k + 1].end());
        blocks[k + 1] = std::move(merged);
        cur.erase(cur.begin() + static_cast<long>(k));
        blocks.erase(blocks.begin() + static_cast<long>(k));
    }

    DegeneracyRecord rec;
    rec.source_dim = path_dim(p);
    rec.target_dim = path_dim(cur);
    rec.blocks = std::move(blocks);
    return {cur, rec};
}

long CellComplex::find_cell(const Path& p) const {
    auto it = id_of_path.find(p);
    return it == id_of_path.end() ? -1 : it->second;
}

CellComplex build_realization(const PathComplex& pc, const OmegaComplex<Int>& oc) {
    if (oc.ring.kind != RingKind::Integers)
        throw InternalInconsistency("build_realization: cell selection requires a Z-built Omega");

    CellComplex cc;
    cc.vertices = pc.vertices;

    // Admissibility lookup by path, per dimension.
    std::vector<std::set<Path>> admissible(static_cast<std::size_t>(oc.top_dim) + 1);
    for (long n = 0; n <= oc.top_dim; ++n)
        for (long idx : oc.admissible[static_cast<std::size_t>(n)])
            admissible[static_cast<std::size_t>(n)].insert(pc.path_at(n, idx));
    auto is_admissible = [&](const Path& p) {
        long d = path_dim(p);
        if (d < 0 || d > oc.top_dim) return false;
        return admissible[static_cast<std::size_t>(d)].count(p) > 0;
    };

    // Creates the cell for a regular path (recursively creating face targets).
    // `parent` names the cell whose face forced a closure addition, if any.
    std::function<long(const Path&, const Path*)> ensure_cell = [&](const Path& p,
                                                                    const Path* parent) -> long {
        auto it = cc.id_of_path.find(p);
        if (it != cc.id_of_path.end()) return it->second;
        if (!path_is_regular(p))
            throw InternalInconsistency("build_realization: cell path must be regular");

        long d = path_dim(p);
        long id = static_cast<long>(cc.cells.size());
        bool closure = !is_admissible(p);
        Cell cell;
        cell.id = id;
        cell.dim = d;
        cell.path = p;
        cell.closure = closure;
        while (static_cast<long>(cc.by_dim.size()) <= d) cc.by_dim.emplace_back();
        cell.index_in_dim = static_cast<long>(cc.by_dim[static_cast<std::size_t>(d)].size());
        cc.by_dim[static_cast<std::size_t>(d)].push_back(id);
        cc.id_of_path[p] = id;
        cc.cells.push_back(std::move(cell));

        if (closure) {
            ++cc.closure_cell_count;
            std::ostringstream msg;
            msg << "closure cell: non-admissible path " << path_to_string(p, cc.vertices)
                << " (dim " << d << ")";
            if (parent) msg << " required as a face of " << path_to_string(*parent, cc.vertices);
            cc.diagnostics.push_back(msg.str());
        }

        std::vector<FaceAttachment> faces;
        for (long q = 0; q <= d && d >= 1; ++q) {
            Path f = face_of(p, q);
            FaceAttachment at;
            if (path_is_regular(f)) {
                at.target = ensure_cell(f, &p);
            } else {
                auto [reduced, rec] = reduce_path(f);
                at.target = ensure_cell(reduced, &p);
                at.degeneracy = std::move(rec);
            }
            faces.push_back(std::move(at));
        }
        cc.cells[static_cast<std::size_t>(id)].faces = std::move(faces);
        return id;
    };

    // Dimension by dimension, in stored (sorted) path order, so ids and the
    // whole complex are reproducible.
    for (long n = 0; n <= oc.top_dim; ++n)
        for (long idx : oc.admissible[static_cast<std::size_t>(n)])
            ensure_cell(pc.path_at(n, idx), nullptr);

    // Sanity: every face attachment respects the dimension/degeneracy contract.
    for (const Cell& c : cc.cells) {
        for (const FaceAttachment& at : c.faces) {
            const Cell& t = cc.cells[static_cast<std::size_t>(at.target)];
            bool degenerate = at.degeneracy.has_value();
            if (degenerate != (t.dim < c.dim - 1))
                throw InternalInconsistency(
                    "build_realization: degeneracy flag inconsistent with face dimension");
            if (!degenerate && t.dim != c.dim - 1)
                throw InternalInconsistency("build_realization: regular face has wrong dimension");
        }
    }
    return cc;
}

std::vector<Matrix<Int>> cellular_boundary_matrices(const CellComplex& cc) {
    long top = cc.dim();
    std::vector<Matrix<Int>> d;
    if (top < 0) return d;
    d.emplace_back(0, cc.count(0));
    for (long n = 1; n <= top; ++n) {
        Matrix<Int> m(cc.count(n - 1), cc.count(n));
        for (long j = 0; j < cc.count(n); ++j) {
            const Cell& c = cc.cells[static_cast<std::size_t>(cc.by_dim[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)])];
            for (long q = 0; q <= n; ++q) {
                const FaceAttachment& at = c.faces[static_cast<std::size_t>(q)];
                if (at.degeneracy.has_value()) continue;  // degenerate face: zero
                const Cell& t = cc.cells[static_cast<std::size_t>(at.target)];
                Int& entry = m(t.index_in_dim, j);
                if (q % 2 == 0)
                    entry += 1;
                else
                    entry -= 1;
            }
        }
        d.push_back(std::move(m));
    }
    return d;
}

std::vector<Matrix<Int>> inclusion_matrices(const CellComplex& cc, const OmegaComplex<Int>& oc) {
    std::vector<Matrix<Int>> j;
    for (long n = 0; n <= oc.top_dim; ++n) {
        Matrix<Int> m(cc.count(n), oc.rank(n));
        if (n <= cc.dim()) {
            for (long row = 0; row < cc.count(n); ++row) {
                const Cell& c =
                    cc.cells[static_cast<std::size_t>(cc.by_dim[static_cast<std::size_t>(n)][static_cast<std::size_t>(row)])];
                long idx = oc.complex.index_of(n, c.path);
                if (idx < 0) continue;  // closure path outside P_n: zero row
                for (long k = 0; k < oc.rank(n); ++k)
                    m(row, k) = oc.omega_basis[static_cast<std::size_t>(n)](idx, k);
            }
        }
        j.push_back(std::move(m));
    }
    return j;
}

namespace {

// Pads the cellular boundary list to degrees 0..top (missing top cells simply
// mean zero modules up there).
std::vector<Matrix<Int>> padded_cell_boundaries(const CellComplex& cc, long top) {
    std::vector<Matrix<Int>> d = cellular_boundary_matrices(cc);
    if (d.empty()) d.emplace_back(0, 0);
    while (static_cast<long>(d.size()) <= top) {
        long prev_cols = d.back().cols();
        d.emplace_back(prev_cols, 0);
    }
    return d;
}

std::vector<DegreeComparison> compare_results(const HomologyResult& path_side,
                                              const HomologyResult& cell_side, long top) {
    std::vector<DegreeComparison> out;
    FgAbelianGroup trivial;
    for (long n = 0; n <= top; ++n) {
        const FgAbelianGroup& a = n <= path_side.top_dim() ? path_side.group(n) : trivial;
        const FgAbelianGroup& b = n <= cell_side.top_dim() ? cell_side.group(n) : trivial;
        DegreeComparison d;
        d.degree = n;
        d.path_group = fg_to_string(a, path_side.ring);
        d.cell_group = fg_to_string(b, cell_side.ring);
        d.equal = (a == b);
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace

ComparisonReport verify_realization_isomorphism(const PathComplex& pc, const RingSpec& ring,
                                                long top_dim) {
    require_valid(pc);
    ComparisonReport rep;
    rep.ring = ring;

    OmegaComplex<Int> ocZ = build_omega<Int>(pc, RingSpec::Z(), top_dim);
    CellComplex cc = build_realization(pc, ocZ);
    rep.closure_cells = cc.closure_cell_count;
    rep.truncated = ocZ.truncated;
    for (const std::string& s : cc.diagnostics) rep.notes.push_back(s);

    long top = ocZ.top_dim;
    std::vector<Matrix<Int>> dcell = padded_cell_boundaries(cc, top);
    std::vector<Matrix<Int>> j = inclusion_matrices(cc, ocZ);

    // Chain map identity over Z: Dcell_n . J_n == J_{n-1} . Domega_n, exactly.
    rep.chain_map_ok = true;
    for (long n = 1; n <= top; ++n) {
        Matrix<Int> lhs = matmul(dcell[static_cast<std::size_t>(n)], j[static_cast<std::size_t>(n)]);
        Matrix<Int> rhs = matmul(j[static_cast<std::size_t>(n - 1)],
                                 ocZ.boundary[static_cast<std::size_t>(n)]);
        if (!(lhs == rhs)) {
            rep.chain_map_ok = false;
            rep.notes.push_back("chain map identity fails at degree " + std::to_string(n));
        }
    }

    // Injectivity of F_Delta over the requested ring: full column rank.
    rep.injective_ok = true;
    for (long n = 0; n <= top; ++n) {
        const Matrix<Int>& jn = j[static_cast<std::size_t>(n)];
        long r;
        switch (ring.kind) {
            case RingKind::Integers:
                r = rank_int(jn);
                break;
            case RingKind::Rationals:
                r = rank_field(matrix_from_int<Rat>(jn, ring), scalar_one<Rat>(ring));
                break;
            case RingKind::PrimeField:
                r = rank_field(matrix_from_int<Fp>(jn, ring), scalar_one<Fp>(ring));
                break;
            default:
                throw UnsupportedRing("verify_realization_isomorphism: unknown ring");
        }
        if (r != jn.cols()) {
            rep.injective_ok = false;
            rep.notes.push_back("inclusion not injective at degree " + std::to_string(n));
        }
    }

    long trunc = ocZ.truncated ? top : -1;

    // Path-side homology: over a field, Omega is rebuilt over that field.
    HomologyResult path_h;
    if (ring.kind == RingKind::Integers) {
        path_h = homology_of_int_complex(ocZ.boundary, ring, trunc);
    } else if (ring.kind == RingKind::Rationals) {
        OmegaComplex<Rat> ocf = build_omega<Rat>(pc, ring, top_dim);
        path_h = homology_of_field_complex<Rat>(ocf.boundary, ring, ocf.truncated ? ocf.top_dim : -1);
    } else {
        OmegaComplex<Fp> ocf = build_omega<Fp>(pc, ring, top_dim);
        path_h = homology_of_field_complex<Fp>(ocf.boundary, ring, ocf.truncated ? ocf.top_dim : -1);
    }
    HomologyResult cell_h = homology_of_int_complex(dcell, ring, trunc);
    rep.homology = compare_results(path_h, cell_h, top);

    // Cohomology on both sides dualizes the integral complexes.
    HomologyResult path_coh = cohomology_of_int_complex(ocZ.boundary, ring, trunc);
    HomologyResult cell_coh = cohomology_of_int_complex(dcell, ring, trunc);
    rep.cohomology = compare_results(path_coh, cell_coh, top);

    return rep;
}

}  // namespace pathhom
