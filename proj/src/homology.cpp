#include "pathhom/homology.hpp"

#include "pathhom/errors.hpp"
#include "pathhom/omega.hpp"

namespace pathhom {

namespace {

void check_shapes(const std::vector<Matrix<Int>>& d) {
    if (d.empty()) throw InternalInconsistency("empty boundary list");
    if (d[0].rows() != 0) throw InternalInconsistency("d[0] must map into the zero module");
    for (std::size_t n = 1; n < d.size(); ++n)
        if (d[n].rows() != d[n - 1].cols())
            throw InternalInconsistency("boundary matrix shapes do not chain at degree " +
                                        std::to_string(n));
}

template <class S>
void check_exact(const std::vector<Matrix<S>>& d) {
    for (std::size_t n = 1; n + 1 < d.size(); ++n)
        if (!matmul(d[n], d[n + 1]).is_zero())
            throw ComplexNotExact("d_" + std::to_string(n) + " * d_" + std::to_string(n + 1) +
                                  " != 0");
}

HomologyResult homology_over_Z(const std::vector<Matrix<Int>>& d, long truncated_at) {
    check_exact(d);
    const long N = static_cast<long>(d.size()) - 1;
    HomologyResult out{RingSpec::Z(), {}, truncated_at};
    for (long n = 0; n <= N; ++n) {
        const Matrix<Int>& dn = d[static_cast<std::size_t>(n)];
        const long nullity = dn.cols() - rank_int(dn);
        long boundary_rank = 0;
        std::vector<Int> torsion;
        if (n < N) {
            const Matrix<Int>& dn1 = d[static_cast<std::size_t>(n + 1)];
            std::vector<Int> inv = smith_invariant_factors(dn1);
            boundary_rank = static_cast<long>(inv.size());
            torsion = std::move(inv);
        }
        out.groups.push_back(FgAbelianGroup::make(nullity - boundary_rank, std::move(torsion)));
    }
    return out;
}

}  // namespace

template <class F>
HomologyResult homology_of_field_complex(const std::vector<Matrix<F>>& d, const RingSpec& ring,
                                         long truncated_at) {
    if (!ring.is_field())
        throw InternalInconsistency("homology_of_field_complex requires a field");
    check_exact(d);
    const F one = scalar_one<F>(ring);
    const long N = static_cast<long>(d.size()) - 1;
    HomologyResult out{ring, {}, truncated_at};
    for (long n = 0; n <= N; ++n) {
        const Matrix<F>& dn = d[static_cast<std::size_t>(n)];
        const long kernel_dim = dn.cols() - rank_field(dn, one);
        const long image_dim =
            n < N ? rank_field(d[static_cast<std::size_t>(n + 1)], one) : 0;
        out.groups.push_back(FgAbelianGroup{kernel_dim - image_dim, {}});
    }
    return out;
}

template HomologyResult homology_of_field_complex<Rat>(const std::vector<Matrix<Rat>>&,
                                                       const RingSpec&, long);
template HomologyResult homology_of_field_complex<Fp>(const std::vector<Matrix<Fp>>&,
                                                      const RingSpec&, long);

HomologyResult homology_of_int_complex(const std::vector<Matrix<Int>>& d, const RingSpec& ring,
                                       long truncated_at) {
    check_shapes(d);
    switch (ring.kind) {
        case RingKind::Integers:
            return homology_over_Z(d, truncated_at);
        case RingKind::Rationals: {
            std::vector<Matrix<Rat>> dq;
            for (const auto& m : d) dq.push_back(matrix_from_int<Rat>(m, ring));
            return homology_of_field_complex(dq, ring, truncated_at);
        }
        case RingKind::PrimeField: {
            std::vector<Matrix<Fp>> dp;
            for (const auto& m : d) dp.push_back(matrix_from_int<Fp>(m, ring));
            return homology_of_field_complex(dp, ring, truncated_at);
        }
    }
    throw InternalInconsistency("unreachable ring kind");
}

HomologyResult cohomology_of_int_complex(const std::vector<Matrix<Int>>& d, const RingSpec& ring,
                                         long truncated_at) {
    check_shapes(d);
    check_exact(d);
    const long N = static_cast<long>(d.size()) - 1;
    // Cochain complex on the same degree range: delta^n = d[n+1]^T.
    // H^n = ker(delta^n) / im(delta^{n-1}), computed degree by degree.
    HomologyResult out{ring, {}, truncated_at};

    auto rank_in_ring = [&](const Matrix<Int>& m) -> long {
        switch (ring.kind) {
            case RingKind::Integers:
                return rank_int(m);
            case RingKind::Rationals:
                return rank_field(matrix_from_int<Rat>(m, ring), Rat(1));
            case RingKind::PrimeField:
                return rank_field(matrix_from_int<Fp>(m, ring), Fp(1, ring.p));
        }
        throw InternalInconsistency("unreachable ring kind");
    };

    for (long n = 0; n <= N; ++n) {
        // delta^n = d[n+1]^T : C^n -> C^{n+1}; delta^{n-1} = d[n]^T.
        const long dim_cn = d[static_cast<std::size_t>(n)].cols();
        const long rank_delta_n =
            n < N ? rank_in_ring(d[static_cast<std::size_t>(n + 1)]) : 0;
        const long rank_delta_prev = rank_in_ring(d[static_cast<std::size_t>(n)]);
        const long kernel_dim = dim_cn - rank_delta_n;
        long free_rank = kernel_dim - rank_delta_prev;
        std::vector<Int> torsion;
        if (ring.kind == RingKind::Integers) {
            torsion =
                smith_invariant_factors(d[static_cast<std::size_t>(n)].transposed());
        }
        out.groups.push_back(FgAbelianGroup::make(free_rank, std::move(torsion)));
    }

    if (ring.kind == RingKind::Integers) {
        // Universal-coefficient cross-check: H^n = Hom(H_n, Z) + Ext(H_{n-1}, Z).
        HomologyResult h = homology_over_Z(d, truncated_at);
        for (long n = 0; n <= N; ++n) {
            FgAbelianGroup expect = fg_hom_to_Z(h.group(n));
            if (n > 0) expect = fg_direct_sum(expect, fg_ext_to_Z(h.group(n - 1)));
            if (!(expect == out.group(n)))
                throw InternalInconsistency(
                    "universal-coefficient cross-check failed at degree " + std::to_string(n));
        }
    }
    return out;
}

HomologyResult path_homology(const PathComplex& pc, const RingSpec& ring, long top_dim) {
    switch (ring.kind) {
        case RingKind::Integers: {
            OmegaComplex<Int> oc = build_omega<Int>(pc, ring, top_dim);
            return homology_of_int_complex(oc.boundary, ring,
                                           oc.truncated ? oc.top_dim : -1);
        }
        case RingKind::Rationals: {
            OmegaComplex<Rat> oc = build_omega<Rat>(pc, ring, top_dim);
            return homology_of_field_complex(oc.boundary, ring,
                                             oc.truncated ? oc.top_dim : -1);
        }
        case RingKind::PrimeField: {
            OmegaComplex<Fp> oc = build_omega<Fp>(pc, ring, top_dim);
            return homology_of_field_complex(oc.boundary, ring,
                                             oc.truncated ? oc.top_dim : -1);
        }
    }
    throw InternalInconsistency("unreachable ring kind");
}

HomologyResult path_cohomology(const PathComplex& pc, const RingSpec& ring, long top_dim) {
    OmegaComplex<Int> oc = build_omega<Int>(pc, RingSpec::Z(), top_dim);
    return cohomology_of_int_complex(oc.boundary, ring, oc.truncated ? oc.top_dim : -1);
}

std::vector<Matrix<Int>> simplicial_boundary_matrices(const SimplicialComplex& sc) {
    std::vector<Matrix<Int>> d;
    d.emplace_back(0, sc.count(0));
    for (long n = 1; n <= sc.dim(); ++n) {
        Matrix<Int> m(sc.count(n - 1), sc.count(n));
        const auto& level = sc.simplices[static_cast<std::size_t>(n)];
        for (long j = 0; j < static_cast<long>(level.size()); ++j) {
            const auto& s = level[static_cast<std::size_t>(j)];
            for (long q = 0; q <= n; ++q) {
                std::vector<long> face;
                for (long i = 0; i <= n; ++i)
                    if (i != q) face.push_back(s[static_cast<std::size_t>(i)]);
                const long row = sc.index_of(n - 1, face);
                if (row < 0) throw InternalInconsistency("simplicial complex not closed");
                m(row, j) += (q % 2 == 0) ? 1 : -1;
            }
        }
        d.push_back(std::move(m));
    }
    return d;
}

HomologyResult simplicial_homology(const SimplicialComplex& sc, const RingSpec& ring) {
    return homology_of_int_complex(simplicial_boundary_matrices(sc), ring, -1);
}

HomologyResult simplicial_cohomology(const SimplicialComplex& sc, const RingSpec& ring) {
    return cohomology_of_int_complex(simplicial_boundary_matrices(sc), ring, -1);
}

std::string render_homology(const HomologyResult& h, const std::string& symbol, bool super) {
    std::string out;
    for (long n = 0; n <= h.top_dim(); ++n) {
        out += symbol + (super ? "^" : "_") + std::to_string(n) + " = " + h.group_string(n);
        if (n == h.truncated_at) out += "   (truncated: higher boundaries not computed)";
        out += "\n";
    }
    return out;
}

}  // namespace pathhom
