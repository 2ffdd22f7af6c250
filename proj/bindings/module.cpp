// Python bindings: string-in / plain-data-out wrappers over the library's
// main pipelines. Inputs are the same texts the CLI accepts (digraph text,
// path-complex JSON, simplicial JSON); results are dicts, lists, and strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "pathhom/hochschild.hpp"
#include "pathhom/homology.hpp"
#include "pathhom/io.hpp"
#include "pathhom/product_join.hpp"
#include "pathhom/realization.hpp"

namespace py = pybind11;
using namespace pathhom;

namespace {

constexpr long long kDefaultBudget = 300000;

PathComplex complex_from_text(const std::string& text, std::optional<long> top_dim,
                              long long budget) {
    AnyInput in = parse_input(text);
    if (in.kind == InputKind::DigraphText) {
        long top = top_dim.value_or(std::max<long>(in.digraph.vertices.size() - 1, 0));
        return path_complex_of_digraph(in.digraph, top, static_cast<long>(budget));
    }
    if (in.kind == InputKind::PathComplexJson) {
        require_valid(in.path_complex);
        return in.path_complex;
    }
    throw InvalidInput(
        "simplicial complexes are not direct homology inputs; use cubical() or hochschild()");
}

SimplicialComplex simplicial_from_text(const std::string& text) {
    AnyInput in = parse_input(text);
    if (in.kind != InputKind::SimplicialJson)
        throw InvalidInput("expected simplicial-complex JSON ({\"facets\": ...})");
    return in.simplicial;
}

py::list groups_to_list(const HomologyResult& h) {
    py::list out;
    for (long n = 0; n <= h.top_dim(); ++n) {
        py::dict d;
        d["degree"] = n;
        d["group"] = h.group_string(n);
        d["rank"] = h.group(n).rank;
        py::list torsion;
        for (const Int& t : h.group(n).torsion) torsion.append(t.get_str());
        d["torsion"] = torsion;
        d["truncated"] = (n == h.truncated_at);
        out.append(d);
    }
    return out;
}

py::list homology_entry(const std::string& text, const std::string& ring_text,
                        std::optional<long> top_dim, long long budget, bool super) {
    PathComplex pc = complex_from_text(text, top_dim, budget);
    long top = top_dim.value_or(pc.top_dim());
    RingSpec ring = parse_ring(ring_text);
    return groups_to_list(super ? path_cohomology(pc, ring, top)
                                : path_homology(pc, ring, top));
}

}  // namespace

PYBIND11_MODULE(_pathhom, m) {
    m.doc() = "path homology of digraphs and regular path complexes";

    py::register_exception<BudgetExceeded>(m, "BudgetError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InvalidInput>(m, "InvalidInputError", PyExc_ValueError);
    py::register_exception<UnsupportedRing>(m, "UnsupportedRingError", PyExc_ValueError);
    py::register_exception<InternalInconsistency>(m, "InternalError", PyExc_RuntimeError);

    m.def(
        "homology",
        [](const std::string& text, const std::string& ring, std::optional<long> top_dim,
           long long budget) { return homology_entry(text, ring, top_dim, budget, false); },
        py::arg("text"), py::arg("ring") = "Z", py::arg("top_dim") = std::nullopt,
        py::arg("budget") = kDefaultBudget,
        "Path homology of digraph text or path-complex JSON; returns a list of "
        "{degree, group, rank, torsion, truncated} dicts.");

    m.def(
        "cohomology",
        [](const std::string& text, const std::string& ring, std::optional<long> top_dim,
           long long budget) { return homology_entry(text, ring, top_dim, budget, true); },
        py::arg("text"), py::arg("ring") = "Z", py::arg("top_dim") = std::nullopt,
        py::arg("budget") = kDefaultBudget, "Path cohomology; same shape as homology().");

    m.def(
        "realize",
        [](const std::string& text, std::optional<long> top_dim, long long budget) {
            PathComplex pc = complex_from_text(text, top_dim, budget);
            OmegaComplex<Int> oc = build_omega<Int>(pc, RingSpec::Z(), pc.top_dim());
            return render_cell_complex_json(build_realization(pc, oc));
        },
        py::arg("text"), py::arg("top_dim") = std::nullopt, py::arg("budget") = kDefaultBudget,
        "Geometric realization as a cell complex, returned as its JSON rendering.");

    m.def(
        "product",
        [](const std::string& x, const std::string& y, std::optional<long> top_dim,
           long long budget) {
            PathComplex px = complex_from_text(x, top_dim, budget);
            PathComplex py_ = complex_from_text(y, top_dim, budget);
            return render_path_complex_json(
                cartesian_product(px, py_, static_cast<long>(budget)).complex);
        },
        py::arg("x"), py::arg("y"), py::arg("top_dim") = std::nullopt,
        py::arg("budget") = kDefaultBudget,
        "Cartesian product of two complexes, as path-complex JSON.");

    m.def(
        "join",
        [](const std::string& x, const std::string& y, std::optional<long> top_dim,
           long long budget) {
            PathComplex px = complex_from_text(x, top_dim, budget);
            PathComplex py_ = complex_from_text(y, top_dim, budget);
            return render_path_complex_json(join_complexes(px, py_, static_cast<long>(budget)));
        },
        py::arg("x"), py::arg("y"), py::arg("top_dim") = std::nullopt,
        py::arg("budget") = kDefaultBudget,
        "Join of two complexes with disjoint vertex labels, as path-complex JSON.");

    m.def(
        "cubical",
        [](const std::string& text) {
            return render_digraph_text(cubical_digraph(simplicial_from_text(text)));
        },
        py::arg("text"),
        "Cubical digraph of a simplicial complex (simplices -> vertices, codim-1 "
        "containments -> edges), as digraph text.");

    m.def(
        "hochschild",
        [](const std::string& text, const std::string& ring_text, long max_deg,
           long long budget) {
            SimplicialComplex sc = simplicial_from_text(text);
            RingSpec ring = parse_ring(ring_text);
            IncidenceAlgebra alg = incidence_algebra(sc);
            py::dict out;
            out["algebra_dim"] = alg.dim();
            out["homology"] = groups_to_list(
                hochschild_homology(alg, ring, max_deg, HHCoefficients::Dual, budget));
            out["cohomology"] = groups_to_list(
                hochschild_cohomology(alg, ring, max_deg, HHCoefficients::Regular, budget));
            return out;
        },
        py::arg("text"), py::arg("ring") = "Q", py::arg("max_deg") = 3,
        py::arg("budget") = kDefaultBudget,
        "Hochschild homology (dual-bimodule coefficients) and cohomology of the "
        "incidence algebra of a simplicial complex.");

    m.def(
        "check_realization",
        [](const std::string& text, const std::string& ring_text, std::optional<long> top_dim,
           long long budget) {
            PathComplex pc = complex_from_text(text, top_dim, budget);
            long top = top_dim.value_or(pc.top_dim());
            ComparisonReport rep =
                verify_realization_isomorphism(pc, parse_ring(ring_text), top);
            py::dict out;
            out["pass"] = rep.all_equal();
            out["chain_map_ok"] = rep.chain_map_ok;
            out["injective_ok"] = rep.injective_ok;
            out["closure_cells"] = rep.closure_cells;
            py::list rows;
            for (const auto& d : rep.homology) {
                py::dict r;
                r["degree"] = d.degree;
                r["path"] = d.path_group;
                r["cell"] = d.cell_group;
                r["equal"] = d.equal;
                rows.append(r);
            }
            out["homology"] = rows;
            out["notes"] = rep.notes;
            return out;
        },
        py::arg("text"), py::arg("ring") = "Z", py::arg("top_dim") = std::nullopt,
        py::arg("budget") = kDefaultBudget,
        "Verify that realization preserves homology/cohomology on this input.");

    m.def(
        "check_kunneth",
        [](const std::string& x, const std::string& y, const std::string& kind,
           const std::string& ring_text, long max_deg, long long budget) {
            PathComplex px = complex_from_text(x, std::nullopt, budget);
            PathComplex py_ = complex_from_text(y, std::nullopt, budget);
            bool join = (kind == "join");
            if (!join && kind != "product")
                throw InvalidInput("kind must be \"product\" or \"join\"");
            KunnethReport rep =
                join ? verify_kunneth_join(px, py_, parse_ring(ring_text), max_deg,
                                           static_cast<long>(budget))
                     : verify_kunneth_product(px, py_, parse_ring(ring_text), max_deg,
                                              static_cast<long>(budget));
            py::dict out;
            out["pass"] = rep.all_ok();
            out["rank_identity_ok"] = rep.rank_identity_ok;
            out["chain_iso_checked"] = rep.chain_iso_checked;
            out["chain_iso_ok"] = rep.chain_iso_ok;
            py::list rows;
            for (const auto& d : rep.degrees) {
                py::dict r;
                r["degree"] = d.degree;
                r["predicted"] = d.predicted;
                r["computed"] = d.computed;
                r["equal"] = d.equal;
                r["skipped"] = d.skipped;
                rows.append(r);
            }
            out["degrees"] = rows;
            out["notes"] = rep.notes;
            return out;
        },
        py::arg("x"), py::arg("y"), py::arg("kind") = "product", py::arg("ring") = "Z",
        py::arg("max_deg") = 3, py::arg("budget") = kDefaultBudget,
        "Verify the product or join Kunneth formula on two complexes.");

    m.def(
        "check_hochschild",
        [](const std::string& text, const std::string& ring_text, long max_deg,
           long long budget) {
            HochschildReport rep = verify_hochschild_comparison(
                simplicial_from_text(text), parse_ring(ring_text), max_deg, budget);
            py::dict out;
            out["pass"] = rep.all_equal();
            out["algebra_dim"] = rep.algebra_dim;
            auto rows_of = [](const std::vector<HochschildDegree>& rows) {
                py::list out_rows;
                for (const auto& d : rows) {
                    py::dict r;
                    r["degree"] = d.degree;
                    r["simplicial"] = d.simplicial;
                    r["path"] = d.path;
                    r["hochschild"] = d.hochschild;
                    r["equal"] = d.equal;
                    out_rows.append(r);
                }
                return out_rows;
            };
            out["homology"] = rows_of(rep.homology);
            out["cohomology"] = rows_of(rep.cohomology);
            out["notes"] = rep.notes;
            return out;
        },
        py::arg("text"), py::arg("ring") = "Q", py::arg("max_deg") = 3,
        py::arg("budget") = kDefaultBudget,
        "Verify simplicial H = path H of the cubical digraph = Hochschild groups "
        "of the incidence algebra, over a field.");
}
