#pragma once

#include <string>

#include "pathhom/model.hpp"
#include "pathhom/realization.hpp"

namespace pathhom {

// ---------------------------------------------------------------------------
// Digraph text format: one declaration per line,
//   v <label>
//   e <from-label> <to-label>
// with '#' starting a comment and blank lines ignored. Labels are single
// whitespace-free tokens; edges must reference declared vertices; self-loops
// are rejected. ParseError carries the 1-based line and column.
// Rendering lists vertices in id order, then edges sorted by id pairs, so a
// rendered graph re-parses to an identical structure byte-stably.
// ---------------------------------------------------------------------------
Digraph parse_digraph_text(const std::string& text);
std::string render_digraph_text(const Digraph& g);

// ---------------------------------------------------------------------------
// Path complex JSON:
//   { "vertices": ["a", "b", ...],
//     "paths": { "1": [["a","b"], ...], "2": [["a","b","c"], ...] },
//     "exhaustive": true }
// "vertices" fixes the id order. Key "0" of "paths" may be omitted, in which
// case every vertex is a 0-path. "exhaustive" is optional (default true) and
// marks whether the listed paths are all paths of the complex or a
// dimension-truncated prefix. Unknown keys are rejected.
// ---------------------------------------------------------------------------
PathComplex parse_path_complex_json(const std::string& text);
std::string render_path_complex_json(const PathComplex& pc);

// ---------------------------------------------------------------------------
// Simplicial complex JSON: { "facets": [["a","b","c"], ...] }.
// The closure under subsets is computed on load.
// ---------------------------------------------------------------------------
SimplicialComplex parse_simplicial_json(const std::string& text);
std::string render_simplicial_json(const SimplicialComplex& sc);

// ---------------------------------------------------------------------------
// Cell complex JSON export (realizations are write-only artifacts):
// counts per dimension, every cell with its provenance path, closure flag,
// ordered face attachments (with degeneracy blocks when the face map is not
// injective on corners), closure diagnostics, per-cell corner 0-cells, and —
// for complexes of dimension <= 3 — a deterministic integer grid layout of
// the 0-cells under "coordinates" as a viewer convenience.
// ---------------------------------------------------------------------------
std::string render_cell_complex_json(const CellComplex& cc);

// ---------------------------------------------------------------------------
// Input sniffing: text starting with '{' is JSON and is classified by its
// keys ("facets" vs "paths"/"vertices"); anything else parses as the digraph
// text format.
// ---------------------------------------------------------------------------
enum class InputKind { DigraphText, PathComplexJson, SimplicialJson };

struct AnyInput {
    InputKind kind = InputKind::DigraphText;
    Digraph digraph;                // when kind == DigraphText
    PathComplex path_complex;       // when kind == PathComplexJson
    SimplicialComplex simplicial;   // when kind == SimplicialJson
};

AnyInput parse_input(const std::string& text);

// Whole-file helpers; IoError on failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace pathhom
