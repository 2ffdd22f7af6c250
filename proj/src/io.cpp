#include "pathhom/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "pathhom/errors.hpp"

namespace pathhom {

namespace {

using ordered_json = nlohmann::ordered_json;

// Converts a nlohmann byte offset into 1-based line/column.
std::pair<int, int> position_at(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

ordered_json parse_json(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = position_at(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(std::string("invalid JSON: ") + e.what(), line, col);
    }
}

void reject_unknown_keys(const ordered_json& obj, std::initializer_list<const char*> known,
                         const char* what) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (std::find_if(known.begin(), known.end(),
                         [&](const char* k) { return key == k; }) == known.end())
            throw ParseError(std::string(what) + ": unknown key \"" + key + "\"");
    }
}

std::vector<std::string> string_array(const ordered_json& a, const char* what) {
    if (!a.is_array()) throw ParseError(std::string(what) + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& v : a) {
        if (!v.is_string()) throw ParseError(std::string(what) + " must contain only strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Digraph text
// ---------------------------------------------------------------------------

Digraph parse_digraph_text(const std::string& text) {
    Digraph g;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::string line = raw.substr(0, raw.find('#'));

        // Tokenize, remembering 1-based start columns.
        std::vector<std::pair<std::string, int>> tok;
        std::size_t i = 0;
        while (i < line.size()) {
            if (std::isspace(static_cast<unsigned char>(line[i]))) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            tok.emplace_back(line.substr(i, j - i), static_cast<int>(i) + 1);
            i = j;
        }
        if (tok.empty()) continue;

        const std::string& kw = tok[0].first;
        if (kw == "v") {
            if (tok.size() != 2)
                throw ParseError("expected: v <label>", lineno, tok[0].second);
            if (g.vertices.find(tok[1].first) >= 0)
                throw ParseError("duplicate vertex \"" + tok[1].first + "\"", lineno,
                                 tok[1].second);
            g.vertices.intern(tok[1].first);
        } else if (kw == "e") {
            if (tok.size() != 3)
                throw ParseError("expected: e <from> <to>", lineno, tok[0].second);
            long from = g.vertices.find(tok[1].first);
            if (from < 0)
                throw ParseError("unknown vertex \"" + tok[1].first + "\"", lineno,
                                 tok[1].second);
            long to = g.vertices.find(tok[2].first);
            if (to < 0)
                throw ParseError("unknown vertex \"" + tok[2].first + "\"", lineno,
                                 tok[2].second);
            if (from == to)
                throw ParseError("self-loop on \"" + tok[1].first + "\" not allowed", lineno,
                                 tok[1].second);
            g.add_edge(from, to);
        } else {
            throw ParseError("expected 'v' or 'e', got \"" + kw + "\"", lineno, tok[0].second);
        }
    }
    g.normalize();
    return g;
}

std::string render_digraph_text(const Digraph& g) {
    std::string out = "# digraph: " + std::to_string(g.vertices.size()) + " vertices, " +
                      std::to_string(g.edges.size()) + " edges\n";
    for (const auto& label : g.vertices.labels()) {
        if (label.empty() ||
            std::any_of(label.begin(), label.end(),
                        [](char c) { return std::isspace(static_cast<unsigned char>(c)); }) ||
            label[0] == '#')
            throw InvalidInput("vertex label \"" + label +
                               "\" is not representable in the digraph text format");
        out += "v " + label + "\n";
    }
    for (const auto& [from, to] : g.edges)
        out += "e " + g.vertices.label(from) + " " + g.vertices.label(to) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Path complex JSON
// ---------------------------------------------------------------------------

PathComplex parse_path_complex_json(const std::string& text) {
    ordered_json j = parse_json(text);
    if (!j.is_object()) throw ParseError("path complex file must be a JSON object");
    reject_unknown_keys(j, {"vertices", "paths", "exhaustive"}, "path complex");
    if (!j.contains("vertices")) throw ParseError("path complex: missing \"vertices\"");

    PathComplex pc;
    for (const auto& label : string_array(j["vertices"], "\"vertices\"")) {
        if (pc.vertices.find(label) >= 0)
            throw ParseError("duplicate vertex \"" + label + "\"");
        pc.vertices.intern(label);
    }

    bool saw_dim0 = false;
    if (j.contains("paths")) {
        const auto& paths = j["paths"];
        if (!paths.is_object()) throw ParseError("\"paths\" must be an object keyed by dimension");
        for (const auto& [key, list] : paths.items()) {
            long dim = 0;
            try {
                std::size_t used = 0;
                dim = std::stol(key, &used);
                if (used != key.size() || dim < 0) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw ParseError("path dimension key \"" + key + "\" is not a non-negative integer");
            }
            if (dim == 0) saw_dim0 = true;
            if (!list.is_array()) throw ParseError("paths[\"" + key + "\"] must be an array");
            while (pc.top_dim() < dim) pc.paths.emplace_back();
            for (const auto& entry : list) {
                std::vector<std::string> labels = string_array(entry, "a path");
                if (static_cast<long>(labels.size()) != dim + 1)
                    throw ParseError("a path under key \"" + key + "\" has " +
                                     std::to_string(labels.size()) + " vertices; expected " +
                                     std::to_string(dim + 1));
                Path p;
                for (const auto& l : labels) {
                    long id = pc.vertices.find(l);
                    if (id < 0) throw ParseError("path uses unknown vertex \"" + l + "\"");
                    p.push_back(id);
                }
                pc.paths[static_cast<std::size_t>(dim)].push_back(std::move(p));
            }
        }
    }
    if (pc.paths.empty()) pc.paths.emplace_back();
    if (!saw_dim0)
        for (long v = 0; v < pc.vertices.size(); ++v) pc.paths[0].push_back({v});

    if (j.contains("exhaustive")) {
        if (!j["exhaustive"].is_boolean()) throw ParseError("\"exhaustive\" must be a boolean");
        pc.exhaustive = j["exhaustive"].get<bool>();
    }
    pc.normalize();
    return pc;
}

std::string render_path_complex_json(const PathComplex& pc) {
    ordered_json j;
    j["vertices"] = pc.vertices.labels();
    ordered_json paths = ordered_json::object();
    for (long n = 0; n <= pc.top_dim(); ++n) {
        ordered_json list = ordered_json::array();
        for (const auto& p : pc.paths[static_cast<std::size_t>(n)]) {
            ordered_json entry = ordered_json::array();
            for (long v : p) entry.push_back(pc.vertices.label(v));
            list.push_back(std::move(entry));
        }
        paths[std::to_string(n)] = std::move(list);
    }
    j["paths"] = std::move(paths);
    j["exhaustive"] = pc.exhaustive;
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Simplicial complex JSON
// ---------------------------------------------------------------------------

SimplicialComplex parse_simplicial_json(const std::string& text) {
    ordered_json j = parse_json(text);
    if (!j.is_object()) throw ParseError("simplicial complex file must be a JSON object");
    reject_unknown_keys(j, {"facets"}, "simplicial complex");
    if (!j.contains("facets")) throw ParseError("simplicial complex: missing \"facets\"");
    if (!j["facets"].is_array()) throw ParseError("\"facets\" must be an array");
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : j["facets"]) facets.push_back(string_array(f, "a facet"));
    if (facets.empty()) throw ParseError("simplicial complex: \"facets\" is empty");
    try {
        return simplicial_from_facets(facets);
    } catch (const InvalidInput& e) {
        throw ParseError(std::string("invalid facet list: ") + e.what());
    }
}

std::string render_simplicial_json(const SimplicialComplex& sc) {
    // Facets = simplices that are not a face of any higher simplex; emitting
    // them (largest dimension first) re-parses to the identical complex.
    ordered_json facets = ordered_json::array();
    for (long d = sc.dim(); d >= 0; --d) {
        for (const auto& s : sc.simplices[static_cast<std::size_t>(d)]) {
            bool covered = false;
            for (long e = d + 1; e <= sc.dim() && !covered; ++e)
                for (const auto& t : sc.simplices[static_cast<std::size_t>(e)])
                    if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                        covered = true;
                        break;
                    }
            if (covered) continue;
            ordered_json f = ordered_json::array();
            for (long v : s) f.push_back(sc.vertices.label(v));
            facets.push_back(std::move(f));
        }
    }
    ordered_json j;
    j["facets"] = std::move(facets);
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Cell complex JSON
// ---------------------------------------------------------------------------

std::string render_cell_complex_json(const CellComplex& cc) {
    ordered_json j;
    j["dimension"] = cc.dim();
    ordered_json counts = ordered_json::array();
    for (long d = 0; d <= cc.dim(); ++d) counts.push_back(cc.count(d));
    j["counts"] = std::move(counts);
    j["vertices"] = cc.vertices.labels();
    j["closure_cells"] = cc.closure_cell_count;

    ordered_json cells = ordered_json::array();
    for (const auto& cell : cc.cells) {
        ordered_json c;
        c["id"] = cell.id;
        c["dim"] = cell.dim;
        ordered_json path = ordered_json::array();
        for (long v : cell.path) path.push_back(cc.vertices.label(v));
        c["path"] = std::move(path);
        c["closure"] = cell.closure;
        ordered_json faces = ordered_json::array();
        for (const auto& f : cell.faces) {
            ordered_json fj;
            fj["target"] = f.target;
            if (f.degeneracy && !f.degeneracy->is_identity()) {
                ordered_json blocks = ordered_json::array();
                for (const auto& b : f.degeneracy->blocks) blocks.push_back(b);
                fj["degeneracy"] = std::move(blocks);
            }
            faces.push_back(std::move(fj));
        }
        c["faces"] = std::move(faces);
        // Corner 0-cells (the cell ids of the path's vertices).
        ordered_json corners = ordered_json::array();
        for (long v : cell.path) {
            auto it = cc.id_of_path.find(Path{v});
            corners.push_back(it == cc.id_of_path.end() ? -1 : it->second);
        }
        c["corners"] = std::move(corners);
        cells.push_back(std::move(c));
    }
    j["cells"] = std::move(cells);
    j["diagnostics"] = cc.diagnostics;

    if (cc.dim() <= 3) {
        // Deterministic integer grid layout of 0-cells: a viewer convenience,
        // not geometry.
        long n = cc.count(0);
        long w = 1;
        while (w * w < n) ++w;
        ordered_json coords = ordered_json::object();
        for (long i = 0; i < n; ++i) {
            long id = cc.by_dim[0][static_cast<std::size_t>(i)];
            coords[std::to_string(id)] = {i % w, i / w, 0};
        }
        j["coordinates"] = std::move(coords);
    }
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Sniffing and files
// ---------------------------------------------------------------------------

AnyInput parse_input(const std::string& text) {
    AnyInput out;
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == '{') {
        ordered_json j = parse_json(text);
        if (!j.is_object()) throw ParseError("input JSON must be an object");
        if (j.contains("facets")) {
            out.kind = InputKind::SimplicialJson;
            out.simplicial = parse_simplicial_json(text);
        } else if (j.contains("paths") || j.contains("vertices")) {
            out.kind = InputKind::PathComplexJson;
            out.path_complex = parse_path_complex_json(text);
        } else {
            throw ParseError(
                "cannot classify JSON input: expected \"facets\" (simplicial complex) or "
                "\"vertices\"/\"paths\" (path complex)");
        }
    } else {
        out.kind = InputKind::DigraphText;
        out.digraph = parse_digraph_text(text);
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    std::ostringstream body;
    body << in.rdbuf();
    if (in.bad()) throw IoError("read failure on file: " + path);
    return body.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open file for writing: " + path);
    out << content;
    out.flush();
    if (!out) throw IoError("write failure on file: " + path);
}

}  // namespace pathhom
