#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <string>

#include "pathhom/hochschild.hpp"
#include "pathhom/io.hpp"
#include "pathhom/omega.hpp"
#include "pathhom/realization.hpp"

using namespace pathhom;

namespace {

const char* kDigraphText =
    "v a\n"
    "v b\n"
    "v c\n"
    "e a b\n"
    "e b c\n"
    "e c a\n";

PathComplex square_complex() {
    // Two directed 2-paths with common endpoints: a filled square.
    PathComplex pc;
    long v0 = pc.vertices.intern("0");
    long v1 = pc.vertices.intern("1");
    long v2 = pc.vertices.intern("2");
    long v3 = pc.vertices.intern("3");
    pc.paths = {{{v0}, {v1}, {v2}, {v3}},
                {{v0, v1}, {v0, v2}, {v1, v3}, {v2, v3}},
                {{v0, v1, v3}, {v0, v2, v3}}};
    pc.exhaustive = true;
    pc.normalize();
    return pc;
}

}  // namespace

TEST_CASE("digraph text round-trip is byte-stable") {
    Digraph g = parse_digraph_text(kDigraphText);
    CHECK(g.vertices.size() == 3);
    CHECK(g.edges.size() == 3);

    std::string rendered = render_digraph_text(g);
    Digraph g2 = parse_digraph_text(rendered);
    CHECK(g2.vertices == g.vertices);
    CHECK(g2.edges == g.edges);
    CHECK(render_digraph_text(g2) == rendered);  // fixed point after one render
}

TEST_CASE("digraph text accepts comments and blank lines") {
    Digraph g = parse_digraph_text("# header\n\nv x\n  # indented comment\nv y\ne x y # trail\n");
    CHECK(g.vertices.size() == 2);
    CHECK(g.edges.size() == 1);
}

TEST_CASE("digraph parse errors carry 1-based line/column") {
    CHECK_THROWS_AS(parse_digraph_text("v a\nv a\n"), ParseError);
    try {
        parse_digraph_text("v a\ne a zz\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 5);
    }
    try {
        parse_digraph_text("v a\nq a\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 1);
    }
    // self-loops are not digraph edges
    CHECK_THROWS_AS(parse_digraph_text("v a\ne a a\n"), ParseError);
    // edges need two endpoints
    CHECK_THROWS_AS(parse_digraph_text("v a\nv b\ne a\n"), ParseError);
}

TEST_CASE("digraph render rejects unprintable labels") {
    Digraph g;
    g.vertices.intern("ok");
    g.vertices.intern("has space");
    g.edges = {{0, 1}};
    CHECK_THROWS_AS(render_digraph_text(g), InvalidInput);
}

TEST_CASE("path complex JSON round-trip") {
    PathComplex pc = square_complex();
    std::string text = render_path_complex_json(pc);
    PathComplex back = parse_path_complex_json(text);
    CHECK(back.vertices == pc.vertices);
    CHECK(back.paths == pc.paths);
    CHECK(back.exhaustive == pc.exhaustive);
    CHECK(render_path_complex_json(back) == text);
}

TEST_CASE("path complex JSON defaults and rejections") {
    // "0" defaults to all vertices; exhaustive defaults to true
    PathComplex pc = parse_path_complex_json(
        R"({"vertices": ["a", "b"], "paths": {"1": [["a", "b"]]}})");
    CHECK(pc.paths[0].size() == 2);
    CHECK(pc.exhaustive);
    CHECK_FALSE(parse_path_complex_json(
                    R"({"vertices": ["a"], "paths": {}, "exhaustive": false})")
                    .exhaustive);

    // unknown top-level key
    CHECK_THROWS_AS(parse_path_complex_json(
                        R"({"vertices": ["a"], "paths": {}, "bogus": 1})"),
                    ParseError);
    // path of wrong length for its dimension key
    CHECK_THROWS_AS(parse_path_complex_json(
                        R"({"vertices": ["a", "b"], "paths": {"1": [["a", "b", "a"]]}})"),
                    ParseError);
    // unknown vertex in a path
    CHECK_THROWS_AS(parse_path_complex_json(
                        R"({"vertices": ["a"], "paths": {"1": [["a", "z"]]}})"),
                    ParseError);
    // non-numeric dimension key
    CHECK_THROWS_AS(parse_path_complex_json(
                        R"({"vertices": ["a"], "paths": {"one": []}})"),
                    ParseError);
    // malformed JSON reports a position
    try {
        parse_path_complex_json("{\n  \"vertices\": [,]\n}");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line >= 1);
        CHECK(e.column >= 1);
    }
}

TEST_CASE("simplicial JSON round-trip via facets") {
    std::string text =
        R"({"facets": [["a", "b", "c"], ["c", "d"]]})";
    SimplicialComplex sc = parse_simplicial_json(text);
    CHECK(sc.dim() == 2);
    CHECK(sc.count(0) == 4);
    CHECK(sc.count(1) == 4);  // ab ac bc cd
    CHECK(sc.count(2) == 1);

    std::string rendered = render_simplicial_json(sc);
    SimplicialComplex back = parse_simplicial_json(rendered);
    CHECK(back.simplices == sc.simplices);
    CHECK(render_simplicial_json(back) == rendered);

    CHECK_THROWS_AS(parse_simplicial_json(R"({"facets": []})"), ParseError);
    CHECK_THROWS_AS(parse_simplicial_json(R"({"faces": [["a"]]})"), ParseError);
}

TEST_CASE("input sniffing distinguishes the three formats") {
    CHECK(parse_input(kDigraphText).kind == InputKind::DigraphText);
    CHECK(parse_input(R"({"facets": [["a"]]})").kind == InputKind::SimplicialJson);
    CHECK(parse_input(R"({"vertices": ["a"], "paths": {}})").kind ==
          InputKind::PathComplexJson);
    CHECK(parse_input("  \n {\"facets\": [[\"a\"]]}").kind == InputKind::SimplicialJson);
}

TEST_CASE("cell complex JSON records faces, corners and grid coordinates") {
    PathComplex pc = square_complex();
    OmegaComplex<Int> oc = build_omega<Int>(pc, RingSpec::Z(), pc.top_dim());
    CellComplex cc = build_realization(pc, oc);

    std::string text = render_cell_complex_json(cc);
    auto j = nlohmann::json::parse(text);
    CHECK(j.at("dimension") == 2);
    // the square's missing diagonal arrives as one closure edge
    CHECK(j.at("counts") == nlohmann::json({4, 5, 2}));
    CHECK(j.at("closure_cells") == 1);
    CHECK(j.at("cells").size() == 11);
    long closure_count = 0;
    for (const auto& cell : j.at("cells"))
        if (cell.at("closure").get<bool>()) ++closure_count;
    CHECK(closure_count == 1);
    // every non-vertex cell lists dim+1 faces (degenerate ones omitted per entry)
    for (const auto& cell : j.at("cells")) {
        long d = cell.at("dim").get<long>();
        if (d > 0) CHECK(cell.at("faces").size() == static_cast<std::size_t>(d) + 1);
        CHECK(cell.at("corners").size() >= 1);
        for (const auto& f : cell.at("faces")) CHECK(f.at("target").get<long>() >= 0);
    }
    // grid coordinates emitted for dim <= 3, one triple per 0-cell
    CHECK(j.at("coordinates").size() == 4);
    for (const auto& p : j.at("coordinates")) CHECK(p.size() == 3);
}

TEST_CASE("read/write file round-trip and IoError") {
    std::string path = "/tmp/pathhom_io_test.txt";
    write_file(path, "hello\n");
    CHECK(read_file(path) == "hello\n");
    CHECK_THROWS_AS(read_file("/nonexistent/pathhom"), IoError);
    CHECK_THROWS_AS(write_file("/nonexistent/dir/pathhom", "x"), IoError);
}

TEST_CASE("parsed digraph feeds the pipeline end to end") {
    Digraph g = parse_digraph_text(kDigraphText);
    PathComplex pc = path_complex_of_digraph(g, 2, 1000);
    HomologyResult h = path_homology(pc, RingSpec::Z(), 1);
    CHECK(h.group_string(0) == "Z");
    CHECK(h.group_string(1) == "Z");
}

TEST_CASE("simplicial JSON feeds cubical digraph construction") {
    SimplicialComplex sc = parse_simplicial_json(R"({"facets": [["a", "b"]]})");
    Digraph g = cubical_digraph(sc);
    std::string text = render_digraph_text(g);
    Digraph back = parse_digraph_text(text);
    CHECK(back.vertices.size() == 3);
    CHECK(back.edges.size() == 2);
}
