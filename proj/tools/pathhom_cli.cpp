// pathhom: path homology of digraphs and regular path complexes, geometric
// realizations, product/join constructions, and Hochschild comparisons.
//
// Exit codes: 0 success / checks agree; 1 check found a mismatch; 2 unusable
// input (parse error, invalid structure, unsupported ring, usage); 3 budget
// exceeded; 4 internal invariant failure (a bug).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "pathhom/hochschild.hpp"
#include "pathhom/homology.hpp"
#include "pathhom/io.hpp"
#include "pathhom/product_join.hpp"
#include "pathhom/random_gen.hpp"
#include "pathhom/realization.hpp"

using namespace pathhom;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr long long kDefaultBudget = 300000;

struct Options {
    std::string ring_text = "Z";
    std::optional<long> top_dim;
    long max_deg = 3;
    std::string format = "text";
    std::optional<std::uint64_t> seed;
    std::optional<long long> budget_flag;
    std::string out;

    RingSpec ring() const { return parse_ring(ring_text); }

    long long budget() const {
        if (budget_flag) {
            if (*budget_flag <= 0) throw InvalidInput("--budget must be positive");
            return *budget_flag;
        }
        if (const char* env = std::getenv("PATHHOM_BUDGET")) {
            std::string s(env);
            try {
                std::size_t used = 0;
                long long v = std::stoll(s, &used);
                if (used != s.size() || v <= 0) throw std::invalid_argument(s);
                return v;
            } catch (const std::exception&) {
                throw InvalidInput("PATHHOM_BUDGET must be a positive integer, got \"" + s +
                                   "\"");
            }
        }
        return kDefaultBudget;
    }
};

void add_ring_flag(CLI::App* cmd, Options& opt) {
    cmd->add_option("--ring", opt.ring_text, "Coefficient ring: Z | Q | Zp:<prime>")
        ->default_str("Z");
}
void add_budget_flag(CLI::App* cmd, Options& opt) {
    cmd->add_option("--budget", opt.budget_flag,
                    "Work budget (paths stored / Hochschild chain dimension); "
                    "overrides PATHHOM_BUDGET (default 300000)");
}
void add_format_flag(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->default_str("text");
}
void add_out_flag(CLI::App* cmd, Options& opt) {
    cmd->add_option("--out", opt.out, "Write the constructed artifact to this file");
}

// Loads a digraph or path-complex input and returns the path complex, using
// |V|-1 as the default top dimension for digraphs (capped by the budget).
PathComplex load_path_complex(const std::string& file, const Options& opt) {
    AnyInput in = parse_input(read_file(file));
    switch (in.kind) {
        case InputKind::DigraphText: {
            long top = opt.top_dim.value_or(std::max<long>(in.digraph.vertices.size() - 1, 0));
            return path_complex_of_digraph(in.digraph, top, static_cast<long>(opt.budget()));
        }
        case InputKind::PathComplexJson: {
            PathComplex pc = in.path_complex;
            require_valid(pc);
            return pc;
        }
        default:
            throw InvalidInput(file +
                               ": simplicial complexes are not direct homology inputs; run "
                               "`pathhom cubical` first or use `pathhom hochschild`");
    }
}

SimplicialComplex load_simplicial(const std::string& file) {
    AnyInput in = parse_input(read_file(file));
    if (in.kind != InputKind::SimplicialJson)
        throw InvalidInput(file + ": expected a simplicial complex JSON file ({\"facets\": ...})");
    return in.simplicial;
}

void emit(const std::string& text) { std::cout << text; }

void write_artifact(const Options& opt, const std::string& content,
                    const std::string& summary) {
    if (!opt.out.empty()) {
        write_file(opt.out, content);
        std::cout << summary << "\n";
    } else {
        emit(content);
    }
}

// --- homology / cohomology ---------------------------------------------------

ordered_json homology_json(const HomologyResult& h, const std::string& symbol, bool super) {
    ordered_json degrees = ordered_json::array();
    for (long n = 0; n <= h.top_dim(); ++n) {
        ordered_json d;
        d["degree"] = n;
        d["group"] = h.group_string(n);
        d["truncated"] = (n == h.truncated_at);
        degrees.push_back(std::move(d));
    }
    ordered_json j;
    j["ring"] = h.ring.to_string();
    j["symbol"] = symbol + (super ? "^n" : "_n");
    j["degrees"] = std::move(degrees);
    return j;
}

int cmd_homology(const std::string& file, const Options& opt, bool super) {
    PathComplex pc = load_path_complex(file, opt);
    long top = opt.top_dim.value_or(pc.top_dim());
    RingSpec ring = opt.ring();
    HomologyResult h = super ? path_cohomology(pc, ring, top) : path_homology(pc, ring, top);
    if (opt.format == "json") {
        ordered_json j;
        j["command"] = super ? "cohomology" : "homology";
        j.update(homology_json(h, "H", super));
        emit(j.dump(2) + "\n");
    } else {
        emit(render_homology(h, "H", super));
    }
    return 0;
}

// --- realize ------------------------------------------------------------------

int cmd_realize(const std::string& file, const Options& opt) {
    PathComplex pc = load_path_complex(file, opt);
    long top = opt.top_dim.value_or(pc.top_dim());
    OmegaComplex<Int> oc = build_omega<Int>(pc, RingSpec::Z(), top);
    CellComplex cc = build_realization(pc, oc);

    std::string counts;
    for (long d = 0; d <= cc.dim(); ++d)
        counts += (d ? ", " : "") + std::to_string(cc.count(d));
    std::string summary = "cells: " + counts;
    if (cc.closure_cell_count > 0)
        summary += "  (closure cells: " + std::to_string(cc.closure_cell_count) + ")";

    std::string json_text = render_cell_complex_json(cc);
    if (!opt.out.empty()) {
        write_file(opt.out, json_text);
        emit(summary + "\n");
    } else if (opt.format == "json") {
        emit(json_text);
    } else {
        emit(summary + "\n");
        for (const auto& note : cc.diagnostics) emit("note: " + note + "\n");
    }
    return 0;
}

// --- product / join / cubical ---------------------------------------------------

int cmd_product(const std::string& xfile, const std::string& yfile, const Options& opt,
                bool join) {
    PathComplex x = load_path_complex(xfile, opt);
    PathComplex y = load_path_complex(yfile, opt);
    long budget = static_cast<long>(opt.budget());
    PathComplex z = join ? join_complexes(x, y, budget) : cartesian_product(x, y, budget).complex;
    std::string counts;
    for (long d = 0; d <= z.top_dim(); ++d) counts += (d ? ", " : "") + std::to_string(z.count(d));
    write_artifact(opt, render_path_complex_json(z),
                   std::string(join ? "join" : "product") + " paths per dimension: " + counts);
    return 0;
}

int cmd_cubical(const std::string& file, const Options& opt) {
    SimplicialComplex sc = load_simplicial(file);
    Digraph g = cubical_digraph(sc);
    write_artifact(opt, render_digraph_text(g),
                   "cubical digraph: " + std::to_string(g.vertices.size()) + " vertices, " +
                       std::to_string(g.edges.size()) + " edges");
    return 0;
}

// --- hochschild -----------------------------------------------------------------

int cmd_hochschild(const std::string& file, const Options& opt, bool ring_explicit) {
    SimplicialComplex sc = load_simplicial(file);
    RingSpec ring = opt.ring();
    // Hochschild groups need a field: the *default* Z promotes to Q, but an
    // explicit --ring Z stays and is rejected by the engine (exit 2).
    if (!ring_explicit && ring == RingSpec::Z()) ring = RingSpec::Q();
    IncidenceAlgebra alg = incidence_algebra(sc);
    HomologyResult hh =
        hochschild_homology(alg, ring, opt.max_deg, HHCoefficients::Dual, opt.budget());
    HomologyResult hc =
        hochschild_cohomology(alg, ring, opt.max_deg, HHCoefficients::Regular, opt.budget());
    if (opt.format == "json") {
        ordered_json j;
        j["command"] = "hochschild";
        j["algebra_dim"] = alg.dim();
        j["homology"] = homology_json(hh, "HH", false);
        j["cohomology"] = homology_json(hc, "HH", true);
        emit(j.dump(2) + "\n");
    } else {
        emit("dim A_S = " + std::to_string(alg.dim()) + "\n");
        emit(render_homology(hh, "HH", false));
        emit(render_homology(hc, "HH", true));
    }
    return 0;
}

// --- check ----------------------------------------------------------------------

int report_outcome(bool pass, const ordered_json& j, const std::string& text,
                   const Options& opt) {
    if (opt.format == "json")
        emit(j.dump(2) + "\n");
    else
        emit(text + (pass ? "=> PASS\n" : "=> FAIL\n"));
    return pass ? 0 : 1;
}

int check_realization(const std::optional<std::string>& file, const Options& opt) {
    PathComplex pc;
    if (file) {
        pc = load_path_complex(*file, opt);
    } else if (opt.seed) {
        Digraph g = random_digraph_sized(*opt.seed, 6, 0.3, "v");
        pc = path_complex_of_digraph(g, opt.top_dim.value_or(3),
                                     static_cast<long>(opt.budget()));
    } else {
        throw InvalidInput("check realization needs an input file or --seed");
    }
    long top = opt.top_dim.value_or(pc.top_dim());
    ComparisonReport rep = verify_realization_isomorphism(pc, opt.ring(), top);
    bool pass = rep.all_equal() && rep.chain_map_ok && rep.injective_ok;

    std::string text = "realization check (ring " + rep.ring.to_string() + ")\n";
    ordered_json rows_h = ordered_json::array(), rows_c = ordered_json::array();
    for (const auto& d : rep.homology) {
        text += "  H_" + std::to_string(d.degree) + ": path " + d.path_group + "  cell " +
                d.cell_group + (d.equal ? "  ok" : "  MISMATCH") + "\n";
        rows_h.push_back({{"degree", d.degree},
                          {"path", d.path_group},
                          {"cell", d.cell_group},
                          {"equal", d.equal}});
    }
    for (const auto& d : rep.cohomology) {
        text += "  H^" + std::to_string(d.degree) + ": path " + d.path_group + "  cell " +
                d.cell_group + (d.equal ? "  ok" : "  MISMATCH") + "\n";
        rows_c.push_back({{"degree", d.degree},
                          {"path", d.path_group},
                          {"cell", d.cell_group},
                          {"equal", d.equal}});
    }
    text += std::string("  chain map: ") + (rep.chain_map_ok ? "ok" : "FAIL") + "\n";
    text += std::string("  injectivity: ") + (rep.injective_ok ? "ok" : "FAIL") + "\n";
    text += "  closure cells: " + std::to_string(rep.closure_cells) + "\n";
    for (const auto& n : rep.notes) text += "  note: " + n + "\n";

    ordered_json j;
    j["command"] = "check";
    j["which"] = "realization";
    j["ring"] = rep.ring.to_string();
    j["pass"] = pass;
    j["homology"] = std::move(rows_h);
    j["cohomology"] = std::move(rows_c);
    j["chain_map_ok"] = rep.chain_map_ok;
    j["injective_ok"] = rep.injective_ok;
    j["closure_cells"] = rep.closure_cells;
    j["truncated"] = rep.truncated;
    j["notes"] = rep.notes;
    return report_outcome(pass, j, text, opt);
}

int check_kunneth(const std::vector<std::string>& files, const Options& opt, bool join) {
    PathComplex x, y;
    if (files.size() == 2) {
        x = load_path_complex(files[0], opt);
        y = load_path_complex(files[1], opt);
    } else if (files.empty() && opt.seed) {
        auto pair = random_disjoint_pair(*opt.seed, 5, 0.35, 3, static_cast<long>(opt.budget()));
        x = pair.first;
        y = pair.second;
    } else {
        throw InvalidInput("check kunneth needs two input files or --seed");
    }
    KunnethReport rep = join ? verify_kunneth_join(x, y, opt.ring(), opt.max_deg,
                                                   static_cast<long>(opt.budget()))
                             : verify_kunneth_product(x, y, opt.ring(), opt.max_deg,
                                                      static_cast<long>(opt.budget()));
    bool pass = rep.all_ok();

    std::string text = std::string("kunneth ") + (join ? "join" : "product") + " check (ring " +
                       rep.ring.to_string() + ")\n";
    ordered_json rows = ordered_json::array();
    for (const auto& d : rep.degrees) {
        text += "  H_" + std::to_string(d.degree) + ": predicted " + d.predicted + "  computed " +
                d.computed +
                (d.skipped ? "  skipped (truncated)" : (d.equal ? "  ok" : "  MISMATCH")) + "\n";
        rows.push_back({{"degree", d.degree},
                        {"predicted", d.predicted},
                        {"computed", d.computed},
                        {"equal", d.equal},
                        {"skipped", d.skipped}});
    }
    text += std::string("  rank identity: ") + (rep.rank_identity_ok ? "ok" : "FAIL") + "\n";
    if (rep.chain_iso_checked)
        text += std::string("  chain isomorphism: ") + (rep.chain_iso_ok ? "ok" : "FAIL") + "\n";
    for (const auto& n : rep.notes) text += "  note: " + n + "\n";

    ordered_json j;
    j["command"] = "check";
    j["which"] = join ? "kunneth-join" : "kunneth-product";
    j["ring"] = rep.ring.to_string();
    j["pass"] = pass;
    j["degrees"] = std::move(rows);
    j["rank_identity_ok"] = rep.rank_identity_ok;
    j["rank_lhs"] = rep.rank_lhs;
    j["rank_rhs"] = rep.rank_rhs;
    j["chain_iso_checked"] = rep.chain_iso_checked;
    j["chain_iso_ok"] = rep.chain_iso_ok;
    j["notes"] = rep.notes;
    return report_outcome(pass, j, text, opt);
}

int check_hochschild(const std::string& file, const Options& opt, bool ring_explicit) {
    SimplicialComplex sc = load_simplicial(file);
    RingSpec ring = opt.ring();
    // Hochschild comparison needs a field: the *default* Z promotes to Q, but an
    // explicit --ring Z stays and is rejected by the verifier (exit 2).
    if (!ring_explicit && ring == RingSpec::Z()) ring = RingSpec::Q();
    HochschildReport rep = verify_hochschild_comparison(sc, ring, opt.max_deg, opt.budget());
    bool pass = rep.all_equal();

    std::string text = "hochschild check (ring " + rep.ring.to_string() + ", dim A_S = " +
                       std::to_string(rep.algebra_dim) + ")\n";
    auto rows_of = [&](const std::vector<HochschildDegree>& rows, bool super) {
        ordered_json out = ordered_json::array();
        for (const auto& d : rows) {
            text += std::string("  ") + (super ? "H^" : "H_") + std::to_string(d.degree) +
                    ": simplicial " + d.simplicial + "  path " + d.path + "  hochschild " +
                    d.hochschild + (d.equal ? "  ok" : "  MISMATCH") + "\n";
            out.push_back({{"degree", d.degree},
                           {"simplicial", d.simplicial},
                           {"path", d.path},
                           {"hochschild", d.hochschild},
                           {"equal", d.equal}});
        }
        return out;
    };
    ordered_json rows_h = rows_of(rep.homology, false);
    ordered_json rows_c = rows_of(rep.cohomology, true);
    for (const auto& n : rep.notes) text += "  note: " + n + "\n";

    ordered_json j;
    j["command"] = "check";
    j["which"] = "hochschild";
    j["ring"] = rep.ring.to_string();
    j["pass"] = pass;
    j["algebra_dim"] = rep.algebra_dim;
    j["homology"] = std::move(rows_h);
    j["cohomology"] = std::move(rows_c);
    j["notes"] = rep.notes;
    return report_outcome(pass, j, text, opt);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"path homology toolkit"};
    app.require_subcommand(1);

    Options opt;
    std::string input, input2;
    std::vector<std::string> kunneth_inputs;
    std::optional<std::string> optional_input;
    std::string which;

    auto* homology = app.add_subcommand("homology", "Path homology of a digraph or path complex");
    homology->add_option("input", input, "digraph text or path-complex JSON file")->required();
    add_ring_flag(homology, opt);
    homology->add_option("--top-dim", opt.top_dim, "Highest path dimension to compute");
    add_format_flag(homology, opt);
    add_budget_flag(homology, opt);

    auto* cohomology =
        app.add_subcommand("cohomology", "Path cohomology of a digraph or path complex");
    cohomology->add_option("input", input, "digraph text or path-complex JSON file")->required();
    add_ring_flag(cohomology, opt);
    cohomology->add_option("--top-dim", opt.top_dim, "Highest path dimension to compute");
    add_format_flag(cohomology, opt);
    add_budget_flag(cohomology, opt);

    auto* realize = app.add_subcommand(
        "realize", "Geometric realization of a path complex as a cell complex");
    realize->add_option("input", input, "digraph text or path-complex JSON file")->required();
    realize->add_option("--top-dim", opt.top_dim, "Highest path dimension to realize");
    add_format_flag(realize, opt);
    add_out_flag(realize, opt);
    add_budget_flag(realize, opt);

    auto* product = app.add_subcommand("product", "Cartesian product of two path complexes");
    product->add_option("inputs", kunneth_inputs, "two digraph/path-complex files")
        ->expected(2)
        ->required();
    product->add_option("--top-dim", opt.top_dim, "Top dimension for digraph inputs");
    add_out_flag(product, opt);
    add_budget_flag(product, opt);

    auto* join = app.add_subcommand("join", "Join of two path complexes (disjoint labels)");
    join->add_option("inputs", kunneth_inputs, "two digraph/path-complex files")
        ->expected(2)
        ->required();
    join->add_option("--top-dim", opt.top_dim, "Top dimension for digraph inputs");
    add_out_flag(join, opt);
    add_budget_flag(join, opt);

    auto* cubical =
        app.add_subcommand("cubical", "Cubical digraph of a simplicial complex");
    cubical->add_option("input", input, "simplicial-complex JSON file")->required();
    add_out_flag(cubical, opt);

    auto* hochschild = app.add_subcommand(
        "hochschild", "Hochschild homology/cohomology of the incidence algebra A_S");
    hochschild->add_option("input", input, "simplicial-complex JSON file")->required();
    add_ring_flag(hochschild, opt);
    hochschild->add_option("--max-deg", opt.max_deg,
                           "Highest Hochschild degree (exact below it)");
    add_format_flag(hochschild, opt);
    add_budget_flag(hochschild, opt);

    auto* check = app.add_subcommand("check", "Verify an expected isomorphism on an input");
    check
        ->add_option("which", which,
                     "realization | kunneth-product | kunneth-join | hochschild")
        ->required()
        ->check(CLI::IsMember({"realization", "kunneth-product", "kunneth-join", "hochschild"}));
    check->add_option("inputs", kunneth_inputs, "input file(s); optional with --seed");
    add_ring_flag(check, opt);
    check->add_option("--top-dim", opt.top_dim, "Top dimension (realization)");
    check->add_option("--max-deg", opt.max_deg, "Degree range (kunneth, hochschild)");
    check->add_option("--seed", opt.seed,
                      "Generate the input(s) from this random seed instead of files");
    add_format_flag(check, opt);
    add_budget_flag(check, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (homology->parsed()) return cmd_homology(input, opt, false);
        if (cohomology->parsed()) return cmd_homology(input, opt, true);
        if (realize->parsed()) return cmd_realize(input, opt);
        if (product->parsed()) return cmd_product(kunneth_inputs[0], kunneth_inputs[1], opt, false);
        if (join->parsed()) return cmd_product(kunneth_inputs[0], kunneth_inputs[1], opt, true);
        if (cubical->parsed()) return cmd_cubical(input, opt);
        if (hochschild->parsed())
            return cmd_hochschild(input, opt, hochschild->count("--ring") > 0);
        if (check->parsed()) {
            if (which == "realization") {
                std::optional<std::string> file;
                if (kunneth_inputs.size() == 1) file = kunneth_inputs[0];
                else if (!kunneth_inputs.empty())
                    throw InvalidInput("check realization takes one input file");
                return check_realization(file, opt);
            }
            if (which == "kunneth-product") return check_kunneth(kunneth_inputs, opt, false);
            if (which == "kunneth-join") return check_kunneth(kunneth_inputs, opt, true);
            if (kunneth_inputs.size() != 1)
                throw InvalidInput("check hochschild takes one simplicial input file");
            return check_hochschild(kunneth_inputs[0], opt, check->count("--ring") > 0);
        }
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << " (required " << e.required << ", budget "
                  << e.limit << ")\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what();
        if (e.line > 0) std::cerr << " at line " << e.line << ", column " << e.column;
        std::cerr << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedRing& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalInconsistency& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
