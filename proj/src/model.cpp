#include "pathhom/model.hpp"

#include <algorithm>
#include <set>

namespace pathhom {

namespace {

// Binary search in a vector of sorted (label, id) pairs.
long lookup(const std::vector<std::pair<std::string, long>>& index, const std::string& label) {
    auto it = std::lower_bound(index.begin(), index.end(), label,
                               [](const auto& entry, const std::string& l) {
                                   return entry.first < l;
                               });
    if (it != index.end() && it->first == label) return it->second;
    return -1;
}

}  // namespace

long VertexTable::intern(const std::string& label) {
    if (label.empty()) throw InvalidInput("vertex labels must be non-empty");
    long id = lookup(index_, label);
    if (id >= 0) return id;
    id = static_cast<long>(labels_.size());
    labels_.push_back(label);
    auto pos = std::lower_bound(index_.begin(), index_.end(), label,
                                [](const auto& entry, const std::string& l) {
                                    return entry.first < l;
                                });
    index_.emplace(pos, label, id);
    return id;
}

long VertexTable::find(const std::string& label) const { return lookup(index_, label); }

const std::string& VertexTable::label(long id) const {
    if (id < 0 || id >= size()) throw InternalInconsistency("vertex id out of range");
    return labels_[static_cast<std::size_t>(id)];
}

bool path_is_regular(const Path& p) {
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] == p[i - 1]) return false;
    return true;
}

std::string path_to_string(const Path& p, const VertexTable& vt) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += "->";
        out += vt.label(p[i]);
    }
    return out;
}

Path face_of(const Path& p, long q) {
    Path f;
    f.reserve(p.size() - 1);
    for (long i = 0; i < static_cast<long>(p.size()); ++i)
        if (i != q) f.push_back(p[static_cast<std::size_t>(i)]);
    return f;
}

std::vector<Face> boundary_faces(const Path& p) {
    if (path_dim(p) < 1) throw InvalidInput("boundary_faces requires dim >= 1");
    std::vector<Face> out;
    out.reserve(p.size());
    for (long q = 0; q < static_cast<long>(p.size()); ++q)
        out.push_back(Face{q % 2 == 0 ? 1 : -1, face_of(p, q)});
    return out;
}

long PathComplex::index_of(long n, const Path& p) const {
    if (n < 0 || n > top_dim()) return -1;
    const auto& level = paths[static_cast<std::size_t>(n)];
    auto it = std::lower_bound(level.begin(), level.end(), p);
    if (it != level.end() && *it == p) return static_cast<long>(it - level.begin());
    return -1;
}

void PathComplex::normalize() {
    for (auto& level : paths) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
    }
    while (paths.size() > 1 && paths.back().empty()) paths.pop_back();
    regular = true;
    for (const auto& level : paths)
        for (const Path& p : level)
            if (!path_is_regular(p)) regular = false;
}

ValidationReport validate_path_complex(const PathComplex& pc) {
    ValidationReport rep;
    if (pc.paths.empty() || pc.paths[0].empty())
        rep.problems.push_back("dimension 0 is empty: a path complex needs at least one vertex");
    for (long n = 0; n <= pc.top_dim(); ++n) {
        const auto& level = pc.paths[static_cast<std::size_t>(n)];
        for (std::size_t k = 0; k < level.size(); ++k) {
            const Path& p = level[k];
            if (path_dim(p) != n) {
                rep.problems.push_back("path " + path_to_string(p, pc.vertices) +
                                       " stored at dimension " + std::to_string(n) +
                                       " has wrong length");
                continue;
            }
            for (long v : p)
                if (v < 0 || v >= pc.vertices.size())
                    rep.problems.push_back("path at dimension " + std::to_string(n) +
                                           " uses an undeclared vertex id");
            if (k > 0 && level[k - 1] == p)
                rep.problems.push_back("duplicate path " + path_to_string(p, pc.vertices));
            if (pc.regular && !path_is_regular(p))
                rep.problems.push_back("path " + path_to_string(p, pc.vertices) +
                                       " is non-regular but the complex claims regularity");
            if (n >= 1) {
                Path left = face_of(p, 0);
                Path right = face_of(p, n);
                if (!pc.contains(n - 1, right))
                    rep.problems.push_back("path " + path_to_string(p, pc.vertices) +
                                           " requires truncation " +
                                           path_to_string(right, pc.vertices) + " at dimension " +
                                           std::to_string(n - 1));
                if (!pc.contains(n - 1, left))
                    rep.problems.push_back("path " + path_to_string(p, pc.vertices) +
                                           " requires truncation " +
                                           path_to_string(left, pc.vertices) + " at dimension " +
                                           std::to_string(n - 1));
            }
        }
    }
    return rep;
}

void require_valid(const PathComplex& pc) {
    ValidationReport rep = validate_path_complex(pc);
    if (!rep.ok()) {
        std::string msg = "invalid path complex:";
        for (const auto& p : rep.problems) msg += "\n  - " + p;
        throw InvalidInput(msg);
    }
}

void Digraph::add_edge(long from, long to) {
    if (from == to)
        throw InvalidInput("self-loop on vertex '" + vertices.label(from) + "' is not allowed");
    if (from < 0 || to < 0 || from >= vertices.size() || to >= vertices.size())
        throw InvalidInput("edge endpoint id out of range");
    edges.emplace_back(from, to);
}

void Digraph::normalize() {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool Digraph::has_edge(long from, long to) const {
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(from, to));
}

std::vector<long> Digraph::out_neighbors(long v) const {
    std::vector<long> out;
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(v, long(-1)));
    for (; it != edges.end() && it->first == v; ++it) out.push_back(it->second);
    return out;
}

PathComplex path_complex_of_digraph(const Digraph& g, long max_dim, long budget_paths) {
    if (max_dim < 0) throw InvalidInput("max_dim must be >= 0");
    PathComplex pc;
    pc.vertices = g.vertices;
    pc.paths.emplace_back();
    for (long v = 0; v < g.vertices.size(); ++v) pc.paths[0].push_back(Path{v});
    long total = pc.count(0);
    if (total > budget_paths)
        throw BudgetExceeded("digraph expansion exceeds the path budget", total, budget_paths);
    for (long n = 1; n <= max_dim; ++n) {
        std::vector<Path> next;
        for (const Path& p : pc.paths[static_cast<std::size_t>(n - 1)]) {
            for (long w : g.out_neighbors(p.back())) {
                Path q = p;
                q.push_back(w);
                next.push_back(std::move(q));
                if (total + static_cast<long>(next.size()) > budget_paths)
                    throw BudgetExceeded("digraph expansion exceeds the path budget",
                                         total + static_cast<long>(next.size()), budget_paths);
            }
        }
        if (next.empty()) break;
        total += static_cast<long>(next.size());
        pc.paths.push_back(std::move(next));
    }
    // The complex is the full P(G) unless some longest stored walk extends.
    pc.exhaustive = true;
    if (pc.top_dim() == max_dim) {
        for (const Path& p : pc.paths.back()) {
            if (!g.out_neighbors(p.back()).empty()) {
                pc.exhaustive = false;
                break;
            }
        }
    }
    pc.normalize();
    return pc;
}

long SimplicialComplex::index_of(long d, const std::vector<long>& s) const {
    if (d < 0 || d > dim()) return -1;
    const auto& level = simplices[static_cast<std::size_t>(d)];
    auto it = std::lower_bound(level.begin(), level.end(), s);
    if (it != level.end() && *it == s) return static_cast<long>(it - level.begin());
    return -1;
}

SimplicialComplex simplicial_from_facets(const std::vector<std::vector<std::string>>& facets) {
    if (facets.empty()) throw InvalidInput("simplicial complex needs at least one facet");
    // Deterministic ids: lexicographic order of the labels that appear.
    std::set<std::string> labels;
    for (const auto& f : facets) {
        if (f.empty()) throw InvalidInput("empty facet");
        for (const auto& l : f) labels.insert(l);
    }
    SimplicialComplex sc;
    for (const auto& l : labels) sc.vertices.intern(l);

    std::set<std::vector<long>> all;
    for (const auto& f : facets) {
        std::vector<long> ids;
        for (const auto& l : f) ids.push_back(sc.vertices.find(l));
        std::sort(ids.begin(), ids.end());
        if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
            throw InvalidInput("facet lists a vertex twice");
        // Insert every nonempty subset (closure under faces).
        const std::size_t k = ids.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
            std::vector<long> sub;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (std::size_t{1} << b)) sub.push_back(ids[b]);
            all.insert(std::move(sub));
        }
    }
    for (const auto& s : all) {
        const long d = static_cast<long>(s.size()) - 1;
        while (sc.dim() < d) sc.simplices.emplace_back();
        sc.simplices[static_cast<std::size_t>(d)].push_back(s);
    }
    for (auto& level : sc.simplices) std::sort(level.begin(), level.end());
    return sc;
}

}  // namespace pathhom
