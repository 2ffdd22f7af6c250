#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pathhom/errors.hpp"

namespace pathhom {

// Interns arbitrary string labels to dense 0-based ids. Iteration order is the
// insertion order, which downstream code relies on for reproducible bases.
class VertexTable {
  public:
    long intern(const std::string& label);
    long find(const std::string& label) const;  // -1 when absent
    const std::string& label(long id) const;
    long size() const { return static_cast<long>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    bool operator==(const VertexTable& o) const { return labels_ == o.labels_; }

  private:
    std::vector<std::string> labels_;
    std::vector<std::pair<std::string, long>> index_;  // sorted by label
};

// An elementary path as a sequence of vertex ids; an n-path has n+1 entries.
using Path = std::vector<long>;

inline long path_dim(const Path& p) { return static_cast<long>(p.size()) - 1; }

bool path_is_regular(const Path& p);

std::string path_to_string(const Path& p, const VertexTable& vt);

// All faces of p with their signs: [((-1)^q, p with entry q omitted)] for
// q = 0..dim. Non-regular faces are included; callers drop them as needed.
struct Face {
    int sign;  // +1 or -1
    Path path;
};
std::vector<Face> boundary_faces(const Path& p);

Path face_of(const Path& p, long q);

struct ValidationReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

// A path complex: per-dimension sorted lists of elementary paths.
struct PathComplex {
    VertexTable vertices;
    std::vector<std::vector<Path>> paths;  // paths[n] sorted lexicographically
    bool regular = true;     // true iff every stored path is regular
    bool exhaustive = true;  // stored paths are ALL paths of the complex
                             // (false when a dimension cutoff truncated it)

    long top_dim() const { return static_cast<long>(paths.size()) - 1; }
    long count(long n) const {
        return (n >= 0 && n <= top_dim()) ? static_cast<long>(paths[n].size()) : 0;
    }
    const Path& path_at(long n, long i) const { return paths[n][static_cast<std::size_t>(i)]; }
    long index_of(long n, const Path& p) const;  // -1 when absent
    bool contains(long n, const Path& p) const { return index_of(n, p) >= 0; }

    // Sorts and dedupes every level, drops trailing empty levels, recomputes
    // the regular flag. Every constructor in this library ends with this.
    void normalize();
};

// Structural axioms: truncation closure, vertex-id ranges, duplicate paths,
// non-empty dimension 0, regularity when the flag claims it.
ValidationReport validate_path_complex(const PathComplex& pc);

// Throwing wrapper for pipeline entry points.
void require_valid(const PathComplex& pc);

struct Digraph {
    VertexTable vertices;
    std::vector<std::pair<long, long>> edges;  // sorted, unique, no self-loops

    void add_edge(long from, long to);
    bool has_edge(long from, long to) const;
    std::vector<long> out_neighbors(long v) const;
    void normalize();  // sort + dedupe edges
};

// All directed walks of length 0..max_dim as a path complex. Regular by
// construction (no self-loops). `budget_paths` caps the total number of
// stored elementary paths; exceeding it raises BudgetExceeded. The result is
// marked exhaustive unless some walk of length max_dim extends further.
PathComplex path_complex_of_digraph(const Digraph& g, long max_dim, long budget_paths);

// A finite abstract simplicial complex, closed under subsets. Vertex ids are
// assigned in lexicographic label order; each simplex is a sorted id tuple.
struct SimplicialComplex {
    VertexTable vertices;
    std::vector<std::vector<std::vector<long>>> simplices;  // [d] -> sorted tuples

    long dim() const { return static_cast<long>(simplices.size()) - 1; }
    long count(long d) const {
        return (d >= 0 && d <= dim()) ? static_cast<long>(simplices[d].size()) : 0;
    }
    long index_of(long d, const std::vector<long>& s) const;  // -1 when absent
};

SimplicialComplex simplicial_from_facets(const std::vector<std::vector<std::string>>& facets);

}  // namespace pathhom
