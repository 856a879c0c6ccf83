#ifndef KGRAPH_PATH_HPP
#define KGRAPH_PATH_HPP

#include <kgraph/skeleton.hpp>

#include <optional>
#include <string>
#include <vector>

namespace kgraph {

// A composable edge word in color-sorted normal form: all color-1 edges
// first, then color-2, and so on. The factorisation property makes any
// fixed color word a canonical form, so two paths are equal iff their
// normal-form sequences (and, for degree zero, their vertices) agree.
// Vertices are the degree-0 paths. Immutable value type.
class Path {
public:
    static Path at_vertex(const Skeleton& sk, int vertex);
    static Path of_edge(const Skeleton& sk, int edge);
    // Accepts the edges in any valid composable order and normalizes.
    static Path from_edges(const Skeleton& sk, const std::vector<int>& edges);

    const Skeleton& skeleton() const { return *sk_; }
    const std::vector<int>& edges() const { return edges_; }
    const Degree& degree() const { return degree_; }
    int source() const { return source_; }
    int range() const { return range_; }
    bool is_vertex() const { return edges_.empty(); }
    std::size_t length() const { return edges_.size(); }

    bool operator==(const Path& o) const {
        return source_ == o.source_ && edges_ == o.edges_;
    }
    bool operator!=(const Path& o) const { return !(*this == o); }
    bool operator<(const Path& o) const {
        if (degree_ != o.degree_) return degree_ < o.degree_;
        if (edges_ != o.edges_) return edges_ < o.edges_;
        return source_ < o.source_;
    }

private:
    Path(const Skeleton& sk, std::vector<int> edges, int source);

    const Skeleton* sk_;
    std::vector<int> edges_;
    Degree degree_;
    int source_;
    int range_;
};

// Defined iff range(a) = source(b); the undefined outcome is not an error.
// The result's normal form is concatenation followed by square rewrites.
std::optional<Path> compose(const Path& a, const Path& b);

// The unique edge sequence realizing p with the given color word, reached
// by adjacent square swaps. The word must be a permutation of p's color
// multiset. Schedule independence is guaranteed by skeleton associativity.
std::vector<int> refactor(const Path& p, const std::vector<int>& colorword);

// The segment p(a, b): the unique q of degree b-a with p = x q y,
// d(x) = a, d(y) = d(p) - b. Requires 0 <= a <= b <= d(p) componentwise.
Path segment(const Path& p, const Degree& a, const Degree& b);

// True iff q = p(0, d(q)).
bool has_prefix(const Path& p, const Path& q);

// All paths of degree exactly n, optionally restricted to a source vertex.
std::vector<Path> enumerate_paths(const Skeleton& sk, const Degree& n,
                                  std::optional<int> source = std::nullopt);

// Paths of every degree <= n componentwise.
std::vector<Path> enumerate_paths_up_to(const Skeleton& sk, const Degree& n);

// Textual literal: the vertex id for degree 0, else edge ids joined by '.'
// in any composable order (parsing normalizes).
std::string path_literal(const Path& p);
Path parse_path_literal(const Skeleton& sk, const std::string& text);

}  // namespace kgraph

#endif
