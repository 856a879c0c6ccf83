#ifndef KGRAPH_SKELETON_HPP
#define KGRAPH_SKELETON_HPP

#include <kgraph/degree.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kgraph {

// Raw 1-skeleton presentation before validation: a vertex set, colored
// edges, and the factorisation squares. Colors are 1-based (1..k).
struct SkeletonDoc {
    int k = 0;
    std::vector<std::string> vertices;
    struct EdgeDecl {
        std::string id;
        int color = 0;
        std::string source;
        std::string range;
    };
    std::vector<EdgeDecl> edges;
    struct SquareDecl {
        std::pair<std::string, std::string> left;   // (f, g), color(f) < color(g)
        std::pair<std::string, std::string> right;  // (g', f'), fg = g'f'
    };
    std::vector<SquareDecl> squares;
};

enum class SkeletonErrorKind {
    Parse,
    DanglingReference,
    DuplicateId,
    SquareEndpoints,
    Bijectivity,
    Associativity,
};

class SkeletonError : public std::runtime_error {
public:
    SkeletonError(SkeletonErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}
    SkeletonErrorKind kind() const { return kind_; }

private:
    SkeletonErrorKind kind_;
};

// A color triple where the two maximal chains of adjacent swaps disagree.
struct AssociativityViolation {
    std::vector<int> triple;        // edge indices (f, g, h), colors i < j < l
    std::vector<int> route_a;       // edge word after swaps (1,2)(2,3)(1,2)
    std::vector<int> route_b;       // edge word after swaps (2,3)(1,2)(2,3)
    std::string describe(const class Skeleton& sk) const;
};

// Validated 1-skeleton of a product system of graphs over N^k.
//
// Construction enforces reference integrity, the square endpoint
// conditions, and bijectivity of the square map per color pair.
// Associativity of the squares (the condition that makes path
// refactoring schedule-independent) is a separate pass so callers can
// collect every offending triple; load() runs both.
//
// Immutable after construction; safe to share across threads.
class Skeleton {
public:
    struct Edge {
        std::string id;
        int color;   // 1..k
        int source;  // vertex index
        int range;   // vertex index
    };
    struct Square {
        int f, g;    // left: colors i < j, range(f) = source(g)
        int gp, fp;  // right: fg = g'f'
    };

    // Builds and structurally validates; throws SkeletonError.
    // Does not run the associativity pass.
    static Skeleton build(const SkeletonDoc& doc);

    // build() + check_associativity(); throws on any violation.
    static Skeleton load(const SkeletonDoc& doc);

    int k() const { return k_; }
    std::size_t vertex_count() const { return vertex_ids_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::string& vertex_id(int v) const { return vertex_ids_.at(v); }
    const Edge& edge(int e) const { return edges_.at(e); }
    const std::vector<Square>& squares() const { return squares_; }

    std::optional<int> find_vertex(const std::string& id) const;
    std::optional<int> find_edge(const std::string& id) const;

    // Edges of a given color leaving `source`; composition order, so these
    // start paths at that vertex.
    const std::vector<int>& edges_by_color_source(int color, int source) const;
    std::vector<int> edges_of_color(int color) const;

    // Applies the square containing adjacent edges (x, y), color(x) != color(y),
    // range(x) = source(y): returns the pair (y2, x2) with xy = y2 x2 and the
    // colors exchanged. Bijectivity guarantees existence and uniqueness.
    std::pair<int, int> swap_adjacent(int x, int y) const;

    SkeletonDoc to_doc() const;

    Degree zero_degree() const { return Degree::zero(static_cast<std::size_t>(k_)); }
    Degree unit_degree(int color) const {
        return Degree::unit(static_cast<std::size_t>(k_), static_cast<std::size_t>(color - 1));
    }

private:
    Skeleton() = default;

    int k_ = 0;
    std::vector<std::string> vertex_ids_;
    std::map<std::string, int> vertex_index_;
    std::vector<Edge> edges_;
    std::map<std::string, int> edge_index_;
    std::vector<Square> squares_;
    // (x, y) -> swapped pair, both orientations of every square
    std::map<std::pair<int, int>, std::pair<int, int>> swap_;
    // [color-1][vertex] -> outgoing edge indices
    std::vector<std::vector<std::vector<int>>> by_color_source_;
};

// Lists every composable color-(i,j,l) triple, i < j < l, on which the two
// swap chains from word (i,j,l) to (l,j,i) disagree. Precondition:
// bijectivity holds (guaranteed by Skeleton::build). Order-insensitive in
// the square list by construction: only the swap map is consulted.
std::vector<AssociativityViolation> check_associativity(const Skeleton& sk);

}  // namespace kgraph

#endif
