#include <kgraph/skeleton.hpp>

#include <kgraph/parallel.hpp>

#include <algorithm>
#include <array>
#include <sstream>

namespace kgraph {

namespace {

std::string pair_name(const Skeleton& sk, int a, int b) {
    return "(" + sk.edge(a).id + ", " + sk.edge(b).id + ")";
}

}  // namespace

std::string AssociativityViolation::describe(const Skeleton& sk) const {
    std::ostringstream os;
    os << "triple (" << sk.edge(triple[0]).id << ", " << sk.edge(triple[1]).id << ", "
       << sk.edge(triple[2]).id << "): routes give (";
    for (std::size_t i = 0; i < route_a.size(); ++i)
        os << (i ? ", " : "") << sk.edge(route_a[i]).id;
    os << ") vs (";
    for (std::size_t i = 0; i < route_b.size(); ++i)
        os << (i ? ", " : "") << sk.edge(route_b[i]).id;
    os << ")";
    return os.str();
}

Skeleton Skeleton::build(const SkeletonDoc& doc) {
    Skeleton sk;
    if (doc.k < 1)
        throw SkeletonError(SkeletonErrorKind::Parse, "k must be >= 1");
    sk.k_ = doc.k;

    for (const auto& v : doc.vertices) {
        if (!sk.vertex_index_.emplace(v, static_cast<int>(sk.vertex_ids_.size())).second)
            throw SkeletonError(SkeletonErrorKind::DuplicateId, "duplicate vertex id '" + v + "'");
        sk.vertex_ids_.push_back(v);
    }

    for (const auto& e : doc.edges) {
        if (e.color < 1 || e.color > doc.k)
            throw SkeletonError(SkeletonErrorKind::Parse,
                                "edge '" + e.id + "' has color outside 1.." + std::to_string(doc.k));
        auto src = sk.vertex_index_.find(e.source);
        auto rng = sk.vertex_index_.find(e.range);
        if (src == sk.vertex_index_.end() || rng == sk.vertex_index_.end())
            throw SkeletonError(SkeletonErrorKind::DanglingReference,
                                "edge '" + e.id + "' references an undeclared vertex");
        if (sk.vertex_index_.count(e.id))
            throw SkeletonError(SkeletonErrorKind::DuplicateId,
                                "edge id '" + e.id + "' collides with a vertex id");
        if (!sk.edge_index_.emplace(e.id, static_cast<int>(sk.edges_.size())).second)
            throw SkeletonError(SkeletonErrorKind::DuplicateId, "duplicate edge id '" + e.id + "'");
        sk.edges_.push_back(Edge{e.id, e.color, src->second, rng->second});
    }

    sk.by_color_source_.assign(static_cast<std::size_t>(sk.k_),
                               std::vector<std::vector<int>>(sk.vertex_ids_.size()));
    for (int e = 0; e < static_cast<int>(sk.edges_.size()); ++e) {
        const Edge& ed = sk.edges_[e];
        sk.by_color_source_[ed.color - 1][ed.source].push_back(e);
    }

    auto edge_ref = [&](const std::string& id) {
        auto it = sk.edge_index_.find(id);
        if (it == sk.edge_index_.end())
            throw SkeletonError(SkeletonErrorKind::DanglingReference,
                                "square references unknown edge '" + id + "'");
        return it->second;
    };

    for (const auto& sq : doc.squares) {
        int f = edge_ref(sq.left.first);
        int g = edge_ref(sq.left.second);
        int gp = edge_ref(sq.right.first);
        int fp = edge_ref(sq.right.second);
        const Edge& ef = sk.edges_[f];
        const Edge& eg = sk.edges_[g];
        const Edge& egp = sk.edges_[gp];
        const Edge& efp = sk.edges_[fp];
        std::string name = pair_name(sk, f, g) + " = " + pair_name(sk, gp, fp);
        if (!(ef.color < eg.color && efp.color == ef.color && egp.color == eg.color))
            throw SkeletonError(SkeletonErrorKind::SquareEndpoints,
                                "square " + name + ": colors must satisfy color(f)=color(f')<color(g)=color(g')");
        if (ef.range != eg.source || egp.range != efp.source)
            throw SkeletonError(SkeletonErrorKind::SquareEndpoints,
                                "square " + name + ": sides are not composable");
        if (egp.source != ef.source || efp.range != eg.range)
            throw SkeletonError(SkeletonErrorKind::SquareEndpoints,
                                "square " + name + ": sides do not share endpoints");
        sk.squares_.push_back(Square{f, g, gp, fp});
        if (!sk.swap_.emplace(std::make_pair(f, g), std::make_pair(gp, fp)).second)
            throw SkeletonError(SkeletonErrorKind::Bijectivity,
                                "pair " + pair_name(sk, f, g) + " appears on the left of two squares");
        if (!sk.swap_.emplace(std::make_pair(gp, fp), std::make_pair(f, g)).second)
            throw SkeletonError(SkeletonErrorKind::Bijectivity,
                                "pair " + pair_name(sk, gp, fp) + " appears on the right of two squares");
    }

    // Bijectivity: every composable two-color pair must occur in the swap
    // map, as a left side when ascending and a right side when descending.
    for (int x = 0; x < static_cast<int>(sk.edges_.size()); ++x) {
        for (int y = 0; y < static_cast<int>(sk.edges_.size()); ++y) {
            const Edge& ex = sk.edges_[x];
            const Edge& ey = sk.edges_[y];
            if (ex.color == ey.color || ex.range != ey.source) continue;
            if (!sk.swap_.count({x, y}))
                throw SkeletonError(SkeletonErrorKind::Bijectivity,
                                    "composable pair " + pair_name(sk, x, y) + " is covered by no square");
        }
    }

    return sk;
}

Skeleton Skeleton::load(const SkeletonDoc& doc) {
    Skeleton sk = build(doc);
    auto violations = check_associativity(sk);
    if (!violations.empty())
        throw SkeletonError(SkeletonErrorKind::Associativity,
                            "associativity fails on " + std::to_string(violations.size()) +
                                " triple(s); first: " + violations.front().describe(sk));
    return sk;
}

std::optional<int> Skeleton::find_vertex(const std::string& id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> Skeleton::find_edge(const std::string& id) const {
    auto it = edge_index_.find(id);
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
}

const std::vector<int>& Skeleton::edges_by_color_source(int color, int source) const {
    return by_color_source_.at(static_cast<std::size_t>(color - 1)).at(static_cast<std::size_t>(source));
}

std::vector<int> Skeleton::edges_of_color(int color) const {
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e)
        if (edges_[e].color == color) out.push_back(e);
    return out;
}

std::pair<int, int> Skeleton::swap_adjacent(int x, int y) const {
    auto it = swap_.find({x, y});
    if (it == swap_.end())
        throw std::logic_error("no square for adjacent pair " + pair_name(*this, x, y));
    return it->second;
}

SkeletonDoc Skeleton::to_doc() const {
    SkeletonDoc doc;
    doc.k = k_;
    doc.vertices = vertex_ids_;
    for (const Edge& e : edges_)
        doc.edges.push_back({e.id, e.color, vertex_ids_[e.source], vertex_ids_[e.range]});
    for (const Square& s : squares_)
        doc.squares.push_back({{edges_[s.f].id, edges_[s.g].id}, {edges_[s.gp].id, edges_[s.fp].id}});
    return doc;
}

namespace {

// One adjacent swap in a 3-edge word; positions pos, pos+1 must have
// distinct colors.
void swap_at(const Skeleton& sk, std::vector<int>& word, int pos) {
    auto [a, b] = sk.swap_adjacent(word[pos], word[pos + 1]);
    word[pos] = a;
    word[pos + 1] = b;
}

}  // namespace

std::vector<AssociativityViolation> check_associativity(const Skeleton& sk) {
    // Composable triples (f, g, h) with color(f) < color(g) < color(h).
    std::vector<std::array<int, 3>> triples;
    for (int f = 0; f < static_cast<int>(sk.edge_count()); ++f) {
        const auto& ef = sk.edge(f);
        for (int color_g = ef.color + 1; color_g <= sk.k(); ++color_g) {
            for (int g : sk.edges_by_color_source(color_g, ef.range)) {
                const auto& eg = sk.edge(g);
                for (int color_h = color_g + 1; color_h <= sk.k(); ++color_h) {
                    for (int h : sk.edges_by_color_source(color_h, eg.range))
                        triples.push_back({f, g, h});
                }
            }
        }
    }

    std::vector<std::optional<AssociativityViolation>> found(triples.size());
    parallel_for(triples.size(), [&](std::size_t t) {
        const auto& tr = triples[t];
        std::vector<int> a{tr[0], tr[1], tr[2]};
        std::vector<int> b = a;
        // Two maximal chains rewriting color word (i,j,l) to (l,j,i).
        swap_at(sk, a, 0); swap_at(sk, a, 1); swap_at(sk, a, 0);
        swap_at(sk, b, 1); swap_at(sk, b, 0); swap_at(sk, b, 1);
        if (a != b)
            found[t] = AssociativityViolation{{tr[0], tr[1], tr[2]}, a, b};
    });

    std::vector<AssociativityViolation> out;
    for (auto& v : found)
        if (v) out.push_back(std::move(*v));
    return out;
}

}  // namespace kgraph
